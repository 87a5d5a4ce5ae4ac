#include "onticlab/povm_synth.hpp"

#include <cmath>
#include <sstream>

#include "onticlab/constructions.hpp"

namespace onticlab {

void check_povm(const Povm& p) {
  if (p.elements.empty()) throw InvalidPovm("POVM has no elements");
  if (p.labels.size() != p.elements.size())
    throw InvalidPovm("POVM label count does not match element count");
  const int d = p.elements.front().dim;
  Operator sum(d);
  for (const Operator& e : p.elements) {
    if (e.dim != d) throw InvalidPovm("POVM elements have mixed dimensions");
    if (hermiticity_defect(e) > tol().povm_hermitian)
      throw InvalidPovm("POVM element is not Hermitian");
    EigResult eig = hermitian_eig(hermitized(e));
    if (eig.values.back() < -tol().povm_psd)
      throw InvalidPovm("POVM element has a negative eigenvalue");
    sum = add(sum, e);
  }
  if (fro_dist(sum, identity_op(d)) > tol().povm_completeness)
    throw InvalidPovm("POVM elements do not sum to the identity");
}

Povm projective_measurement(const Onb& basis) {
  Povm p;
  for (int k = 0; k < basis.size(); ++k) {
    p.labels.push_back(std::to_string(k));
    p.elements.push_back(outer(basis.vectors[k], basis.vectors[k]));
  }
  return p;
}

AntidistReport verify_antidistinguishing(const Povm& p,
                                         const std::vector<StateVector>& states) {
  if (p.arity() != static_cast<int>(states.size()))
    throw ArityMismatch("one POVM element per state is required");
  check_povm(p);
  AntidistReport r;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].dim() != p.dim())
      throw DimensionMismatch("state and POVM dimensions differ");
    r.max_error = std::max(r.max_error, std::abs(expectation(states[i], p.elements[i]).real()));
  }
  r.pass = r.max_error <= tol().antidist_pass;
  return r;
}

namespace {

// Orthonormal basis of the span of the given states (threshold 1e-10 on residuals).
std::vector<StateVector> span_basis(const std::vector<StateVector>& states) {
  std::vector<StateVector> cols;
  for (const StateVector& s : states) {
    StateVector r = s;
    for (int pass = 0; pass < 2; ++pass)
      for (const StateVector& c : cols) r = sub(r, scaled(c, inner_product(c, r)));
    const double n = norm(r);
    if (n > 1e-10) cols.push_back(scaled(r, cplx(1.0 / n, 0.0)));
  }
  return cols;
}

// Projection onto {X Hermitian, X PSD, X x = 0}: compress onto the orthocomplement of
// x, hermitize, clip negative eigenvalues, embed back.
Operator project_null_psd(const Operator& m, const Onb& perp_frame) {
  const int r = m.dim;
  const int k = perp_frame.size();  // r - 1 vectors orthogonal to x
  Operator compressed(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      // <q_i| M |q_j>
      compressed.at(i, j) =
          inner_product(perp_frame.vectors[i], apply(m, perp_frame.vectors[j]));
    }
  Operator fixed = psd_project(hermitized(compressed));
  Operator out(r);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      out = add(out, scaled(outer(perp_frame.vectors[i], perp_frame.vectors[j]),
                            fixed.at(i, j)));
  return out;
}

}  // namespace

SynthesisResult synthesize_antidistinguishing(const std::vector<StateVector>& states,
                                              int max_iters, double eps) {
  if (states.size() != 3) throw ArityMismatch("synthesis takes exactly three states");
  for (const StateVector& s : states) check_state(s);
  const int d = states[0].dim();
  for (const StateVector& s : states)
    if (s.dim() != d) throw DimensionMismatch("states have mixed dimensions");

  const double a = std::norm(inner_product(states[0], states[1]));
  const double b = std::norm(inner_product(states[0], states[2]));
  const double c = std::norm(inner_product(states[1], states[2]));
  if (!antidist_criterion(a, b, c))
    throw CriterionFailed("pairwise overlaps fail the anti-distinguishability criterion");

  // Work inside the span of the three states; the orthocomplement takes an equal share
  // of the identity at the end and never affects the null conditions.
  const std::vector<StateVector> span = span_basis(states);
  const int r = static_cast<int>(span.size());
  std::vector<StateVector> xs;  // span coordinates of the states
  for (const StateVector& s : states) {
    StateVector x(std::vector<cplx>(static_cast<std::size_t>(r)));
    for (int k = 0; k < r; ++k) x.amp[static_cast<std::size_t>(k)] = inner_product(span[k], s);
    xs.push_back(x);
  }
  std::vector<Onb> perp_frames;
  for (const StateVector& x : xs) {
    Onb full = complete_onb({scaled(x, cplx(1.0 / norm(x), 0.0))}, r);
    Onb perp;
    perp.vectors.assign(full.vectors.begin() + 1, full.vectors.end());
    perp_frames.push_back(perp);
  }

  // Dykstra between the affine set {sum X = I} and the cone product, with one
  // correction term per set.
  std::vector<Operator> x_cur(3, scaled(identity_op(r), cplx(1.0 / 3.0, 0.0)));
  std::vector<Operator> p_corr(3, Operator(r));
  std::vector<Operator> q_corr(3, Operator(r));

  double residual = 0.0;
  int iterations = 0;
  for (int it = 0; it < max_iters; ++it) {
    // Affine projection of x + p: subtract a third of the completeness defect.
    std::vector<Operator> y(3, Operator(r));
    Operator defect(r);
    for (int i = 0; i < 3; ++i) {
      y[i] = add(x_cur[i], p_corr[i]);
      defect = add(defect, y[i]);
    }
    defect = sub(defect, identity_op(r));
    defect = scaled(defect, cplx(1.0 / 3.0, 0.0));
    for (int i = 0; i < 3; ++i) {
      const Operator yi = sub(y[i], defect);
      p_corr[i] = sub(y[i], yi);
      y[i] = yi;
    }
    // Cone projection of y + q.
    for (int i = 0; i < 3; ++i) {
      const Operator z = add(y[i], q_corr[i]);
      const Operator xi = project_null_psd(z, perp_frames[i]);
      q_corr[i] = sub(z, xi);
      x_cur[i] = xi;
    }

    iterations = it + 1;
    // Residual on the cone-side iterate. The completeness defect is the live error;
    // the PSD and null defects are zero by construction, so measure them only when the
    // affine defect is small enough to consider stopping.
    Operator total(r);
    for (const Operator& xi : x_cur) total = add(total, xi);
    residual = fro_dist(total, identity_op(r));
    if (residual <= eps || it + 1 == max_iters) {
      for (int i = 0; i < 3; ++i) {
        EigResult e = hermitian_eig(hermitized(x_cur[i]));
        residual = std::max(residual, std::max(0.0, -e.values.back()));
        residual = std::max(residual, std::abs(expectation(xs[i], x_cur[i]).real()));
      }
    }
    if (residual <= eps) break;
  }
  if (residual > eps) {
    std::ostringstream msg;
    msg << "Dykstra residual " << residual << " after " << iterations
        << " iterations (target " << eps << ")";
    throw NoConvergence(msg.str());
  }

  // Embed: E_i = S X_i S^dag + (I - S S^dag)/3.
  Operator complement = identity_op(d);
  for (const StateVector& s : span) complement = sub(complement, outer(s, s));
  complement = scaled(complement, cplx(1.0 / 3.0, 0.0));

  SynthesisResult result;
  result.iterations = iterations;
  result.residual = residual;
  for (int i = 0; i < 3; ++i) {
    Operator e = complement;
    for (int k = 0; k < r; ++k)
      for (int l = 0; l < r; ++l)
        e = add(e, scaled(outer(span[k], span[l]), x_cur[i].at(k, l)));
    result.povm.elements.push_back(hermitized(e));
    result.povm.labels.push_back("not_" + std::to_string(i));
  }
  return result;
}

SynthesisResult synthesize_antidistinguishing(const std::vector<StateVector>& states) {
  return synthesize_antidistinguishing(states, tol().synth_max_iters, tol().synth_tol);
}

double helstrom_bound(double overlap) {
  if (!(overlap >= 0.0 && overlap <= 1.0)) throw OutOfRange("overlap must lie in [0, 1]");
  return 1.0 - std::sqrt(1.0 - overlap);
}

HelstromResult helstrom_measurement(const StateVector& psi, const StateVector& phi) {
  check_state(psi);
  check_state(phi);
  if (psi.dim() != phi.dim()) throw DimensionMismatch("states have mixed dimensions");
  const double overlap = std::norm(inner_product(psi, phi));
  if (overlap >= 1.0 - tol().helstrom_identical)
    throw IdenticalStates("states coincide; no discriminating measurement exists");

  EigResult e = hermitian_eig(sub(outer(psi, psi), outer(phi, phi)));
  Operator e0(psi.dim());
  Operator e1(psi.dim());
  for (std::size_t k = 0; k < e.values.size(); ++k) {
    const Operator proj = outer(e.vectors.vectors[k], e.vectors.vectors[k]);
    // Zero eigenvalues go to the first outcome.
    if (e.values[k] >= 0.0)
      e0 = add(e0, proj);
    else
      e1 = add(e1, proj);
  }
  HelstromResult r;
  r.povm.labels = {"state0", "state1"};
  r.povm.elements = {e0, e1};
  r.error = 0.5 * expectation(psi, e1).real() + 0.5 * expectation(phi, e0).real();
  return r;
}

}  // namespace onticlab
