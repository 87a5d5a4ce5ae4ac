#include "onticlab/constructions.hpp"

#include <cmath>

namespace onticlab {

bool antidist_criterion(double a, double b, double c) {
  for (double v : {a, b, c})
    if (!(v >= 0.0 && v <= 1.0)) throw OutOfRange("criterion overlaps must lie in [0, 1]");
  const double s = a + b + c;
  if (!(s < 1.0)) return false;
  // The family triples satisfy the second inequality with exact equality, so the
  // comparison gets a rounding-level slack (centralized in the tolerance record).
  return (1.0 - s) * (1.0 - s) >= 4.0 * a * b * c - tol().criterion_slack;
}

namespace {

Onb standard_basis(int d) {
  Onb b;
  for (int k = 0; k < d; ++k) b.vectors.push_back(basis_vector(d, k));
  return b;
}

StateVector three_term_state(int d, double c0, double c1, int extra_index, double c_extra) {
  StateVector v(std::vector<cplx>(static_cast<std::size_t>(d), cplx(0.0, 0.0)));
  v.amp[0] = cplx(c0, 0.0);
  v.amp[1] = cplx(c1, 0.0);
  v.amp[static_cast<std::size_t>(extra_index)] = cplx(c_extra, 0.0);
  return v;
}

}  // namespace

Thm1Family build_thm1(double alpha, int d) {
  if (!(alpha > 0.0 && alpha < 1.0 / std::sqrt(2.0)))
    throw AlphaOutOfRange("thm1 needs alpha in (0, 1/sqrt2)");
  if (d < 4) throw DimensionTooSmall("thm1 needs d >= 4");

  Thm1Family f;
  f.alpha = alpha;
  const double a2 = alpha * alpha;
  f.coeffs.alpha = alpha;
  f.coeffs.beta = std::sqrt(2.0) * a2;
  f.coeffs.gamma_c = std::sqrt(1.0 - a2 - 2.0 * a2 * a2);
  f.coeffs.delta = 1.0 - 2.0 * a2;
  f.coeffs.eta = std::sqrt(2.0) * alpha;
  f.coeffs.kappa = std::sqrt(2.0 * a2 * (1.0 - 2.0 * a2));

  f.psi = three_term_state(d, f.coeffs.alpha, f.coeffs.beta, 2, f.coeffs.gamma_c);
  f.phi = three_term_state(d, f.coeffs.delta, f.coeffs.eta, 3, f.coeffs.kappa);
  f.basis = standard_basis(d);
  check_state(f.psi);
  check_state(f.phi);
  return f;
}

Thm2Family build_thm2(double alpha, int d) {
  const double a2 = alpha * alpha;
  if (!(a2 > 0.0 && a2 < 0.25)) throw AlphaOutOfRange("thm2 needs alpha^2 in (0, 1/4)");
  if (d < 4) throw DimensionTooSmall("thm2 needs d >= 4");

  Thm2Family f;
  f.alpha = alpha;
  f.coeffs.alpha = alpha;
  // beta = eta = sqrt2 alpha^{3/2} keeps <phi_i|psi> = alpha while letting every phi_i
  // use its own extra direction.
  f.coeffs.beta = std::sqrt(2.0) * std::pow(alpha, 1.5);
  f.coeffs.eta = f.coeffs.beta;
  f.coeffs.gamma_c = std::sqrt(1.0 - a2 - 2.0 * a2 * alpha);
  f.coeffs.delta = 1.0 - 2.0 * a2;
  f.coeffs.kappa = std::sqrt(4.0 * a2 - 4.0 * a2 * a2 - 2.0 * a2 * alpha);

  f.psi = three_term_state(d, f.coeffs.alpha, f.coeffs.beta, 2, f.coeffs.gamma_c);
  for (int i = 3; i < d; ++i)
    f.phis.push_back(three_term_state(d, f.coeffs.delta, f.coeffs.eta, i, f.coeffs.kappa));
  f.basis = standard_basis(d);
  check_state(f.psi);
  for (const StateVector& phi : f.phis) check_state(phi);
  return f;
}

double alpha_from_state(const StateVector& psi) {
  check_state(psi);
  for (const cplx& a : psi.amp) {
    const double sq = std::norm(a);
    if (sq > 0.0 && sq < 0.5) return std::sqrt(sq);
  }
  throw AlphaOutOfRange("no basis component with squared amplitude in (0, 1/2)");
}

BornTable born_table(const std::vector<StateVector>& states,
                     const std::vector<Povm>& measurements) {
  for (const Povm& m : measurements) check_povm(m);
  BornTable t;
  t.p.resize(states.size());
  for (std::size_t s = 0; s < states.size(); ++s) {
    t.p[s].resize(measurements.size());
    for (std::size_t m = 0; m < measurements.size(); ++m) {
      const Povm& povm = measurements[m];
      if (povm.dim() != states[s].dim())
        throw DimensionMismatch("state and measurement dimensions differ");
      double row_sum = 0.0;
      for (const Operator& e : povm.elements) {
        const cplx v = expectation(states[s], e);
        if (std::abs(v.imag()) > tol().born_imag)
          throw NumericalFailure("Born probability has a large imaginary residue");
        t.p[s][m].push_back(v.real());
        row_sum += v.real();
      }
      if (std::abs(row_sum - 1.0) > tol().born_row_sum)
        throw InvalidPovm("Born row does not sum to 1");
    }
  }
  return t;
}

namespace {

CriterionTriple make_triple(const std::string& s1, const StateVector& v1,
                            const std::string& s2, const StateVector& v2,
                            const std::string& s3, const StateVector& v3) {
  CriterionTriple t;
  t.states = {s1, s2, s3};
  t.a = std::norm(inner_product(v1, v2));
  t.b = std::norm(inner_product(v1, v3));
  t.c = std::norm(inner_product(v2, v3));
  t.pass = antidist_criterion(t.a, t.b, t.c);
  return t;
}

}  // namespace

std::vector<CriterionTriple> thm1_triples(const Thm1Family& f) {
  return {make_triple("ket0", f.basis.vectors[0], "psi", f.psi, "phi", f.phi)};
}

std::vector<CriterionTriple> thm2_triples(const Thm2Family& f) {
  std::vector<CriterionTriple> out;
  const StateVector& ket0 = f.basis.vectors[0];
  for (std::size_t i = 0; i < f.phis.size(); ++i)
    out.push_back(make_triple("ket0", ket0, "psi", f.psi,
                              "phi" + std::to_string(i + 3), f.phis[i]));
  for (std::size_t i = 0; i < f.phis.size(); ++i)
    for (std::size_t j = i + 1; j < f.phis.size(); ++j)
      out.push_back(make_triple("psi", f.psi, "phi" + std::to_string(i + 3), f.phis[i],
                                "phi" + std::to_string(j + 3), f.phis[j]));
  return out;
}

}  // namespace onticlab
