#include "onticlab/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace onticlab {

double norm(const StateVector& v) {
  double s = 0.0;
  for (const cplx& c : v.amp) s += std::norm(c);
  return std::sqrt(s);
}

void check_state(const StateVector& v) {
  if (v.dim() < 2) throw InvalidInput("state vector needs dim >= 2");
  if (std::abs(norm(v) - 1.0) > tol().unit_norm)
    throw InvalidInput("state vector is not unit norm");
}

cplx inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("inner_product on unequal dimensions");
  cplx s(0.0, 0.0);
  for (int i = 0; i < a.dim(); ++i) s += std::conj(a.amp[i]) * b.amp[i];
  return s;
}

StateVector scaled(const StateVector& v, cplx c) {
  StateVector r = v;
  for (cplx& x : r.amp) x *= c;
  return r;
}

StateVector add(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("vector add on unequal dimensions");
  StateVector r = a;
  for (int i = 0; i < b.dim(); ++i) r.amp[i] += b.amp[i];
  return r;
}

StateVector sub(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("vector sub on unequal dimensions");
  StateVector r = a;
  for (int i = 0; i < b.dim(); ++i) r.amp[i] -= b.amp[i];
  return r;
}

StateVector basis_vector(int dim, int k) {
  StateVector v(std::vector<cplx>(dim, cplx(0.0, 0.0)));
  v.amp[k] = cplx(1.0, 0.0);
  return v;
}

bool same_state(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) return false;
  return std::abs(std::norm(inner_product(a, b)) - 1.0) <= tol().state_equality;
}

Operator identity_op(int d) {
  Operator m(d);
  for (int i = 0; i < d; ++i) m.at(i, i) = cplx(1.0, 0.0);
  return m;
}

Operator outer(const StateVector& u, const StateVector& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch("outer product on unequal dimensions");
  Operator m(u.dim());
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < v.dim(); ++j) m.at(i, j) = u.amp[i] * std::conj(v.amp[j]);
  return m;
}

Operator adjoint(const Operator& m) {
  Operator r(m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) r.at(i, j) = std::conj(m.at(j, i));
  return r;
}

Operator matmul(const Operator& x, const Operator& y) {
  if (x.dim != y.dim) throw DimensionMismatch("matmul on unequal dimensions");
  Operator r(x.dim);
  for (int i = 0; i < x.dim; ++i)
    for (int k = 0; k < x.dim; ++k) {
      const cplx xv = x.at(i, k);
      if (xv == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < x.dim; ++j) r.at(i, j) += xv * y.at(k, j);
    }
  return r;
}

Operator add(const Operator& x, const Operator& y) {
  if (x.dim != y.dim) throw DimensionMismatch("operator add on unequal dimensions");
  Operator r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

Operator sub(const Operator& x, const Operator& y) {
  if (x.dim != y.dim) throw DimensionMismatch("operator sub on unequal dimensions");
  Operator r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

Operator scaled(const Operator& x, cplx c) {
  Operator r = x;
  for (cplx& v : r.a) v *= c;
  return r;
}

StateVector apply(const Operator& m, const StateVector& v) {
  if (m.dim != v.dim()) throw DimensionMismatch("operator apply on unequal dimensions");
  StateVector r(std::vector<cplx>(m.dim, cplx(0.0, 0.0)));
  for (int i = 0; i < m.dim; ++i) {
    cplx s(0.0, 0.0);
    for (int j = 0; j < m.dim; ++j) s += m.at(i, j) * v.amp[j];
    r.amp[i] = s;
  }
  return r;
}

double fro_norm(const Operator& m) {
  double s = 0.0;
  for (const cplx& c : m.a) s += std::norm(c);
  return std::sqrt(s);
}

double fro_dist(const Operator& x, const Operator& y) { return fro_norm(sub(x, y)); }

cplx trace(const Operator& m) {
  cplx s(0.0, 0.0);
  for (int i = 0; i < m.dim; ++i) s += m.at(i, i);
  return s;
}

cplx expectation(const StateVector& s, const Operator& e) {
  return inner_product(s, apply(e, s));
}

double hermiticity_defect(const Operator& m) {
  double worst = 0.0;
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j)
      worst = std::max(worst, std::abs(m.at(i, j) - std::conj(m.at(j, i))));
  return worst;
}

Operator hermitized(const Operator& m) {
  Operator r(m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j)
      r.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
  return r;
}

Onb complete_onb(const std::vector<StateVector>& partial, int dim) {
  if (dim < 2) throw DimensionMismatch("complete_onb needs dim >= 2");
  if (static_cast<int>(partial.size()) > dim)
    throw DimensionMismatch("more input vectors than the dimension admits");
  for (const StateVector& v : partial)
    if (v.dim() != dim) throw DimensionMismatch("input vector has wrong dimension");
  for (std::size_t i = 0; i < partial.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      if (std::abs(std::abs(inner_product(partial[i], partial[j])) - target) > tol().orthonormal)
        throw NotOrthonormalInput("input family is not orthonormal");
    }

  Onb onb;
  onb.vectors = partial;
  // Grow by the standard basis vector with the largest residual; projecting twice keeps
  // orthogonality tight when the family nearly contains a basis vector.
  std::vector<bool> used(static_cast<std::size_t>(dim), false);
  while (onb.size() < dim) {
    int best = -1;
    double best_norm = -1.0;
    StateVector best_res;
    for (int k = 0; k < dim; ++k) {
      if (used[static_cast<std::size_t>(k)]) continue;
      StateVector r = basis_vector(dim, k);
      for (int pass = 0; pass < 2; ++pass)
        for (const StateVector& v : onb.vectors) r = sub(r, scaled(v, inner_product(v, r)));
      const double n = norm(r);
      if (n > best_norm) {
        best_norm = n;
        best = k;
        best_res = r;
      }
    }
    if (best < 0 || best_norm < 1e-6)
      throw NumericalFailure("could not extend family to a full basis");
    used[static_cast<std::size_t>(best)] = true;
    onb.vectors.push_back(scaled(best_res, cplx(1.0 / best_norm, 0.0)));
  }
  return onb;
}

namespace {

double offdiag_norm(const Operator& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j)
      if (i != j) s += std::norm(m.at(i, j));
  return std::sqrt(s);
}

}  // namespace

EigResult hermitian_eig(const Operator& h) {
  if (h.dim < 1) throw DimensionMismatch("hermitian_eig on empty operator");
  if (hermiticity_defect(h) > tol().hermitian)
    throw NotHermitian("input operator is not Hermitian");

  const int d = h.dim;
  Operator a = hermitized(h);
  Operator v = identity_op(d);

  bool converged = offdiag_norm(a) < tol().eig_offdiag;
  for (int sweep = 0; sweep < tol().eig_max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < d - 1; ++p) {
      for (int q = p + 1; q < d; ++q) {
        const cplx apq = a.at(p, q);
        const double beta = std::abs(apq);
        if (beta < 1e-300) continue;
        const cplx phase = apq / beta;
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        // 2x2 rotation zeroing the (p,q) entry: with D = (app-aqq)/(2 beta), the
        // tangent solves t^2 - 2 D t - 1 = 0; the smaller-magnitude root keeps the
        // rotation angle under pi/4.
        const double bigd = (app - aqq) / (2.0 * beta);
        const double t = (bigd >= 0.0) ? -1.0 / (bigd + std::sqrt(bigd * bigd + 1.0))
                                       : 1.0 / (-bigd + std::sqrt(bigd * bigd + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cplx s = phase * (t * c);

        // A <- R^dagger A R with R = [[c, s], [-conj(s), c]] on rows/cols (p, q).
        for (int i = 0; i < d; ++i) {
          const cplx aip = a.at(i, p);
          const cplx aiq = a.at(i, q);
          a.at(i, p) = c * aip - std::conj(s) * aiq;
          a.at(i, q) = s * aip + c * aiq;
        }
        for (int j = 0; j < d; ++j) {
          const cplx apj = a.at(p, j);
          const cplx aqj = a.at(q, j);
          a.at(p, j) = c * apj - s * aqj;
          a.at(q, j) = std::conj(s) * apj + c * aqj;
        }
        a.at(p, q) = cplx(0.0, 0.0);
        a.at(q, p) = cplx(0.0, 0.0);
        a.at(p, p) = cplx(a.at(p, p).real(), 0.0);
        a.at(q, q) = cplx(a.at(q, q).real(), 0.0);

        for (int i = 0; i < d; ++i) {
          const cplx vip = v.at(i, p);
          const cplx viq = v.at(i, q);
          v.at(i, p) = c * vip - std::conj(s) * viq;
          v.at(i, q) = s * vip + c * viq;
        }
      }
    }
    converged = offdiag_norm(a) < tol().eig_offdiag;
  }
  if (!converged) throw NoConvergence("Jacobi sweeps did not reduce the off-diagonal norm");

  std::vector<int> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int x, int y) { return a.at(x, x).real() > a.at(y, y).real(); });

  EigResult r;
  r.values.reserve(static_cast<std::size_t>(d));
  for (int k : order) {
    r.values.push_back(a.at(k, k).real());
    StateVector col(std::vector<cplx>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i) col.amp[static_cast<std::size_t>(i)] = v.at(i, k);
    r.vectors.vectors.push_back(std::move(col));
  }
  return r;
}

Operator psd_project(const Operator& h) {
  EigResult e = hermitian_eig(h);
  Operator r(h.dim);
  for (std::size_t k = 0; k < e.values.size(); ++k) {
    if (e.values[k] <= 0.0) continue;
    r = add(r, scaled(outer(e.vectors.vectors[k], e.vectors.vectors[k]),
                      cplx(e.values[k], 0.0)));
  }
  return r;
}

Operator build_stabilizer_unitary(const StateVector& psi, const StateVector& x,
                                  const StateVector& y) {
  check_state(psi);
  check_state(x);
  check_state(y);
  if (psi.dim() != x.dim() || psi.dim() != y.dim())
    throw DimensionMismatch("stabilizer builder needs equal dimensions");

  const cplx ax = inner_product(psi, x);
  const cplx ay = inner_product(psi, y);
  if (std::abs(ax - ay) > tol().inner_match)
    throw InnerProductMismatch("<psi|x> and <psi|y> differ");

  const StateVector xp = sub(x, scaled(psi, ax));
  const StateVector yp = sub(y, scaled(psi, ay));
  const double nx = norm(xp);
  const double ny = norm(yp);
  const int d = psi.dim();

  if (nx < tol().degenerate_perp || ny < tol().degenerate_perp) {
    if (norm(sub(x, y)) <= tol().inner_match) return identity_op(d);
    throw DegenerateInput("perpendicular component vanishes but x != y");
  }

  const StateVector u = scaled(xp, cplx(1.0 / nx, 0.0));
  const StateVector v = scaled(yp, cplx(1.0 / ny, 0.0));
  const cplx c = inner_product(u, v);

  // Write v = c u + s w with s real nonnegative. U maps u -> v and
  // w -> -s u + conj(c) w, acting as identity outside span{u, w}; both images are unit
  // and mutually orthogonal, so U is unitary.
  StateVector r = sub(v, scaled(u, c));
  const double s = norm(r);
  if (s < tol().phase_only) {
    // v is a phase times u; U multiplies the u direction by that phase.
    const cplx phase = c / std::abs(c);
    return add(identity_op(d), scaled(outer(u, u), phase - 1.0));
  }
  const StateVector w = scaled(r, cplx(1.0 / s, 0.0));
  StateVector vperp = add(scaled(u, cplx(-s, 0.0)), scaled(w, std::conj(c)));

  Operator m = identity_op(d);
  m = sub(m, outer(u, u));
  m = sub(m, outer(w, w));
  m = add(m, outer(v, u));
  m = add(m, outer(vperp, w));
  return m;
}

}  // namespace onticlab
