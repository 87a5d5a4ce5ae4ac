// Dense complex linear algebra for small Hilbert spaces: state vectors, operators,
// orthonormal bases, a cyclic-Jacobi Hermitian eigensolver, PSD projection, and the
// stabilizer-unitary builder (given <psi|x> = <psi|y>, a unitary fixing psi with Ux = y).
#pragma once

#include <complex>
#include <vector>

#include "onticlab/errors.hpp"
#include "onticlab/tolerances.hpp"

namespace onticlab {

using cplx = std::complex<double>;

struct StateVector {
  std::vector<cplx> amp;

  StateVector() = default;
  explicit StateVector(std::vector<cplx> a) : amp(std::move(a)) {}
  int dim() const { return static_cast<int>(amp.size()); }
};

// Dense row-major square matrix.
struct Operator {
  int dim = 0;
  std::vector<cplx> a;

  Operator() = default;
  explicit Operator(int d) : dim(d), a(static_cast<std::size_t>(d) * d, cplx(0.0, 0.0)) {}
  cplx& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
  const cplx& at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }
};

struct Onb {
  std::vector<StateVector> vectors;

  int dim() const { return vectors.empty() ? 0 : vectors.front().dim(); }
  int size() const { return static_cast<int>(vectors.size()); }
};

struct EigResult {
  std::vector<double> values;  // descending
  Onb vectors;                 // vectors[k] pairs with values[k]
};

// -- vector helpers -----------------------------------------------------------------
double norm(const StateVector& v);
// Throws InvalidInput if v is not unit within tol().unit_norm or has dim < 2.
void check_state(const StateVector& v);
// Conjugate-linear in the first argument. Throws DimensionMismatch.
cplx inner_product(const StateVector& a, const StateVector& b);
StateVector scaled(const StateVector& v, cplx c);
StateVector add(const StateVector& a, const StateVector& b);
StateVector sub(const StateVector& a, const StateVector& b);
StateVector basis_vector(int dim, int k);
// True when |<a|b>|^2 is within tol().state_equality of 1 (global phase ignored).
bool same_state(const StateVector& a, const StateVector& b);

// -- operator helpers ---------------------------------------------------------------
Operator identity_op(int d);
Operator outer(const StateVector& u, const StateVector& v);  // |u><v|
Operator adjoint(const Operator& m);
Operator matmul(const Operator& x, const Operator& y);
Operator add(const Operator& x, const Operator& y);
Operator sub(const Operator& x, const Operator& y);
Operator scaled(const Operator& x, cplx c);
StateVector apply(const Operator& m, const StateVector& v);
double fro_norm(const Operator& m);
double fro_dist(const Operator& x, const Operator& y);
cplx trace(const Operator& m);
cplx expectation(const StateVector& s, const Operator& e);  // <s|E|s>
double hermiticity_defect(const Operator& m);               // max entry of |M - M^dagger|
Operator hermitized(const Operator& m);                     // (M + M^dagger)/2

// -- spec operations ----------------------------------------------------------------

// Extends a partial orthonormal family to a full ONB of C^dim by Gram-Schmidt over the
// standard basis. The first entries equal the input vectors. Throws NotOrthonormalInput
// or DimensionMismatch.
Onb complete_onb(const std::vector<StateVector>& partial, int dim);

// Cyclic Jacobi diagonalization. Input must be Hermitian within tol().hermitian
// (NotHermitian otherwise); iterates until the off-diagonal Frobenius norm drops below
// tol().eig_offdiag or tol().eig_max_sweeps sweeps elapse (NoConvergence). Eigenvalues
// are returned in descending order with matching orthonormal eigenvectors.
EigResult hermitian_eig(const Operator& h);

// Projection onto the PSD cone: negative eigenvalues clipped to zero.
Operator psd_project(const Operator& h);

// Builds a unitary with U psi = psi and U x = y, valid whenever <psi|x> = <psi|y>
// (within tol().inner_match; InnerProductMismatch otherwise). The components of x and y
// orthogonal to psi must either both vanish (then U = I; x and y must agree, else
// DegenerateInput) or both be nontrivial; U acts as identity outside span{psi-perp
// components}. Postconditions (checked by tests, not asserted here): U unitary, U psi =
// psi, U x = y, all within tol().unitary_residual.
Operator build_stabilizer_unitary(const StateVector& psi, const StateVector& x,
                                  const StateVector& y);

}  // namespace onticlab
