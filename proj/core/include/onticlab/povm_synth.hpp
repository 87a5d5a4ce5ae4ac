// POVM validation and synthesis: the anti-distinguishing Dykstra projection loop and
// the two-state minimum-error (Helstrom) measurement.
#pragma once

#include <string>
#include <vector>

#include "onticlab/hilbert.hpp"

namespace onticlab {

struct Povm {
  std::vector<std::string> labels;    // one per element
  std::vector<Operator> elements;

  int dim() const { return elements.empty() ? 0 : elements.front().dim; }
  int arity() const { return static_cast<int>(elements.size()); }
};

// Throws InvalidPovm unless every element is Hermitian (tol().povm_hermitian), PSD
// (smallest eigenvalue >= -tol().povm_psd) and the elements sum to the identity within
// tol().povm_completeness in Frobenius norm.
void check_povm(const Povm& p);

// Projective measurement along a full ONB; labels default to "0", "1", ...
Povm projective_measurement(const Onb& basis);

struct AntidistReport {
  double max_error = 0.0;  // max_i <psi_i|E_i|psi_i> where element i excludes state i
  bool pass = false;
};

// Matches element i against state i (the element meant to never fire on state i).
// Throws ArityMismatch when the counts differ and InvalidPovm via check_povm.
AntidistReport verify_antidistinguishing(const Povm& p, const std::vector<StateVector>& states);

struct SynthesisResult {
  Povm povm;
  int iterations = 0;
  double residual = 0.0;
};

// Dykstra alternating projections between the completeness affine space {sum E = I} and
// the product cone {E_i PSD, E_i psi_i = 0}, run inside the span of the three states;
// outside the span each element receives an equal share of the identity. Preconditions:
// exactly three unit states whose pairwise squared overlaps pass antidist_criterion
// (CriterionFailed otherwise). Throws NoConvergence (reporting the final residual) if
// the residual does not drop below eps within max_iters cycles.
SynthesisResult synthesize_antidistinguishing(const std::vector<StateVector>& states,
                                              int max_iters, double eps);
SynthesisResult synthesize_antidistinguishing(const std::vector<StateVector>& states);

// 1 - sqrt(1 - overlap); throws OutOfRange unless overlap is in [0, 1].
double helstrom_bound(double overlap);

struct HelstromResult {
  Povm povm;     // two outcomes: element 0 guesses psi, element 1 guesses phi
  double error;  // average error probability at equal priors
};

// Minimum-error two-state measurement from the sign eigenspaces of psi psi^dag -
// phi phi^dag (zero eigenvalues count toward the first outcome). Throws IdenticalStates
// when the squared overlap is within tol().helstrom_identical of 1.
HelstromResult helstrom_measurement(const StateVector& psi, const StateVector& phi);

}  // namespace onticlab
