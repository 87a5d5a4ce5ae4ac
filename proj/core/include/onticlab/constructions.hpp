// The two overlap-bounding state families and the anti-distinguishability criterion.
// Family thm1: psi = alpha|0> + sqrt2 alpha^2 |1'> + gamma_c |2'> paired with one
// companion phi at |<phi|psi>| = alpha. Family thm2: beta = sqrt2 alpha^{3/2} and d-3
// companions phi_i, one per extra dimension, all at overlap alpha with psi.
#pragma once

#include <string>
#include <vector>

#include "onticlab/hilbert.hpp"
#include "onticlab/povm_synth.hpp"

namespace onticlab {

struct FamilyCoefficients {
  double alpha = 0.0;    // <0'|psi>
  double beta = 0.0;     // <1'|psi>
  double gamma_c = 0.0;  // <2'|psi>, fixed real nonnegative by normalization
  double delta = 0.0;    // <0'|phi_i>
  double eta = 0.0;      // <1'|phi_i>
  double kappa = 0.0;    // <i'|phi_i>, fixed real nonnegative by normalization
};

struct Thm1Family {
  double alpha = 0.0;
  FamilyCoefficients coeffs;
  StateVector psi;
  StateVector phi;
  Onb basis;  // the primed basis; element 0 is the |0> of the construction
};

struct Thm2Family {
  double alpha = 0.0;  // alpha itself; alpha^2 in (0, 1/4)
  FamilyCoefficients coeffs;
  StateVector psi;
  std::vector<StateVector> phis;  // phi_i for i = 3..d-1
  Onb basis;
};

// Sufficient condition for three pure states with pairwise squared overlaps a, b, c to
// admit an anti-distinguishing measurement: a + b + c < 1 (strict) and
// (1 - a - b - c)^2 >= 4 a b c (equality counts). Throws OutOfRange unless all three
// lie in [0, 1].
bool antidist_criterion(double a, double b, double c);

// alpha in (0, 1/sqrt2) exclusive, d >= 4. Throws AlphaOutOfRange / DimensionTooSmall.
Thm1Family build_thm1(double alpha, int d);

// alpha^2 in (0, 1/4) exclusive, d >= 4. Throws AlphaOutOfRange / DimensionTooSmall.
Thm2Family build_thm2(double alpha, int d);

// Adapter for an arbitrary superposition: picks the first standard-basis element with
// squared amplitude in (0, 1/2) as the |0> of the construction and returns that
// amplitude's magnitude as alpha. Throws AlphaOutOfRange when no component qualifies
// (e.g. an exact 50:50 superposition).
double alpha_from_state(const StateVector& psi);

// Probability table entry(s, M, k) = <s|E_k|s>; rows sum to 1 within
// tol().born_row_sum and imaginary residues stay below tol().born_imag.
struct BornTable {
  // p[state][measurement][outcome]
  std::vector<std::vector<std::vector<double>>> p;
};

BornTable born_table(const std::vector<StateVector>& states,
                     const std::vector<Povm>& measurements);

// The criterion triples the family construction relies on, with their overlap inputs.
struct CriterionTriple {
  std::vector<std::string> states;  // three labels
  double a = 0.0, b = 0.0, c = 0.0;
  bool pass = false;
};

std::vector<CriterionTriple> thm1_triples(const Thm1Family& f);
std::vector<CriterionTriple> thm2_triples(const Thm2Family& f);

}  // namespace onticlab
