// Central numerical tolerance configuration. Every threshold used by the library lives
// here so a single override file (ONTICLAB_TOLERANCE_FILE, flat JSON object of
// name -> value) can retune the whole stack without recompiling.
#pragma once

#include <string>

namespace onticlab {

struct Tolerances {
  // hilbert
  double unit_norm = 1e-9;            // state vectors must be unit within this
  double orthonormal = 1e-9;          // pairwise inner products of an ONB
  double hermitian = 1e-9;            // max |H - H^dagger| entry for eig input
  double eig_offdiag = 1e-12;         // Jacobi stop: off-diagonal Frobenius norm
  int    eig_max_sweeps = 100;
  double eig_reconstruct = 1e-8;      // || V D V^dagger - H ||_F contract
  double unitary_residual = 1e-8;     // stabilizer builder postconditions
  double inner_match = 1e-8;          // <psi|x> vs <psi|y> precondition
  double degenerate_perp = 1e-10;     // perpendicular-component norm floor
  double phase_only = 1e-12;          // treat rotation as pure phase below this

  // constructions
  double born_row_sum = 1e-9;         // Born table rows must sum to 1 within this
  double born_imag = 1e-10;           // residual imaginary part of <s|E|s>
  double state_equality = 1e-8;       // |<a|b>|^2 = 1 within this means equal states
  double criterion_slack = 1e-12;     // rounding slack on the non-strict inequality;
                                      // the family triples sit exactly on the equality

  // povm_synth
  double povm_hermitian = 1e-9;
  double povm_psd = 1e-9;             // most negative eigenvalue allowed
  double povm_completeness = 1e-8;    // || sum E - I ||_F
  double antidist_pass = 1e-7;        // max_i <psi_i|E_not_i|psi_i> acceptance
  double synth_tol = 1e-8;            // Dykstra residual target
  int    synth_max_iters = 1000000;
  double helstrom_identical = 1e-8;   // overlap within this of 1 -> IdenticalStates

  // ontomodel
  double dist_norm = 1e-12;           // preparation distributions sum to 1
  double response_norm = 1e-12;       // response columns sum to 1
  double stochastic_norm = 1e-12;     // transformation kernel columns
  double support = 1e-12;             // mass above this counts as support
  double map_renorm = 1e-10;          // apply_map output renormalization guard
  double classify_epistemic = 1e-9;   // residual at or below this -> epistemic

  // bounds / lp
  double born_clamp = 1e-9;           // scenario Born entries below this become 0
  double lp_feas = 1e-7;              // solver: constraint satisfaction check
  double lp_pivot = 1e-9;             // solver: pivot magnitude floor
  double usable_mass = 1e-9;          // stage-1 threshold for usable vertices
  double analytic_slack = 1e-6;       // lp value vs closed-form bound comparisons
  std::size_t vertex_guard = 1000000; // product vertex-space size limit
};

// Returns the process-wide tolerance set. On first use, loads overrides from the JSON
// file named by ONTICLAB_TOLERANCE_FILE if that variable is set.
const Tolerances& tol();

// Re-reads the environment and override file (used by tests; not thread-safe).
void reload_tolerances();

// Applies overrides from a flat JSON object text to the given record. Throws
// InvalidInput on malformed JSON or unknown keys.
void apply_tolerance_overrides(Tolerances& t, const std::string& json_text);

}  // namespace onticlab
