// Prepare-and-measure scenarios: labeled states, labeled POVMs, the Born
// table they induce, and the structural side data (preparation links, basis
// measurement) the overlap LPs need. Builders assemble the two
// anti-distinguishability scenario families from the constructions and
// povm_synth modules.
#pragma once

#include <string>
#include <vector>

#include "onticlab/constructions.hpp"
#include "onticlab/hilbert.hpp"
#include "onticlab/povm_synth.hpp"

namespace onticlab {

// A preparation link records that applying the stabilizer unitary taking
// `source` to `image` while fixing `invariant` must not disturb `invariant`'s
// preparation. The LPs encode this by sharing the invariant's distribution
// variable across the link and constraining the image's distribution only
// through its Born rows.
struct PrepLink {
  std::string invariant;
  std::string source;
  std::string image;
};

struct LabeledState {
  std::string label;
  StateVector state;
};

struct LabeledPovm {
  std::string label;
  Povm povm;
};

struct Scenario {
  std::vector<LabeledState> states;
  std::vector<LabeledPovm> measurements;
  // born[i][m][k] = probability of outcome k of measurement m on state i.
  // Rows are clamped (entries below born_clamp zeroed) and renormalized so
  // exact-arithmetic zeros are exact here; see the builders.
  std::vector<std::vector<std::vector<double>>> born;
  double epsilon = 0.0;

  // Structural side data. Empty for hand-built scenarios.
  std::vector<PrepLink> links;
  std::string basis_measurement;          // label of the ONB measurement, if any
  std::vector<std::string> basis_states;  // labels of the basis kets, in order

  int state_index(const std::string& label) const;
  int measurement_index(const std::string& label) const;
  int dim() const;
};

// Scenario for the single-companion family: the primed basis as one
// projective measurement plus the anti-distinguishing POVM for the triple
// (|0>, phi, psi). States: ket0, psi, phi. Link: phi = U ket0 with psi
// invariant.
Scenario thm1_scenario(double alpha, int d, double epsilon = 0.0);

// Scenario for the general-d family: basis measurement B', one
// anti-distinguishing POVM per triple (|0>, phi_i, psi), and one per
// companion pair (phi_i, phi_j, psi). The pair POVMs make the phi_i overlap
// regions mutually exclusive, which is what produces the 1/(d-2) scaling in
// the LP. States: ket0, psi, phi3..phi_{d-1}. Links: phi_i = U_i ket0 with
// psi invariant.
Scenario thm2_scenario(double alpha, int d, double epsilon = 0.0);

}  // namespace onticlab
