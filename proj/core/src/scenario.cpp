// Scenario assembly: label lookups plus the builders that package the two
// state families with their basis measurement and synthesized
// anti-distinguishing POVMs.
#include "onticlab/scenario.hpp"

#include <string>
#include <utility>
#include <vector>

#include "onticlab/errors.hpp"
#include "onticlab/tolerances.hpp"

namespace onticlab {

int Scenario::state_index(const std::string& label) const {
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].label == label) return static_cast<int>(i);
  }
  throw UnknownState("no state labeled '" + label + "' in scenario");
}

int Scenario::measurement_index(const std::string& label) const {
  for (std::size_t i = 0; i < measurements.size(); ++i) {
    if (measurements[i].label == label) return static_cast<int>(i);
  }
  throw UnknownMeasurement("no measurement labeled '" + label + "' in scenario");
}

int Scenario::dim() const { return states.empty() ? 0 : states.front().state.dim(); }

namespace {

// Raw Born rows with sub-clamp entries zeroed and the row renormalized. The
// synthesized POVMs carry a completeness defect up to synth_tol, but their
// anti-distinguishing zeros are exact to machine precision (the Dykstra
// cone-side iterate satisfies E_i psi_i = 0 by construction), so the clamp
// only removes entries that vanish in exact arithmetic.
std::vector<std::vector<std::vector<double>>> clamped_born(
    const std::vector<LabeledState>& states, const std::vector<LabeledPovm>& measurements) {
  std::vector<std::vector<std::vector<double>>> born(states.size());
  for (std::size_t s = 0; s < states.size(); ++s) {
    born[s].resize(measurements.size());
    for (std::size_t m = 0; m < measurements.size(); ++m) {
      const Povm& povm = measurements[m].povm;
      std::vector<double> row(povm.elements.size(), 0.0);
      double total = 0.0;
      for (std::size_t k = 0; k < row.size(); ++k) {
        double p = expectation(states[s].state, povm.elements[k]).real();
        if (p < tol().born_clamp) p = 0.0;
        row[k] = p;
        total += p;
      }
      if (total <= 0.0) throw NumericalFailure("Born row vanished after clamping");
      for (double& p : row) p /= total;
      born[s][m] = std::move(row);
    }
  }
  return born;
}

// The preparation-link certificate: a unitary fixing `invariant` must carry
// `source` to `image`, which build_stabilizer_unitary provides exactly when
// the two inner products with the invariant state agree.
void certify_link(const Scenario& sc, const PrepLink& link) {
  const StateVector& inv = sc.states[static_cast<std::size_t>(sc.state_index(link.invariant))].state;
  const StateVector& src = sc.states[static_cast<std::size_t>(sc.state_index(link.source))].state;
  const StateVector& img = sc.states[static_cast<std::size_t>(sc.state_index(link.image))].state;
  build_stabilizer_unitary(inv, src, img);
}

Povm relabeled(Povm p, const std::vector<std::string>& excluded) {
  p.labels.clear();
  for (const std::string& s : excluded) p.labels.push_back("not_" + s);
  return p;
}

}  // namespace

Scenario thm1_scenario(double alpha, int d, double epsilon) {
  if (epsilon < 0.0) throw OutOfRange("epsilon must be nonnegative");
  const Thm1Family fam = build_thm1(alpha, d);
  const StateVector& ket0 = fam.basis.vectors[0];

  Scenario sc;
  sc.states = {{"ket0", ket0}, {"psi", fam.psi}, {"phi", fam.phi}};
  sc.epsilon = epsilon;

  const SynthesisResult synth = synthesize_antidistinguishing({ket0, fam.phi, fam.psi});
  sc.measurements.push_back({"basis", projective_measurement(fam.basis)});
  sc.measurements.push_back({"antidist", relabeled(synth.povm, {"ket0", "phi", "psi"})});

  sc.born = clamped_born(sc.states, sc.measurements);
  sc.links = {{"psi", "ket0", "phi"}};
  sc.basis_measurement = "basis";
  sc.basis_states.assign(static_cast<std::size_t>(d), "");
  sc.basis_states[0] = "ket0";
  for (const PrepLink& link : sc.links) certify_link(sc, link);
  return sc;
}

Scenario thm2_scenario(double alpha, int d, double epsilon) {
  if (epsilon < 0.0) throw OutOfRange("epsilon must be nonnegative");
  const Thm2Family fam = build_thm2(alpha, d);
  const StateVector& ket0 = fam.basis.vectors[0];

  Scenario sc;
  sc.states.push_back({"ket0", ket0});
  sc.states.push_back({"psi", fam.psi});
  for (std::size_t i = 0; i < fam.phis.size(); ++i) {
    sc.states.push_back({"phi" + std::to_string(i + 3), fam.phis[i]});
  }
  sc.epsilon = epsilon;

  sc.measurements.push_back({"basis", projective_measurement(fam.basis)});
  for (std::size_t i = 0; i < fam.phis.size(); ++i) {
    const std::string phi_label = "phi" + std::to_string(i + 3);
    const SynthesisResult synth = synthesize_antidistinguishing({ket0, fam.phis[i], fam.psi});
    sc.measurements.push_back(
        {"antidist_" + phi_label, relabeled(synth.povm, {"ket0", phi_label, "psi"})});
    sc.links.push_back({"psi", "ket0", phi_label});
  }
  // One POVM per companion pair: these force the phi_i overlap regions to be
  // mutually exclusive, which is where the 1/(d-2) scaling comes from.
  for (std::size_t i = 0; i < fam.phis.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.phis.size(); ++j) {
      const std::string li = "phi" + std::to_string(i + 3);
      const std::string lj = "phi" + std::to_string(j + 3);
      const SynthesisResult synth =
          synthesize_antidistinguishing({fam.phis[i], fam.phis[j], fam.psi});
      sc.measurements.push_back(
          {"antidist_" + li + "_" + lj, relabeled(synth.povm, {li, lj, "psi"})});
    }
  }

  sc.born = clamped_born(sc.states, sc.measurements);
  sc.basis_measurement = "basis";
  sc.basis_states.assign(static_cast<std::size_t>(d), "");
  sc.basis_states[0] = "ket0";
  for (const PrepLink& link : sc.links) certify_link(sc, link);
  return sc;
}

}  // namespace onticlab
