// Adversarial overlap maximization over vertex-restricted ontological
// models. Ontic states are identified with deterministic outcome
// assignments over the scenario's measurements; preparations become
// distributions over those vertices constrained to reproduce the Born table
// within epsilon, and the overlap objectives become linear programs. The
// preparation links (stabilizer-unitary noncontextuality) enter as linear
// rows tying the invariant state's distribution to the usable sets of the
// link images.
#pragma once

#include <string>
#include <vector>

#include "onticlab/ontomodel.hpp"
#include "onticlab/scenario.hpp"
#include "onticlab/simplex.hpp"

namespace onticlab {

struct VertexSpace {
  std::vector<int> outcome_counts;         // one per scenario measurement
  std::vector<std::vector<int>> vertices;  // one outcome per measurement, lex order

  int size() const { return static_cast<int>(vertices.size()); }
  // Index of an outcome assignment, or -1 when absent.
  int index_of(const std::vector<int>& outcomes) const;
};

// Every deterministic outcome assignment. Throws TooLarge past vertex_guard.
VertexSpace build_vertex_space(const Scenario& sc);

// Only the vertices all of whose outcomes carry positive Born probability
// for `state`: at epsilon = 0 these are exactly the vertices a distribution
// reproducing that state's statistics may weight, so restricting to them
// loses nothing for single-block programs over that state.
VertexSpace build_restricted_vertex_space(const Scenario& sc, const std::string& state);

// Largest nu_lambda consistent with reproducing `state` within the
// scenario's epsilon, in closed form: for each measurement the vertex's
// outcome caps the mass by min(born + eps, 1 - sum of the other outcomes'
// lower bands), and a coupling meeting the smallest cap always exists.
std::vector<double> max_vertex_mass(const Scenario& sc, const VertexSpace& vs,
                                    const std::string& state);

// Same quantity through a literal feasibility LP over the full vertex
// space; the closed form above must agree (kept as a test oracle).
double max_vertex_mass_lp(const Scenario& sc, const VertexSpace& vs, const std::string& state,
                          int vertex);

// Vertices whose maximum feasible mass reaches usable_mass.
std::vector<bool> usable_set(const Scenario& sc, const VertexSpace& vs,
                             const std::string& state);

struct SymmetricOverlapResult {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;
  OnticModel model;  // witness assembled from the optimizer, on Optimal
};

// Maximize sum_l min(mu_l, nu_l) over distributions reproducing s1 and s2.
// The witness model carries mu, nu, product distributions for every other
// scenario state, and the deterministic vertex responses.
SymmetricOverlapResult max_symmetric_overlap(const Scenario& sc, const std::string& s1,
                                             const std::string& s2);

struct AsymmetricOptions {
  // Adds the epistemic-superposition hypothesis: the prepared state's mass
  // on each basis state's usable set equals the Born probability, plus the
  // transported lower bound per preparation link. On the companion-state
  // scenarios this makes the program infeasible.
  bool epistemic = false;
};

struct AsymmetricOverlapResult {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;
};

// Upper bound on the asymmetric overlap of `target` against preparations
// of `prep_of`: maximize W subject to W <= mu(usable set of target), the
// per-link transported caps, and mu reproducing prep_of. A relaxation, not
// an exact supremum: usable sets overapproximate supports.
AsymmetricOverlapResult max_asymmetric_overlap_upper(const Scenario& sc,
                                                     const std::string& target,
                                                     const std::string& prep_of,
                                                     const AsymmetricOptions& opt = {});

struct Thm2SweepRow {
  int d = 0;
  double lp_upper = 0.0;
  double analytic = 0.0;  // thm2_bound at the same alpha and d
};

// Builds the d-companion scenario for every d from 4 to d_max and reports
// the asymmetric LP upper bound next to the closed-form bound. Throws
// TooLarge when the restricted vertex space would cross vertex_guard
// (d_max > 8 at desk scale) and DimensionTooSmall below d = 4.
std::vector<Thm2SweepRow> reproduce_thm2(double alpha, int d_max);

}  // namespace onticlab
