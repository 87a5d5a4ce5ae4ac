// Finite ontological models: preparation distributions over a finite ontic
// space, response functions, stochastic transformation kernels, the overlap
// measures defined on them, Born-reproduction audits against a scenario, and
// the epistemic/ontic superposition classification. Includes the Spekkens
// toy bit as a bundled example model.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "onticlab/scenario.hpp"

namespace onticlab {

struct OnticSpace {
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(labels.size()); }
};

// Probability distribution over the ontic space. Weights are nonnegative and
// sum to 1 within dist_norm.
struct PrepDistribution {
  std::vector<double> weights;

  int size() const { return static_cast<int>(weights.size()); }
};

// probs[outcome][lambda] = probability of the outcome given the ontic state.
// Columns sum to 1 within response_norm.
struct ResponseFunction {
  std::vector<std::vector<double>> probs;

  int outcomes() const { return static_cast<int>(probs.size()); }
};

// kernel[to][from], column-stochastic within stochastic_norm.
struct StochasticMap {
  std::vector<std::vector<double>> kernel;

  int size() const { return static_cast<int>(kernel.size()); }
};

// Set-valued assignments: multi-element sets express preparation
// contextuality, singletons the common noncontextual case.
struct OnticModel {
  OnticSpace space;
  std::map<std::string, std::vector<PrepDistribution>> preparations;
  std::map<std::string, std::vector<ResponseFunction>> responses;
  std::map<std::string, std::vector<StochasticMap>> transforms;
};

// Throws InvalidInput or DimensionMismatch if any structural invariant
// fails: duplicate ontic labels, empty assignment sets, negative or
// unnormalized weights, response columns not summing to 1, entries outside
// [0,1], non-stochastic kernels, or size mismatches against the space.
void validate_model(const OnticModel& model);

// Indices of the ontic states a distribution puts weight on, using the
// support threshold.
std::vector<int> support(const PrepDistribution& dist);

// Union of supports over every preparation in the state's assignment set
// (the total support Lambda_state). Throws UnknownState.
std::vector<bool> total_support(const OnticModel& model, const std::string& state);

// Outcome probability Sum_l Sum_l' mu(l') gamma(l|l') P(outcome|l). The
// overload without a map uses the identity transformation.
double predicted_probability(const OnticModel& model, const PrepDistribution& prep,
                             const ResponseFunction& response, int outcome);
double predicted_probability(const OnticModel& model, const PrepDistribution& prep,
                             const StochasticMap& map, const ResponseFunction& response,
                             int outcome);

// Probability that mu yields an ontic state inside the target's total
// support. Throws UnknownState.
double asymmetric_overlap(const OnticModel& model, const std::string& target,
                          const PrepDistribution& mu);

// mu-mass of the union of the targets' total supports. Bounded above by the
// sum of the pairwise overlaps.
double multipartite_asymmetric_overlap(const OnticModel& model,
                                       const std::vector<std::string>& targets,
                                       const PrepDistribution& mu);

// Sum_l min(mu(l), nu(l)): the total variation complement, i.e. twice the
// optimal-strategy error probability for distinguishing mu from nu.
double symmetric_overlap(const PrepDistribution& mu, const PrepDistribution& nu);

// Maximum of symmetric_overlap over the cross product of the two states'
// assignment sets. Throws UnknownState.
double symmetric_overlap_states(const OnticModel& model, const std::string& s1,
                                const std::string& s2);

// Sum_l min of three weights; at most the smallest pairwise overlap.
double tripartite_symmetric_overlap(const PrepDistribution& mu, const PrepDistribution& nu,
                                    const PrepDistribution& chi);

// nu(l) = Sum_l' kernel(l|l') mu(l'), renormalized. Throws NumericalFailure
// if the raw image mass drifts from 1 beyond map_renorm.
PrepDistribution apply_map(const StochasticMap& map, const PrepDistribution& mu);

struct AuditEntry {
  std::string state;
  int prep_index = 0;
  std::string measurement;
  int response_index = 0;
  int outcome = 0;
  double predicted = 0.0;
  double expected = 0.0;
  double deviation = 0.0;
};

struct AuditReport {
  double max_deviation = 0.0;
  bool pass = false;
  std::vector<AuditEntry> entries;
};

// Compares every (preparation choice, response choice, outcome) prediction
// against the scenario's Born table; passes iff the worst deviation is at
// most scenario.epsilon. Throws UnknownState / UnknownMeasurement if the
// scenario references labels the model lacks.
AuditReport audit_model(const OnticModel& model, const Scenario& scenario);

enum class SuperpositionVerdict { Epistemic, Ontic };

struct SuperpositionReport {
  SuperpositionVerdict verdict = SuperpositionVerdict::Ontic;
  double residual = 0.0;
};

// residual = 1 - min over mu in the state's assignment set of the
// multipartite overlap with the full basis; epistemic iff every preparation
// of psi is supported inside the union of the basis supports (residual at
// most classify_epistemic).
SuperpositionReport classify_superposition(const OnticModel& model, const std::string& psi,
                                           const std::vector<std::string>& basis);

struct ToyBit {
  OnticModel model;
  Scenario scenario;
};

// The four-ontic-state toy bit: |0) and |1) are uniform over {a,b} and
// {c,d}, |+) and |-) over {a,c} and {b,d}, with the two deterministic
// measurements those supports determine. The bundled scenario carries the
// qubit-analog states and the exact Born table they induce.
ToyBit spekkens_toy_bit();

}  // namespace onticlab
