// Finite ontological models: validation, overlap measures, stochastic maps,
// Born audits, superposition classification, and the toy-bit example.
#include "onticlab/ontomodel.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "onticlab/errors.hpp"
#include "onticlab/tolerances.hpp"

namespace onticlab {

namespace {

void check_distribution(const OnticSpace& space, const PrepDistribution& dist,
                        const std::string& where) {
  if (dist.size() != space.size()) {
    throw DimensionMismatch("preparation for '" + where + "' does not match the ontic space");
  }
  double sum = 0.0;
  for (double w : dist.weights) {
    if (w < 0.0) throw InvalidInput("negative weight in preparation for '" + where + "'");
    sum += w;
  }
  if (std::abs(sum - 1.0) > tol().dist_norm) {
    throw InvalidInput("preparation for '" + where + "' is not normalized");
  }
}

void check_response(const OnticSpace& space, const ResponseFunction& resp,
                    const std::string& where) {
  if (resp.outcomes() < 1) throw InvalidInput("empty response function for '" + where + "'");
  for (const std::vector<double>& row : resp.probs) {
    if (static_cast<int>(row.size()) != space.size()) {
      throw DimensionMismatch("response for '" + where + "' does not match the ontic space");
    }
    for (double p : row) {
      if (p < 0.0 || p > 1.0) {
        throw InvalidInput("response probability outside [0,1] for '" + where + "'");
      }
    }
  }
  for (int l = 0; l < space.size(); ++l) {
    double col = 0.0;
    for (const std::vector<double>& row : resp.probs) col += row[static_cast<std::size_t>(l)];
    if (std::abs(col - 1.0) > tol().response_norm) {
      throw InvalidInput("response column " + std::to_string(l) + " for '" + where +
                         "' does not sum to 1");
    }
  }
}

void check_kernel(const OnticSpace& space, const StochasticMap& map, const std::string& where) {
  if (map.size() != space.size()) {
    throw DimensionMismatch("kernel for '" + where + "' does not match the ontic space");
  }
  for (const std::vector<double>& row : map.kernel) {
    if (static_cast<int>(row.size()) != space.size()) {
      throw DimensionMismatch("kernel for '" + where + "' is not square");
    }
    for (double g : row) {
      if (g < 0.0) throw InvalidInput("negative kernel entry for '" + where + "'");
    }
  }
  for (int from = 0; from < space.size(); ++from) {
    double col = 0.0;
    for (int to = 0; to < space.size(); ++to) {
      col += map.kernel[static_cast<std::size_t>(to)][static_cast<std::size_t>(from)];
    }
    if (std::abs(col - 1.0) > tol().stochastic_norm) {
      throw InvalidInput("kernel column " + std::to_string(from) + " for '" + where +
                         "' is not stochastic");
    }
  }
}

std::vector<bool> union_of_supports(const OnticModel& model,
                                    const std::vector<std::string>& targets) {
  std::vector<bool> mask(static_cast<std::size_t>(model.space.size()), false);
  for (const std::string& target : targets) {
    const std::vector<bool> part = total_support(model, target);
    for (std::size_t l = 0; l < mask.size(); ++l) mask[l] = mask[l] || part[l];
  }
  return mask;
}

double mass_on(const PrepDistribution& mu, const std::vector<bool>& mask) {
  double sum = 0.0;
  for (std::size_t l = 0; l < mask.size(); ++l) {
    if (mask[l]) sum += mu.weights[l];
  }
  return sum;
}

}  // namespace

void validate_model(const OnticModel& model) {
  if (model.space.size() < 1) throw InvalidInput("empty ontic space");
  std::set<std::string> seen(model.space.labels.begin(), model.space.labels.end());
  if (static_cast<int>(seen.size()) != model.space.size()) {
    throw InvalidInput("duplicate ontic state labels");
  }
  for (const auto& [state, dists] : model.preparations) {
    if (dists.empty()) throw InvalidInput("empty preparation set for '" + state + "'");
    for (const PrepDistribution& d : dists) check_distribution(model.space, d, state);
  }
  for (const auto& [meas, resps] : model.responses) {
    if (resps.empty()) throw InvalidInput("empty response set for '" + meas + "'");
    for (const ResponseFunction& r : resps) check_response(model.space, r, meas);
  }
  for (const auto& [name, maps] : model.transforms) {
    if (maps.empty()) throw InvalidInput("empty transform set for '" + name + "'");
    for (const StochasticMap& g : maps) check_kernel(model.space, g, name);
  }
}

std::vector<int> support(const PrepDistribution& dist) {
  std::vector<int> idx;
  for (int l = 0; l < dist.size(); ++l) {
    if (dist.weights[static_cast<std::size_t>(l)] > tol().support) idx.push_back(l);
  }
  return idx;
}

std::vector<bool> total_support(const OnticModel& model, const std::string& state) {
  const auto it = model.preparations.find(state);
  if (it == model.preparations.end() || it->second.empty()) {
    throw UnknownState("no preparations for '" + state + "'");
  }
  std::vector<bool> mask(static_cast<std::size_t>(model.space.size()), false);
  for (const PrepDistribution& dist : it->second) {
    for (int l : support(dist)) mask[static_cast<std::size_t>(l)] = true;
  }
  return mask;
}

double predicted_probability(const OnticModel& model, const PrepDistribution& prep,
                             const ResponseFunction& response, int outcome) {
  const int n = model.space.size();
  if (prep.size() != n) throw DimensionMismatch("preparation does not match the ontic space");
  if (outcome < 0 || outcome >= response.outcomes()) throw OutOfRange("outcome index");
  const std::vector<double>& row = response.probs[static_cast<std::size_t>(outcome)];
  if (static_cast<int>(row.size()) != n) {
    throw DimensionMismatch("response does not match the ontic space");
  }
  double p = 0.0;
  for (int l = 0; l < n; ++l) {
    p += prep.weights[static_cast<std::size_t>(l)] * row[static_cast<std::size_t>(l)];
  }
  return p;
}

double predicted_probability(const OnticModel& model, const PrepDistribution& prep,
                             const StochasticMap& map, const ResponseFunction& response,
                             int outcome) {
  const int n = model.space.size();
  if (prep.size() != n || map.size() != n) {
    throw DimensionMismatch("preparation or kernel does not match the ontic space");
  }
  if (outcome < 0 || outcome >= response.outcomes()) throw OutOfRange("outcome index");
  const std::vector<double>& row = response.probs[static_cast<std::size_t>(outcome)];
  if (static_cast<int>(row.size()) != n) {
    throw DimensionMismatch("response does not match the ontic space");
  }
  double p = 0.0;
  for (int to = 0; to < n; ++to) {
    double image = 0.0;
    for (int from = 0; from < n; ++from) {
      image += map.kernel[static_cast<std::size_t>(to)][static_cast<std::size_t>(from)] *
               prep.weights[static_cast<std::size_t>(from)];
    }
    p += image * row[static_cast<std::size_t>(to)];
  }
  return p;
}

double asymmetric_overlap(const OnticModel& model, const std::string& target,
                          const PrepDistribution& mu) {
  if (mu.size() != model.space.size()) {
    throw DimensionMismatch("distribution does not match the ontic space");
  }
  return mass_on(mu, total_support(model, target));
}

double multipartite_asymmetric_overlap(const OnticModel& model,
                                       const std::vector<std::string>& targets,
                                       const PrepDistribution& mu) {
  if (mu.size() != model.space.size()) {
    throw DimensionMismatch("distribution does not match the ontic space");
  }
  return mass_on(mu, union_of_supports(model, targets));
}

double symmetric_overlap(const PrepDistribution& mu, const PrepDistribution& nu) {
  if (mu.size() != nu.size()) throw DimensionMismatch("distributions differ in size");
  double sum = 0.0;
  for (int l = 0; l < mu.size(); ++l) {
    sum += std::min(mu.weights[static_cast<std::size_t>(l)],
                    nu.weights[static_cast<std::size_t>(l)]);
  }
  return sum;
}

double symmetric_overlap_states(const OnticModel& model, const std::string& s1,
                                const std::string& s2) {
  const auto i1 = model.preparations.find(s1);
  const auto i2 = model.preparations.find(s2);
  if (i1 == model.preparations.end()) throw UnknownState("no preparations for '" + s1 + "'");
  if (i2 == model.preparations.end()) throw UnknownState("no preparations for '" + s2 + "'");
  double best = 0.0;
  for (const PrepDistribution& mu : i1->second) {
    for (const PrepDistribution& nu : i2->second) {
      best = std::max(best, symmetric_overlap(mu, nu));
    }
  }
  return best;
}

double tripartite_symmetric_overlap(const PrepDistribution& mu, const PrepDistribution& nu,
                                    const PrepDistribution& chi) {
  if (mu.size() != nu.size() || mu.size() != chi.size()) {
    throw DimensionMismatch("distributions differ in size");
  }
  double sum = 0.0;
  for (int l = 0; l < mu.size(); ++l) {
    const std::size_t i = static_cast<std::size_t>(l);
    sum += std::min(mu.weights[i], std::min(nu.weights[i], chi.weights[i]));
  }
  return sum;
}

PrepDistribution apply_map(const StochasticMap& map, const PrepDistribution& mu) {
  const int n = mu.size();
  if (map.size() != n) throw DimensionMismatch("kernel does not match the distribution");
  PrepDistribution out;
  out.weights.assign(static_cast<std::size_t>(n), 0.0);
  double total = 0.0;
  for (int to = 0; to < n; ++to) {
    double w = 0.0;
    for (int from = 0; from < n; ++from) {
      w += map.kernel[static_cast<std::size_t>(to)][static_cast<std::size_t>(from)] *
           mu.weights[static_cast<std::size_t>(from)];
    }
    out.weights[static_cast<std::size_t>(to)] = w;
    total += w;
  }
  if (std::abs(total - 1.0) > tol().map_renorm) {
    throw NumericalFailure("stochastic image mass drifted from 1");
  }
  for (double& w : out.weights) w /= total;
  return out;
}

AuditReport audit_model(const OnticModel& model, const Scenario& scenario) {
  AuditReport report;
  for (std::size_t si = 0; si < scenario.states.size(); ++si) {
    const std::string& state = scenario.states[si].label;
    const auto preps = model.preparations.find(state);
    if (preps == model.preparations.end()) {
      throw UnknownState("no preparations for '" + state + "'");
    }
    for (std::size_t mi = 0; mi < scenario.measurements.size(); ++mi) {
      const std::string& meas = scenario.measurements[mi].label;
      const auto resps = model.responses.find(meas);
      if (resps == model.responses.end()) {
        throw UnknownMeasurement("no responses for '" + meas + "'");
      }
      const std::vector<double>& born = scenario.born[si][mi];
      for (std::size_t pi = 0; pi < preps->second.size(); ++pi) {
        for (std::size_t ri = 0; ri < resps->second.size(); ++ri) {
          const ResponseFunction& resp = resps->second[ri];
          if (resp.outcomes() != static_cast<int>(born.size())) {
            throw ArityMismatch("response for '" + meas + "' has " +
                                std::to_string(resp.outcomes()) + " outcomes, scenario has " +
                                std::to_string(born.size()));
          }
          for (int k = 0; k < resp.outcomes(); ++k) {
            AuditEntry entry;
            entry.state = state;
            entry.prep_index = static_cast<int>(pi);
            entry.measurement = meas;
            entry.response_index = static_cast<int>(ri);
            entry.outcome = k;
            entry.predicted = predicted_probability(model, preps->second[pi], resp, k);
            entry.expected = born[static_cast<std::size_t>(k)];
            entry.deviation = std::abs(entry.predicted - entry.expected);
            report.max_deviation = std::max(report.max_deviation, entry.deviation);
            report.entries.push_back(std::move(entry));
          }
        }
      }
    }
  }
  report.pass = report.max_deviation <= scenario.epsilon;
  return report;
}

SuperpositionReport classify_superposition(const OnticModel& model, const std::string& psi,
                                           const std::vector<std::string>& basis) {
  const auto preps = model.preparations.find(psi);
  if (preps == model.preparations.end() || preps->second.empty()) {
    throw UnknownState("no preparations for '" + psi + "'");
  }
  const std::vector<bool> mask = union_of_supports(model, basis);
  double min_mass = 1.0;
  for (const PrepDistribution& mu : preps->second) {
    min_mass = std::min(min_mass, mass_on(mu, mask));
  }
  SuperpositionReport report;
  report.residual = 1.0 - min_mass;
  report.verdict = report.residual <= tol().classify_epistemic ? SuperpositionVerdict::Epistemic
                                                               : SuperpositionVerdict::Ontic;
  return report;
}

ToyBit spekkens_toy_bit() {
  ToyBit toy;
  toy.model.space.labels = {"a", "b", "c", "d"};

  const auto uniform_pair = [](int i, int j) {
    PrepDistribution dist;
    dist.weights.assign(4, 0.0);
    dist.weights[static_cast<std::size_t>(i)] = 0.5;
    dist.weights[static_cast<std::size_t>(j)] = 0.5;
    return dist;
  };
  toy.model.preparations["ket0"] = {uniform_pair(0, 1)};
  toy.model.preparations["ket1"] = {uniform_pair(2, 3)};
  toy.model.preparations["plus"] = {uniform_pair(0, 2)};
  toy.model.preparations["minus"] = {uniform_pair(1, 3)};

  // The deterministic responses the supports force: Z-like fires "0" exactly
  // on {a,b}, X-like fires "0" exactly on {a,c}.
  ResponseFunction zlike;
  zlike.probs = {{1, 1, 0, 0}, {0, 0, 1, 1}};
  ResponseFunction xlike;
  xlike.probs = {{1, 0, 1, 0}, {0, 1, 0, 1}};
  toy.model.responses["Z"] = {zlike};
  toy.model.responses["X"] = {xlike};

  const double r = 1.0 / std::sqrt(2.0);
  const StateVector ket0 = basis_vector(2, 0);
  const StateVector ket1 = basis_vector(2, 1);
  const StateVector plus{{cplx(r, 0.0), cplx(r, 0.0)}};
  const StateVector minus{{cplx(r, 0.0), cplx(-r, 0.0)}};

  Scenario& sc = toy.scenario;
  sc.states = {{"ket0", ket0}, {"ket1", ket1}, {"plus", plus}, {"minus", minus}};
  sc.measurements.push_back({"Z", projective_measurement(Onb{{ket0, ket1}})});
  sc.measurements.push_back({"X", projective_measurement(Onb{{plus, minus}})});
  sc.epsilon = 0.0;
  sc.basis_measurement = "Z";
  sc.basis_states = {"ket0", "ket1"};

  // Every qubit-analog Born probability here is exactly 0, 1/2, or 1; snap
  // the table so the model's exact-zero audit deviation is meaningful.
  sc.born.resize(sc.states.size());
  for (std::size_t s = 0; s < sc.states.size(); ++s) {
    sc.born[s].resize(sc.measurements.size());
    for (std::size_t m = 0; m < sc.measurements.size(); ++m) {
      std::vector<double> row;
      for (const Operator& e : sc.measurements[m].povm.elements) {
        const double p = expectation(sc.states[s].state, e).real();
        row.push_back(std::round(2.0 * p) / 2.0);
      }
      sc.born[s][m] = std::move(row);
    }
  }
  return toy;
}

}  // namespace onticlab
