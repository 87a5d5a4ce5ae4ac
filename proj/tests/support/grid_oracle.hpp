// Brute-force grid oracle for the overlap programs. States are built with
// squared amplitudes on the 1/200 grid and measured with projector-block
// POVMs, so every Born entry is an exact grid multiple and the feasible
// distributions over vertices can be enumerated exhaustively in integer
// arithmetic, independent of the LP code paths.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "onticlab/overlap_lp.hpp"
#include "onticlab/povm_synth.hpp"
#include "onticlab/scenario.hpp"
#include "test_support.hpp"

namespace testsupport {

inline constexpr int kGrid = 200;

// Composition of kGrid into n parts via sorted uniform cuts; zero parts are
// allowed and exercise forbidden vertices.
inline std::vector<int> random_composition(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> u(0, kGrid);
  std::vector<int> cuts(static_cast<std::size_t>(n - 1));
  for (int& c : cuts) c = u(rng);
  cuts.push_back(0);
  cuts.push_back(kGrid);
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> parts;
  for (std::size_t i = 1; i < cuts.size(); ++i) parts.push_back(cuts[i] - cuts[i - 1]);
  return parts;
}

// Unit state whose squared amplitudes are the composition over kGrid, with
// random phases so nothing downstream relies on real amplitudes.
inline onticlab::StateVector grid_state(std::mt19937_64& rng, const std::vector<int>& parts) {
  std::uniform_real_distribution<double> angle(0.0, 6.28318530717958648);
  std::vector<onticlab::cplx> amp;
  for (const int k : parts) {
    const double theta = angle(rng);
    amp.push_back(std::sqrt(static_cast<double>(k) / kGrid) *
                  onticlab::cplx(std::cos(theta), std::sin(theta)));
  }
  return onticlab::StateVector(std::move(amp));
}

// POVM whose elements sum the basis projectors over the given blocks; Born
// probabilities are block sums of squared amplitudes, hence grid-exact.
inline onticlab::Povm block_povm(int d, const std::vector<std::vector<int>>& blocks) {
  onticlab::Povm p;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    onticlab::Operator e(d);
    for (const int i : blocks[b]) e.at(i, i) = onticlab::cplx(1.0, 0.0);
    p.elements.push_back(e);
    p.labels.push_back("g" + std::to_string(b));
  }
  return p;
}

// Every distribution on the 1/200 grid (stored as integer mass counts per
// vertex) whose per-measurement marginals hit the state's Born row exactly.
// Enumerated with per-outcome capacity pruning, which keeps the search at
// the size of the feasible set itself. Throws if a Born entry is off-grid.
inline std::vector<std::vector<int>> feasible_grid_points(const onticlab::Scenario& sc,
                                                          const onticlab::VertexSpace& vs,
                                                          const std::string& state) {
  const std::size_t si = static_cast<std::size_t>(sc.state_index(state));
  const int v = vs.size();
  const std::size_t num_m = sc.measurements.size();
  std::vector<std::vector<int>> remaining;
  for (std::size_t m = 0; m < num_m; ++m) {
    std::vector<int> row;
    int sum = 0;
    for (const double q : sc.born[si][m]) {
      const double scaled = kGrid * q;
      const int t = static_cast<int>(std::llround(scaled));
      if (std::abs(scaled - t) > 1e-6)
        throw std::runtime_error("grid oracle: Born entry off the 1/200 grid");
      row.push_back(t);
      sum += t;
    }
    if (sum != kGrid) throw std::runtime_error("grid oracle: Born row mass off the grid");
    remaining.push_back(std::move(row));
  }

  auto cap = [&](int l) {
    int c = kGrid;
    for (std::size_t m = 0; m < num_m; ++m)
      c = std::min(c, remaining[m][static_cast<std::size_t>(
                           vs.vertices[static_cast<std::size_t>(l)][m])]);
    return c;
  };

  std::vector<int> point(static_cast<std::size_t>(v), 0);
  std::vector<std::vector<int>> out;
  std::function<void(int, int)> recurse = [&](int l, int rem) {
    if (l == v) {
      if (rem == 0) out.push_back(point);
      return;
    }
    int absorb = 0;
    for (int s = l; s < v && absorb < rem; ++s) absorb += cap(s);
    if (absorb < rem) return;
    const int hi = std::min(rem, cap(l));
    for (int c = 0; c <= hi; ++c) {
      point[static_cast<std::size_t>(l)] = c;
      for (std::size_t m = 0; m < num_m; ++m)
        remaining[m][static_cast<std::size_t>(vs.vertices[static_cast<std::size_t>(l)][m])] -= c;
      recurse(l + 1, rem - c);
      for (std::size_t m = 0; m < num_m; ++m)
        remaining[m][static_cast<std::size_t>(vs.vertices[static_cast<std::size_t>(l)][m])] += c;
    }
    point[static_cast<std::size_t>(l)] = 0;
  };
  recurse(0, kGrid);
  return out;
}

inline int grid_symmetric_max(const std::vector<std::vector<int>>& f1,
                              const std::vector<std::vector<int>>& f2) {
  int best = 0;
  for (const auto& mu : f1)
    for (const auto& nu : f2) {
      int total = 0;
      for (std::size_t l = 0; l < mu.size(); ++l) total += std::min(mu[l], nu[l]);
      best = std::max(best, total);
    }
  return best;
}

inline std::vector<bool> grid_usable(const std::vector<std::vector<int>>& feasible,
                                     std::size_t v) {
  std::vector<bool> usable(v, false);
  for (const auto& point : feasible)
    for (std::size_t l = 0; l < v; ++l)
      if (point[l] > 0) usable[l] = true;
  return usable;
}

inline int grid_asymmetric_max(const std::vector<std::vector<int>>& prep_points,
                               const std::vector<bool>& usable) {
  int best = 0;
  for (const auto& mu : prep_points) {
    int mass = 0;
    for (std::size_t l = 0; l < usable.size(); ++l)
      if (usable[l]) mass += mu[l];
    best = std::max(best, mass);
  }
  return best;
}

struct OracleCase {
  onticlab::Scenario sc;
  bool symmetric;  // pair enumeration is affordable
};

// 24 scenarios: single full-basis measurements (the feasible set is the
// Born row itself), two independent two-block partitions of a four-level
// system (four vertices, one transport degree of freedom), and a two-block
// against three-block partition of a six-level system (six vertices, two
// degrees of freedom; pair enumeration is skipped there).
inline std::vector<OracleCase> oracle_cases() {
  std::vector<OracleCase> cases;
  auto rng = make_rng(7);
  auto two_states = [&rng](int d) {
    return std::vector<onticlab::LabeledState>{
        {"s1", grid_state(rng, random_composition(rng, d))},
        {"s2", grid_state(rng, random_composition(rng, d))}};
  };
  for (int rep = 0; rep < 10; ++rep) {
    const int d = 2 + rep % 3;
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < d; ++i) blocks.push_back({i});
    cases.push_back({make_scenario(two_states(d), {{"m1", block_povm(d, blocks)}}), true});
  }
  for (int rep = 0; rep < 8; ++rep)
    cases.push_back({make_scenario(two_states(4), {{"m1", block_povm(4, {{0, 1}, {2, 3}})},
                                                   {"m2", block_povm(4, {{0, 2}, {1, 3}})}}),
                     true});
  for (int rep = 0; rep < 6; ++rep)
    cases.push_back({make_scenario(two_states(6), {{"m1", block_povm(6, {{0, 1, 2}, {3, 4, 5}})},
                                                   {"m2", block_povm(6, {{0, 3}, {1, 4}, {2, 5}})}}),
                     false});
  return cases;
}

}  // namespace testsupport
