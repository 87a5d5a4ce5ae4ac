#include "onticlab/overlap_lp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "onticlab/bounds.hpp"
#include "onticlab/errors.hpp"
#include "onticlab/tolerances.hpp"

namespace onticlab {

namespace {

// Odometer enumeration of the product of per-measurement outcome choices,
// in lexicographic vertex order. Guarded against vertex_guard as the
// product grows, so the count never overflows.
VertexSpace space_from_allowed(const Scenario& sc,
                               const std::vector<std::vector<int>>& allowed) {
  VertexSpace vs;
  vs.outcome_counts.reserve(sc.measurements.size());
  for (const auto& m : sc.measurements) vs.outcome_counts.push_back(m.povm.arity());

  std::size_t count = 1;
  for (const auto& choices : allowed) {
    count *= choices.size();
    if (count > tol().vertex_guard) {
      throw TooLarge("vertex space exceeds vertex_guard (" +
                     std::to_string(tol().vertex_guard) + ")");
    }
  }
  if (count == 0) return vs;

  const int m_count = static_cast<int>(allowed.size());
  vs.vertices.reserve(count);
  std::vector<int> idx(m_count, 0);
  while (true) {
    std::vector<int> vertex(m_count);
    for (int m = 0; m < m_count; ++m) vertex[m] = allowed[m][idx[m]];
    vs.vertices.push_back(std::move(vertex));
    int m = m_count - 1;
    while (m >= 0) {
      if (++idx[m] < static_cast<int>(allowed[m].size())) break;
      idx[m] = 0;
      --m;
    }
    if (m < 0) break;
  }
  return vs;
}

// Per-vertex mass cap from a Born row table: for each measurement the
// vertex's outcome caps the mass by min(q + eps, 1 - sum of the other
// outcomes' lower bands); the minimum over measurements is achievable by an
// independent coupling of the residual mass.
std::vector<double> max_mass_from_rows(const std::vector<std::vector<double>>& rows,
                                       const VertexSpace& vs, double eps) {
  const int m_count = static_cast<int>(rows.size());
  std::vector<std::vector<double>> cap(m_count);
  for (int m = 0; m < m_count; ++m) {
    double lower_total = 0.0;
    for (double q : rows[m]) lower_total += std::max(0.0, q - eps);
    cap[m].reserve(rows[m].size());
    for (double q : rows[m]) {
      const double lower_rest = lower_total - std::max(0.0, q - eps);
      cap[m].push_back(std::min(q + eps, 1.0 - lower_rest));
    }
  }
  std::vector<double> mass(vs.vertices.size());
  for (std::size_t l = 0; l < vs.vertices.size(); ++l) {
    double c = 1.0;
    for (int m = 0; m < m_count; ++m) c = std::min(c, cap[m][vs.vertices[l][m]]);
    mass[l] = std::max(0.0, c);
  }
  return mass;
}

std::vector<bool> usable_from_rows(const std::vector<std::vector<double>>& rows,
                                   const VertexSpace& vs, double eps) {
  const std::vector<double> mass = max_mass_from_rows(rows, vs, eps);
  std::vector<bool> usable(mass.size());
  for (std::size_t l = 0; l < mass.size(); ++l) usable[l] = mass[l] >= tol().usable_mass;
  return usable;
}

void push_row(LpProblem& p, std::vector<double> row, RowSense sense, double rhs) {
  p.rows.push_back(std::move(row));
  p.senses.push_back(sense);
  p.rhs.push_back(rhs);
}

// Born reproduction rows for one distribution block: equalities at eps = 0,
// otherwise a band pair per outcome (the vacuous lower band is dropped).
void add_born_rows(LpProblem& p, const Scenario& sc, const VertexSpace& vs, int state_idx,
                   int block, int cols) {
  const int V = vs.size();
  for (std::size_t m = 0; m < sc.measurements.size(); ++m) {
    for (int k = 0; k < sc.measurements[m].povm.arity(); ++k) {
      std::vector<double> row(cols, 0.0);
      bool any = false;
      for (int l = 0; l < V; ++l) {
        if (vs.vertices[l][m] == k) {
          row[block + l] = 1.0;
          any = true;
        }
      }
      const double q = sc.born[state_idx][m][k];
      if (sc.epsilon == 0.0) {
        // On a support-restricted space the zero-probability outcomes have
        // no vertices left; their rows are vacuously satisfied.
        if (!any && q == 0.0) continue;
        push_row(p, std::move(row), RowSense::Eq, q);
      } else {
        if (any) push_row(p, row, RowSense::LessEq, q + sc.epsilon);
        if (q - sc.epsilon > 0.0) push_row(p, std::move(row), RowSense::GreaterEq, q - sc.epsilon);
      }
    }
  }
  std::vector<double> norm(cols, 0.0);
  for (int l = 0; l < V; ++l) norm[block + l] = 1.0;
  push_row(p, std::move(norm), RowSense::Eq, 1.0);
}

// Re(tr(E_a proj)) per element, clamped and renormalized like the scenario
// Born rows. Used for the epistemic constraint's basis-ket response rows.
std::vector<double> cross_born_row(const Povm& povm, const Operator& proj) {
  std::vector<double> row;
  row.reserve(povm.arity());
  double total = 0.0;
  for (const auto& e : povm.elements) {
    double v = trace(matmul(e, proj)).real();
    if (v < tol().born_clamp) v = 0.0;
    row.push_back(v);
    total += v;
  }
  if (total <= 0.0) throw NumericalFailure("cross Born row lost all mass");
  for (double& v : row) v /= total;
  return row;
}

PrepDistribution clean_distribution(std::vector<double> w) {
  double total = 0.0;
  for (double& v : w) {
    if (v < 0.0) v = 0.0;
    total += v;
  }
  if (total <= 0.0) throw NumericalFailure("witness distribution lost all mass");
  for (double& v : w) v /= total;
  return PrepDistribution{std::move(w)};
}

}  // namespace

int VertexSpace::index_of(const std::vector<int>& outcomes) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), outcomes);
  if (it == vertices.end() || *it != outcomes) return -1;
  return static_cast<int>(it - vertices.begin());
}

VertexSpace build_vertex_space(const Scenario& sc) {
  std::vector<std::vector<int>> allowed;
  allowed.reserve(sc.measurements.size());
  for (const auto& m : sc.measurements) {
    std::vector<int> all(m.povm.arity());
    std::iota(all.begin(), all.end(), 0);
    allowed.push_back(std::move(all));
  }
  return space_from_allowed(sc, allowed);
}

VertexSpace build_restricted_vertex_space(const Scenario& sc, const std::string& state) {
  const int s = sc.state_index(state);
  std::vector<std::vector<int>> allowed;
  allowed.reserve(sc.measurements.size());
  for (std::size_t m = 0; m < sc.measurements.size(); ++m) {
    std::vector<int> pos;
    for (int k = 0; k < sc.measurements[m].povm.arity(); ++k) {
      if (sc.born[s][m][k] > 0.0) pos.push_back(k);
    }
    allowed.push_back(std::move(pos));
  }
  return space_from_allowed(sc, allowed);
}

std::vector<double> max_vertex_mass(const Scenario& sc, const VertexSpace& vs,
                                    const std::string& state) {
  return max_mass_from_rows(sc.born[sc.state_index(state)], vs, sc.epsilon);
}

double max_vertex_mass_lp(const Scenario& sc, const VertexSpace& vs, const std::string& state,
                          int vertex) {
  if (vertex < 0 || vertex >= vs.size()) {
    throw OutOfRange("vertex index " + std::to_string(vertex) + " outside the space");
  }
  const int s = sc.state_index(state);
  const int V = vs.size();
  LpProblem p;
  p.num_vars = V;
  p.objective.assign(V, 0.0);
  p.objective[vertex] = 1.0;
  add_born_rows(p, sc, vs, s, 0, V);
  const LpSolution sol = solve_lp(p);
  if (sol.status != LpStatus::Optimal) {
    throw NumericalFailure("vertex mass program did not solve for state " + state);
  }
  return sol.value;
}

std::vector<bool> usable_set(const Scenario& sc, const VertexSpace& vs,
                             const std::string& state) {
  return usable_from_rows(sc.born[sc.state_index(state)], vs, sc.epsilon);
}

SymmetricOverlapResult max_symmetric_overlap(const Scenario& sc, const std::string& s1,
                                             const std::string& s2) {
  const int i1 = sc.state_index(s1);
  const int i2 = sc.state_index(s2);
  const VertexSpace vs = build_vertex_space(sc);
  const int V = vs.size();
  const int cols = 3 * V;  // mu block, nu block, t block

  LpProblem p;
  p.num_vars = cols;
  p.objective.assign(cols, 0.0);
  for (int l = 0; l < V; ++l) p.objective[2 * V + l] = 1.0;

  add_born_rows(p, sc, vs, i1, 0, cols);
  add_born_rows(p, sc, vs, i2, V, cols);

  // t_l <= mu_l and t_l <= nu_l make sum t the overlap of the two blocks.
  for (int l = 0; l < V; ++l) {
    std::vector<double> r1(cols, 0.0);
    r1[2 * V + l] = 1.0;
    r1[l] = -1.0;
    push_row(p, std::move(r1), RowSense::LessEq, 0.0);
    std::vector<double> r2(cols, 0.0);
    r2[2 * V + l] = 1.0;
    r2[V + l] = -1.0;
    push_row(p, std::move(r2), RowSense::LessEq, 0.0);
  }

  // Each link whose invariant is one of the pair transports the other state
  // onto the far end of the link without disturbing the invariant, so the
  // overlap is capped by the invariant's mass on the far state's usable set.
  for (const auto& link : sc.links) {
    int inv_block;
    std::string other;
    if (link.invariant == s1) {
      inv_block = 0;
      other = s2;
    } else if (link.invariant == s2) {
      inv_block = V;
      other = s1;
    } else {
      continue;
    }
    std::string far;
    if (other == link.source) {
      far = link.image;
    } else if (other == link.image) {
      far = link.source;
    } else {
      continue;
    }
    const std::vector<bool> usable = usable_set(sc, vs, far);
    std::vector<double> row(cols, 0.0);
    for (int l = 0; l < V; ++l) {
      row[2 * V + l] = 1.0;
      if (usable[l]) row[inv_block + l] = -1.0;
    }
    push_row(p, std::move(row), RowSense::LessEq, 0.0);
  }

  const LpSolution sol = solve_lp(p);
  SymmetricOverlapResult result;
  result.status = sol.status;
  if (sol.status == LpStatus::Infeasible) return result;
  if (sol.status != LpStatus::Optimal) {
    throw NumericalFailure("symmetric overlap program reported unbounded");
  }
  result.value = sol.value;

  // Witness model over the vertices: the optimizer's mu and nu for the
  // pair, independent products of the Born rows for every other state, and
  // the deterministic vertex responses.
  OnticModel& model = result.model;
  model.space.labels.reserve(V);
  for (int l = 0; l < V; ++l) model.space.labels.push_back("v" + std::to_string(l));
  for (std::size_t s = 0; s < sc.states.size(); ++s) {
    const std::string& label = sc.states[s].label;
    std::vector<double> w(V);
    if (label == s1) {
      std::copy(sol.x.begin(), sol.x.begin() + V, w.begin());
    } else if (label == s2) {
      std::copy(sol.x.begin() + V, sol.x.begin() + 2 * V, w.begin());
    } else {
      for (int l = 0; l < V; ++l) {
        double prod = 1.0;
        for (std::size_t m = 0; m < sc.measurements.size(); ++m) {
          prod *= sc.born[s][m][vs.vertices[l][m]];
        }
        w[l] = prod;
      }
    }
    model.preparations[label] = {clean_distribution(std::move(w))};
  }
  for (std::size_t m = 0; m < sc.measurements.size(); ++m) {
    ResponseFunction rf;
    rf.probs.assign(sc.measurements[m].povm.arity(), std::vector<double>(V, 0.0));
    for (int l = 0; l < V; ++l) rf.probs[vs.vertices[l][m]][l] = 1.0;
    model.responses[sc.measurements[m].label] = {std::move(rf)};
  }
  validate_model(model);
  return result;
}

AsymmetricOverlapResult max_asymmetric_overlap_upper(const Scenario& sc,
                                                     const std::string& target,
                                                     const std::string& prep_of,
                                                     const AsymmetricOptions& opt) {
  (void)sc.state_index(target);
  const int pi = sc.state_index(prep_of);
  // At eps = 0 a reproducing distribution cannot weight any vertex outside
  // the preparation's Born support, so the restriction is exact and keeps
  // the many-measurement scenarios inside vertex_guard.
  const VertexSpace vs = sc.epsilon == 0.0 ? build_restricted_vertex_space(sc, prep_of)
                                           : build_vertex_space(sc);
  const int V = vs.size();
  const int cols = V + 1;  // mu block plus the bound variable W
  const int w_col = V;

  LpProblem p;
  p.num_vars = cols;
  p.objective.assign(cols, 0.0);
  p.objective[w_col] = 1.0;
  add_born_rows(p, sc, vs, pi, 0, cols);

  const auto cap_by = [&](const std::vector<bool>& usable) {
    std::vector<double> row(cols, 0.0);
    row[w_col] = 1.0;
    for (int l = 0; l < V; ++l) {
      if (usable[l]) row[l] = -1.0;
    }
    push_row(p, std::move(row), RowSense::LessEq, 0.0);
  };

  cap_by(usable_set(sc, vs, target));
  // A link whose invariant is the prepared state transports the target to
  // the far end without disturbing mu, so the far usable set caps W too.
  for (const auto& link : sc.links) {
    if (link.invariant != prep_of) continue;
    if (link.source == target) {
      cap_by(usable_set(sc, vs, link.image));
    } else if (link.image == target) {
      cap_by(usable_set(sc, vs, link.source));
    }
  }

  if (opt.epistemic) {
    if (sc.basis_measurement.empty()) {
      throw InvalidInput("epistemic constraint needs a scenario basis measurement");
    }
    const int bi = sc.measurement_index(sc.basis_measurement);
    const Povm& basis = sc.measurements[bi].povm;
    // Epistemic hypothesis: the preparation's mass on each basis ket's
    // usable set equals the Born probability of that basis outcome. The
    // ket's response rows come from tr(E P_k) since the kets themselves
    // need not be scenario states.
    for (int k = 0; k < basis.arity(); ++k) {
      std::vector<std::vector<double>> rows;
      rows.reserve(sc.measurements.size());
      for (const auto& m : sc.measurements) {
        rows.push_back(cross_born_row(m.povm, basis.elements[k]));
      }
      const std::vector<bool> usable = usable_from_rows(rows, vs, sc.epsilon);
      std::vector<double> row(cols, 0.0);
      for (int l = 0; l < V; ++l) {
        if (usable[l]) row[l] = 1.0;
      }
      push_row(p, std::move(row), RowSense::Eq, sc.born[pi][bi][k]);
    }
    // Transporting a basis ket across a link must carry at least its Born
    // mass onto the image's usable set.
    for (const auto& link : sc.links) {
      if (link.invariant != prep_of) continue;
      for (std::size_t k = 0; k < sc.basis_states.size(); ++k) {
        if (sc.basis_states[k] != link.source || link.source.empty()) continue;
        const double rhs = sc.born[pi][bi][static_cast<int>(k)];
        if (rhs <= 0.0) continue;
        const std::vector<bool> usable = usable_set(sc, vs, link.image);
        std::vector<double> row(cols, 0.0);
        for (int l = 0; l < V; ++l) {
          if (usable[l]) row[l] = 1.0;
        }
        push_row(p, std::move(row), RowSense::GreaterEq, rhs);
      }
    }
  }

  const LpSolution sol = solve_lp(p);
  AsymmetricOverlapResult result;
  result.status = sol.status;
  if (sol.status == LpStatus::Infeasible) return result;
  if (sol.status != LpStatus::Optimal) {
    throw NumericalFailure("asymmetric overlap program reported unbounded");
  }
  result.value = sol.value;
  return result;
}

std::vector<Thm2SweepRow> reproduce_thm2(double alpha, int d_max) {
  if (d_max < 4) throw DimensionTooSmall("d_max must be at least 4");
  std::vector<Thm2SweepRow> rows;
  for (int d = 4; d <= d_max; ++d) {
    const double analytic = thm2_bound(alpha, d);
    // Count the restricted space before paying for POVM synthesis: the
    // preparation supports 3 basis outcomes and 2 outcomes of each of the
    // (d-3) + (d-3)(d-4)/2 anti-distinguishing POVMs.
    const double povms = (d - 3) + 0.5 * (d - 3) * (d - 4);
    if (3.0 * std::pow(2.0, povms) > static_cast<double>(tol().vertex_guard)) {
      throw TooLarge("restricted vertex space for d = " + std::to_string(d) +
                     " exceeds vertex_guard");
    }
    const Scenario sc = thm2_scenario(alpha, d);
    const AsymmetricOverlapResult r = max_asymmetric_overlap_upper(sc, "ket0", "psi");
    if (r.status != LpStatus::Optimal) {
      throw NumericalFailure("overlap program did not solve at d = " + std::to_string(d));
    }
    rows.push_back({d, r.value, analytic});
  }
  return rows;
}

}  // namespace onticlab
