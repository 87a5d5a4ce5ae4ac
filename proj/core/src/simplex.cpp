// Two-phase dense simplex: Dantzig pricing with a Bland anti-cycling
// fallback that engages after a run of degenerate pivots.
#include "onticlab/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "onticlab/errors.hpp"
#include "onticlab/tolerances.hpp"

namespace onticlab {

namespace {

// Tableau layout: structural columns, then one slack or surplus per
// inequality, then one artificial per equality or surplus row. basis[i]
// names the column basic in row i; obj[j] holds c_B B^-1 A_j - c_j, so a
// negative entry marks an improving column for maximization.
struct Tableau {
  int cols = 0;
  std::vector<std::vector<double>> t;  // m rows
  std::vector<double> rhs;
  std::vector<double> obj;
  std::vector<int> basis;
  long pivots = 0;

  void pivot(int row, int col) {
    std::vector<double>& pr = t[static_cast<std::size_t>(row)];
    const double pv = pr[static_cast<std::size_t>(col)];
    for (double& v : pr) v /= pv;
    rhs[static_cast<std::size_t>(row)] /= pv;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (static_cast<int>(i) == row) continue;
      const double f = t[i][static_cast<std::size_t>(col)];
      if (f == 0.0) continue;
      for (int j = 0; j < cols; ++j) {
        t[i][static_cast<std::size_t>(j)] -= f * pr[static_cast<std::size_t>(j)];
      }
      rhs[i] -= f * rhs[static_cast<std::size_t>(row)];
    }
    const double f = obj[static_cast<std::size_t>(col)];
    if (f != 0.0) {
      for (int j = 0; j < cols; ++j) {
        obj[static_cast<std::size_t>(j)] -= f * pr[static_cast<std::size_t>(j)];
      }
    }
    basis[static_cast<std::size_t>(row)] = col;
    ++pivots;
  }

  // Returns false when no improving column remains (optimal), throws on an
  // unbounded ray via the caller's flag.
  bool iterate(const std::vector<bool>& allowed, bool* unbounded, long pivot_cap) {
    const double eps = tol().lp_pivot;
    int enter = -1;
    if (stalled < kStallLimit) {
      // Dantzig pricing: steepest reduced cost, smallest index on ties.
      double best_obj = -eps;
      for (int j = 0; j < cols; ++j) {
        if (allowed[static_cast<std::size_t>(j)] && obj[static_cast<std::size_t>(j)] < best_obj) {
          best_obj = obj[static_cast<std::size_t>(j)];
          enter = j;
        }
      }
    } else {
      // After a run of degenerate pivots, fall back to Bland's smallest
      // improving index, which cannot cycle; a strict step re-arms Dantzig.
      for (int j = 0; j < cols; ++j) {
        if (allowed[static_cast<std::size_t>(j)] && obj[static_cast<std::size_t>(j)] < -eps) {
          enter = j;
          break;
        }
      }
    }
    if (enter < 0) return false;
    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double a = t[i][static_cast<std::size_t>(enter)];
      if (a <= eps) continue;
      const double ratio = rhs[i] / a;
      // Bland again: break ratio ties toward the smallest basic index.
      if (ratio < best - 1e-15 || (ratio <= best + 1e-15 && (leave < 0 || basis[i] < basis[static_cast<std::size_t>(leave)]))) {
        best = ratio;
        leave = static_cast<int>(i);
      }
    }
    if (leave < 0) {
      *unbounded = true;
      return false;
    }
    if (best <= 1e-12) {
      ++stalled;
    } else {
      stalled = 0;
    }
    pivot(leave, enter);
    if (pivots > pivot_cap) throw NumericalFailure("simplex pivot limit exceeded");
    return true;
  }

  static constexpr int kStallLimit = 64;  // degenerate pivots before Bland mode
  int stalled = 0;
};

}  // namespace

LpSolution solve_lp(const LpProblem& p) {
  const int n = p.num_vars;
  const std::size_t m = p.rows.size();
  if (n < 0 || static_cast<int>(p.objective.size()) != n || p.senses.size() != m ||
      p.rhs.size() != m) {
    throw InvalidInput("malformed linear program");
  }
  for (const std::vector<double>& row : p.rows) {
    if (static_cast<int>(row.size()) != n) throw InvalidInput("malformed linear program row");
  }

  // Normalize to nonnegative right-hand sides.
  std::vector<std::vector<double>> rows = p.rows;
  std::vector<double> rhs = p.rhs;
  std::vector<RowSense> senses = p.senses;
  for (std::size_t i = 0; i < m; ++i) {
    if (rhs[i] < 0.0) {
      for (double& v : rows[i]) v = -v;
      rhs[i] = -rhs[i];
      if (senses[i] == RowSense::LessEq) {
        senses[i] = RowSense::GreaterEq;
      } else if (senses[i] == RowSense::GreaterEq) {
        senses[i] = RowSense::LessEq;
      }
    }
  }

  int num_slack = 0;
  int num_art = 0;
  for (RowSense s : senses) {
    if (s != RowSense::Eq) ++num_slack;
    if (s != RowSense::LessEq) ++num_art;
  }

  Tableau tab;
  tab.cols = n + num_slack + num_art;
  tab.t.assign(m, std::vector<double>(static_cast<std::size_t>(tab.cols), 0.0));
  tab.rhs = rhs;
  tab.basis.assign(m, -1);
  const int art0 = n + num_slack;
  {
    int slack = n;
    int art = art0;
    for (std::size_t i = 0; i < m; ++i) {
      std::copy(rows[i].begin(), rows[i].end(), tab.t[i].begin());
      if (senses[i] == RowSense::LessEq) {
        tab.t[i][static_cast<std::size_t>(slack)] = 1.0;
        tab.basis[i] = slack++;
      } else if (senses[i] == RowSense::GreaterEq) {
        tab.t[i][static_cast<std::size_t>(slack++)] = -1.0;
        tab.t[i][static_cast<std::size_t>(art)] = 1.0;
        tab.basis[i] = art++;
      } else {
        tab.t[i][static_cast<std::size_t>(art)] = 1.0;
        tab.basis[i] = art++;
      }
    }
  }

  const long pivot_cap = 200000 + 50L * (static_cast<long>(m) + tab.cols);
  std::vector<bool> allowed(static_cast<std::size_t>(tab.cols), true);

  // Phase 1: maximize minus the artificial mass; obj[j] = -sum of the rows
  // with a basic artificial, +1 on the artificial columns themselves.
  if (num_art > 0) {
    tab.obj.assign(static_cast<std::size_t>(tab.cols), 0.0);
    for (int j = art0; j < tab.cols; ++j) tab.obj[static_cast<std::size_t>(j)] = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis[i] < art0) continue;
      for (int j = 0; j < tab.cols; ++j) {
        tab.obj[static_cast<std::size_t>(j)] -= tab.t[i][static_cast<std::size_t>(j)];
      }
    }
    bool unbounded = false;
    while (tab.iterate(allowed, &unbounded, pivot_cap)) {
    }
    double art_mass = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis[i] >= art0) art_mass += tab.rhs[i];
    }
    if (art_mass > tol().lp_feas) return LpSolution{LpStatus::Infeasible, 0.0, {}};

    // Drive leftover degenerate artificials out of the basis; a row with no
    // eligible pivot is redundant and can be cleared by leaving the zero
    // artificial basic but barring it from re-entering.
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis[i] < art0) continue;
      for (int j = 0; j < art0; ++j) {
        if (std::abs(tab.t[i][static_cast<std::size_t>(j)]) > tol().lp_pivot) {
          tab.pivot(static_cast<int>(i), j);
          break;
        }
      }
    }
    for (int j = art0; j < tab.cols; ++j) allowed[static_cast<std::size_t>(j)] = false;
  }

  // Phase 2 objective row over the current basis.
  tab.obj.assign(static_cast<std::size_t>(tab.cols), 0.0);
  for (int j = 0; j < n; ++j) tab.obj[static_cast<std::size_t>(j)] = -p.objective[static_cast<std::size_t>(j)];
  for (std::size_t i = 0; i < m; ++i) {
    const int b = tab.basis[i];
    if (b < 0 || b >= n) continue;
    const double cb = p.objective[static_cast<std::size_t>(b)];
    if (cb == 0.0) continue;
    for (int j = 0; j < tab.cols; ++j) {
      tab.obj[static_cast<std::size_t>(j)] += cb * tab.t[i][static_cast<std::size_t>(j)];
    }
  }

  tab.stalled = 0;
  bool unbounded = false;
  while (tab.iterate(allowed, &unbounded, pivot_cap)) {
  }
  if (unbounded) return LpSolution{LpStatus::Unbounded, 0.0, {}};

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.x.assign(static_cast<std::size_t>(n), 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] >= 0 && tab.basis[i] < n) {
      sol.x[static_cast<std::size_t>(tab.basis[i])] = tab.rhs[i];
    }
  }
  for (int j = 0; j < n; ++j) {
    sol.value += p.objective[static_cast<std::size_t>(j)] * sol.x[static_cast<std::size_t>(j)];
  }

  // Honest exit: the reported point must satisfy the original system.
  for (std::size_t i = 0; i < m; ++i) {
    double lhs = 0.0;
    for (int j = 0; j < n; ++j) {
      lhs += p.rows[i][static_cast<std::size_t>(j)] * sol.x[static_cast<std::size_t>(j)];
    }
    const double defect = lhs - p.rhs[i];
    const bool bad = (p.senses[i] == RowSense::LessEq && defect > tol().lp_feas) ||
                     (p.senses[i] == RowSense::GreaterEq && defect < -tol().lp_feas) ||
                     (p.senses[i] == RowSense::Eq && std::abs(defect) > tol().lp_feas);
    if (bad) throw NumericalFailure("simplex solution violates a constraint");
  }
  for (double v : sol.x) {
    if (v < -tol().lp_feas) throw NumericalFailure("simplex solution violates a sign bound");
  }
  return sol;
}

}  // namespace onticlab
