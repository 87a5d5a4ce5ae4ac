// Dense two-phase simplex for the small overlap-maximization programs.
// Maximizes over nonnegative variables with mixed-sense rows; Bland's rule
// prevents cycling. No scaling heuristics: problems here are tiny and
// well-conditioned, and failures are reported, never patched.
#pragma once

#include <vector>

namespace onticlab {

enum class LpStatus { Optimal, Infeasible, Unbounded };

enum class RowSense { LessEq, Eq, GreaterEq };

// maximize objective . x subject to rows[i] . x (sense_i) rhs[i], x >= 0.
struct LpProblem {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<RowSense> senses;
  std::vector<double> rhs;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;
  std::vector<double> x;  // empty unless status is Optimal
};

// Throws InvalidInput on malformed shapes and NumericalFailure if the final
// basis violates a constraint beyond lp_feas or the pivot count explodes.
LpSolution solve_lp(const LpProblem& p);

}  // namespace onticlab
