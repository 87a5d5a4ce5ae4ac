// Closed-form bound evaluators and the improvement-region sweep.
#include "onticlab/bounds.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "onticlab/errors.hpp"
#include "onticlab/povm_synth.hpp"

namespace onticlab {

double asym_trivial_bound(double overlap_sq) {
  if (overlap_sq < 0.0 || overlap_sq > 1.0) throw OutOfRange("overlap_sq must lie in [0, 1]");
  return overlap_sq;
}

double thm1_bound(double alpha) {
  if (alpha <= 0.0 || alpha >= 1.0 / std::sqrt(2.0)) {
    throw OutOfRange("alpha must lie strictly inside (0, 1/sqrt2)");
  }
  return alpha * alpha * (0.5 + alpha * alpha);
}

double thm2_bound(double alpha, int d) {
  if (d <= 3) throw DimensionTooSmall("d must exceed 3");
  if (alpha <= 0.0 || alpha * alpha >= 0.25) {
    throw OutOfRange("alpha^2 must lie strictly inside (0, 1/4)");
  }
  return alpha * alpha * (1.0 + 2.0 * alpha) / (d - 2);
}

double thm3_bound(double alpha, int d, double epsilon) {
  if (epsilon < 0.0 || epsilon > 1.0) throw OutOfRange("epsilon must lie in [0, 1]");
  const double base = thm2_bound(alpha, d);
  const double dd = static_cast<double>(d);
  return base + (3.0 * dd * dd - 7.0 * dd) / (2.0 * (dd - 2.0)) * epsilon;
}

double symmetric_trivial_bound(double overlap_sq) { return helstrom_bound(overlap_sq); }

BoundResult bound_result(const std::string& formula_id, double alpha, int d, double epsilon) {
  BoundResult r;
  r.formula_id = formula_id;
  r.inputs = {alpha, d, epsilon};
  if (formula_id == "eq6") {
    r.value = asym_trivial_bound(alpha * alpha);
  } else if (formula_id == "thm1") {
    r.value = thm1_bound(alpha);
  } else if (formula_id == "thm2") {
    r.value = thm2_bound(alpha, d);
  } else if (formula_id == "thm3") {
    r.value = thm3_bound(alpha, d, epsilon);
  } else if (formula_id == "eq16") {
    r.value = symmetric_trivial_bound(alpha * alpha);
  } else {
    throw UnknownLabel("no bound formula '" + formula_id + "'");
  }
  r.exceeds_one = r.value > 1.0;
  return r;
}

std::vector<SweepRow> improvement_region(int d, double epsilon) {
  if (d <= 3) throw DimensionTooSmall("d must exceed 3");
  if (epsilon < 0.0 || epsilon > 1.0) throw OutOfRange("epsilon must lie in [0, 1]");
  std::vector<SweepRow> rows;
  rows.reserve(99);
  for (int k = 1; k <= 99; ++k) {
    SweepRow row;
    row.alpha_sq = static_cast<double>(k) / 400.0;
    row.d = d;
    row.epsilon = epsilon;
    const double alpha = std::sqrt(row.alpha_sq);
    row.eq6 = asym_trivial_bound(row.alpha_sq);
    row.thm1 = thm1_bound(alpha);
    row.thm2 = thm2_bound(alpha, d);
    row.thm3 = thm3_bound(alpha, d, epsilon);
    row.eq16 = symmetric_trivial_bound(row.alpha_sq);
    row.improves = row.thm3 < row.eq16;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace onticlab
