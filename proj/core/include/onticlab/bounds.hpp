// Closed-form evaluators for the overlap bounds: the Born-rule ceiling on
// the asymmetric overlap, the single-companion bound, the d-companion bound
// with and without measurement error, the minimum-error ceiling on the
// symmetric overlap, and the sweep comparing them across the alpha grid.
#pragma once

#include <string>
#include <vector>

namespace onticlab {

struct BoundInputs {
  double alpha = 0.0;
  int d = 0;
  double epsilon = 0.0;
};

// Raw formula value; never clamped. A value above 1 is still returned and
// flagged so callers can compose with the trivial ceilings explicitly.
struct BoundResult {
  double value = 0.0;
  std::string formula_id;
  BoundInputs inputs;
  bool exceeds_one = false;
};

// The Born probability itself bounds the asymmetric overlap. Throws
// OutOfRange outside [0, 1].
double asym_trivial_bound(double overlap_sq);

// alpha^2 (1/2 + alpha^2), strictly below alpha^2 on the whole domain
// alpha in (0, 1/sqrt2). Throws OutOfRange.
double thm1_bound(double alpha);

// alpha^2 (1 + 2 alpha) / (d - 2), monotone decreasing in d. Domain
// alpha^2 in (0, 1/4), d > 3. Throws OutOfRange / DimensionTooSmall.
double thm2_bound(double alpha, int d);

// thm2_bound plus the error term (3d^2 - 7d) / (2(d - 2)) * epsilon for
// epsilon in [0, 1]. Throws OutOfRange / DimensionTooSmall.
double thm3_bound(double alpha, int d, double epsilon);

// 1 - sqrt(1 - overlap_sq), the minimum-error ceiling on the symmetric
// overlap. Throws OutOfRange outside [0, 1].
double symmetric_trivial_bound(double overlap_sq);

// Evaluates one formula by id ("eq6", "thm1", "thm2", "thm3", "eq16"; the
// trivial bounds take overlap_sq = alpha^2) and records its inputs and the
// exceeds-one flag. Throws UnknownLabel for an unrecognized id.
BoundResult bound_result(const std::string& formula_id, double alpha, int d, double epsilon);

struct SweepRow {
  double alpha_sq = 0.0;
  int d = 0;
  double epsilon = 0.0;
  double eq6 = 0.0;
  double thm1 = 0.0;
  double thm2 = 0.0;
  double thm3 = 0.0;
  double eq16 = 0.0;
  bool improves = false;  // thm3 below the minimum-error ceiling eq16
};

// Evaluates every bound over the default grid alpha^2 = k/400 for
// k = 1..99 (evenly spaced across (0, 1/4) away from the endpoints).
// Throws DimensionTooSmall / OutOfRange.
std::vector<SweepRow> improvement_region(int d, double epsilon);

}  // namespace onticlab
