// Unit tests for the dense two-phase simplex.
#include "doctest.h"

#include <cmath>
#include <vector>

#include "onticlab/simplex.hpp"
#include "onticlab/errors.hpp"
#include "test_support.hpp"

using namespace onticlab;

namespace {

LpProblem make_lp(std::vector<double> c, std::vector<std::vector<double>> rows,
                  std::vector<RowSense> senses, std::vector<double> rhs) {
  LpProblem p;
  p.num_vars = static_cast<int>(c.size());
  p.objective = std::move(c);
  p.rows = std::move(rows);
  p.senses = std::move(senses);
  p.rhs = std::move(rhs);
  return p;
}

}  // namespace

TEST_CASE("single bounded variable") {
  const LpSolution s = solve_lp(make_lp({1}, {{1}}, {RowSense::LessEq}, {3}));
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.value == doctest::Approx(3.0));
  CHECK(s.x[0] == doctest::Approx(3.0));
}

TEST_CASE("shared budget over two variables") {
  const LpSolution s =
      solve_lp(make_lp({1, 1}, {{1, 1}}, {RowSense::LessEq}, {1}));
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.value == doctest::Approx(1.0));
}

TEST_CASE("infeasible sign conflict") {
  const LpSolution s = solve_lp(make_lp({1}, {{1}}, {RowSense::LessEq}, {-1}));
  CHECK(s.status == LpStatus::Infeasible);
}

TEST_CASE("unbounded ray") {
  CHECK(solve_lp(make_lp({1}, {}, {}, {})).status == LpStatus::Unbounded);
  CHECK(solve_lp(make_lp({1, 0}, {{0, 1}}, {RowSense::LessEq}, {1})).status ==
        LpStatus::Unbounded);
  // A zero objective over an unbounded region is still optimal at 0.
  const LpSolution s = solve_lp(make_lp({0}, {}, {}, {}));
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.value == 0.0);
}

TEST_CASE("equality rows route through phase 1") {
  const LpSolution s =
      solve_lp(make_lp({1, 2}, {{1, 1}}, {RowSense::Eq}, {1}));
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.value == doctest::Approx(2.0));
  CHECK(s.x[0] == doctest::Approx(0.0));
  CHECK(s.x[1] == doctest::Approx(1.0));

  // Contradictory equalities.
  CHECK(solve_lp(make_lp({1, 1}, {{1, 1}, {1, 1}}, {RowSense::Eq, RowSense::Eq}, {1, 2})).status ==
        LpStatus::Infeasible);
}

TEST_CASE("greater-equal rows and minimization via negated objective") {
  const LpSolution s = solve_lp(make_lp({-1}, {{1}}, {RowSense::GreaterEq}, {2}));
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.value == doctest::Approx(-2.0));
  CHECK(s.x[0] == doctest::Approx(2.0));
}

TEST_CASE("redundant equalities are tolerated") {
  const LpSolution s = solve_lp(make_lp(
      {3, 1}, {{1, 1}, {1, 1}, {1, 0}},
      {RowSense::Eq, RowSense::Eq, RowSense::LessEq}, {1, 1, 0.25}));
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.value == doctest::Approx(3 * 0.25 + 0.75));
  CHECK(s.x[0] == doctest::Approx(0.25));
  CHECK(s.x[1] == doctest::Approx(0.75));
}

TEST_CASE("min-of-two objective encoded with coupled variables") {
  // maximize t with t <= x, t <= y, x + y = 1: optimum 1/2.
  const LpSolution s = solve_lp(make_lp(
      {0, 0, 1},
      {{-1, 0, 1}, {0, -1, 1}, {1, 1, 0}},
      {RowSense::LessEq, RowSense::LessEq, RowSense::Eq}, {0, 0, 1}));
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.value == doctest::Approx(0.5));
}

TEST_CASE("transportation polytope with fixed marginals") {
  // Variables x_ij over a 2x3 grid; row sums (0.4, 0.6), column sums
  // (0.3, 0.3, 0.4); maximize x_00 + x_12: optimum 0.3 + 0.4.
  const LpSolution s = solve_lp(make_lp(
      {1, 0, 0, 0, 0, 1},
      {
          {1, 1, 1, 0, 0, 0},
          {0, 0, 0, 1, 1, 1},
          {1, 0, 0, 1, 0, 0},
          {0, 1, 0, 0, 1, 0},
          {0, 0, 1, 0, 0, 1},
      },
      {RowSense::Eq, RowSense::Eq, RowSense::Eq, RowSense::Eq, RowSense::Eq},
      {0.4, 0.6, 0.3, 0.3, 0.4}));
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.value == doctest::Approx(0.7));
}

TEST_CASE("random dense feasible programs stay within their constraints") {
  auto rng = testsupport::make_rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(unit(rng) * 5);
    const int m = 1 + static_cast<int>(unit(rng) * 4);
    LpProblem p;
    p.num_vars = n;
    for (int j = 0; j < n; ++j) p.objective.push_back(unit(rng) - 0.3);
    for (int i = 0; i < m; ++i) {
      std::vector<double> row;
      for (int j = 0; j < n; ++j) row.push_back(unit(rng));
      p.rows.push_back(row);
      p.senses.push_back(RowSense::LessEq);
      p.rhs.push_back(0.5 + unit(rng));
    }
    // Keep the region bounded.
    p.rows.push_back(std::vector<double>(static_cast<std::size_t>(n), 1.0));
    p.senses.push_back(RowSense::LessEq);
    p.rhs.push_back(2.0);

    const LpSolution s = solve_lp(p);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value >= -1e-12);  // x = 0 is always feasible here
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
      double lhs = 0.0;
      for (int j = 0; j < n; ++j) lhs += p.rows[i][static_cast<std::size_t>(j)] * s.x[static_cast<std::size_t>(j)];
      CHECK(lhs <= p.rhs[i] + 1e-7);
    }
  }
}

TEST_CASE("malformed problems are rejected") {
  LpProblem p;
  p.num_vars = 2;
  p.objective = {1};
  CHECK_THROWS_AS(solve_lp(p), InvalidInput);
  p.objective = {1, 1};
  p.rows = {{1}};
  p.senses = {RowSense::LessEq};
  p.rhs = {1};
  CHECK_THROWS_AS(solve_lp(p), InvalidInput);
}
