// Unit tests for POVM validation, anti-distinguishing synthesis, and the two-state
// minimum-error measurement.
#include "doctest.h"

#include <chrono>
#include <cmath>

#include "onticlab/constructions.hpp"
#include "onticlab/povm_synth.hpp"
#include "test_support.hpp"

using namespace onticlab;

TEST_CASE("check_povm accepts projective measurements and rejects broken input") {
  Onb basis = complete_onb({}, 3);
  CHECK_NOTHROW(check_povm(projective_measurement(basis)));

  Povm broken = projective_measurement(basis);
  broken.elements.pop_back();
  broken.labels.pop_back();
  CHECK_THROWS_AS(check_povm(broken), InvalidPovm);  // does not sum to identity

  Povm negative;
  negative.labels = {"a", "b"};
  negative.elements = {scaled(identity_op(2), cplx(1.5, 0.0)),
                       scaled(identity_op(2), cplx(-0.5, 0.0))};
  CHECK_THROWS_AS(check_povm(negative), InvalidPovm);  // negative eigenvalue
}

TEST_CASE("verify_antidistinguishing on a hand-built certificate") {
  // psi1 = psi2 = e0, psi3 = e1: the criterion fails (overlap sum reaches 1) yet the
  // measurement {e1 projector, rest, e0 projector} anti-distinguishes, showing the
  // criterion is sufficient but not necessary.
  StateVector e0 = basis_vector(3, 0);
  StateVector e1 = basis_vector(3, 1);
  CHECK_FALSE(antidist_criterion(1.0, 0.0, 0.0));

  Povm p;
  p.labels = {"not_0", "not_1", "not_2"};
  Operator rest = identity_op(3);
  rest = sub(rest, outer(e0, e0));
  rest = sub(rest, outer(e1, e1));
  p.elements = {outer(e1, e1), rest, outer(e0, e0)};
  AntidistReport r = verify_antidistinguishing(p, {e0, e0, e1});
  CHECK(r.pass);
  CHECK(r.max_error <= 1e-12);

  CHECK_THROWS_AS(verify_antidistinguishing(p, {e0, e1}), ArityMismatch);
}

TEST_CASE("synthesize_antidistinguishing on the alpha = 0.5 family triple") {
  Thm1Family f = build_thm1(0.5, 4);
  const std::vector<StateVector> triple = {f.basis.vectors[0], f.psi, f.phi};
  SynthesisResult s = synthesize_antidistinguishing(triple, 100000, 1e-8);
  CHECK(s.residual <= 1e-8);
  AntidistReport r = verify_antidistinguishing(s.povm, triple);
  CHECK(r.pass);
  CHECK(r.max_error < 1e-7);
}

TEST_CASE("synthesize_antidistinguishing rejects triples failing the criterion") {
  // Three copies of nearly the same state cannot be anti-distinguished.
  StateVector e0 = basis_vector(4, 0);
  StateVector e1 = basis_vector(4, 1);
  StateVector mix({cplx(std::sqrt(0.8), 0.0), cplx(std::sqrt(0.2), 0.0), cplx(0.0, 0.0),
                   cplx(0.0, 0.0)});
  CHECK_THROWS_AS(synthesize_antidistinguishing({e0, mix, e0}, 1000, 1e-8), CriterionFailed);
  CHECK_THROWS_AS(synthesize_antidistinguishing({e0, e1}, 1000, 1e-8), ArityMismatch);
}

TEST_CASE("synthesis property: random criterion-passing triples converge (seed 42)") {
  auto rng = testsupport::make_rng(6);
  int attempted = 0;
  int passing = 0;
  while (attempted < 200) {
    ++attempted;
    std::vector<StateVector> triple = {testsupport::random_state(rng, 4),
                                       testsupport::random_state(rng, 4),
                                       testsupport::random_state(rng, 4)};
    const double a = std::norm(inner_product(triple[0], triple[1]));
    const double b = std::norm(inner_product(triple[0], triple[2]));
    const double c = std::norm(inner_product(triple[1], triple[2]));
    if (!antidist_criterion(a, b, c)) continue;
    ++passing;
    SynthesisResult s = synthesize_antidistinguishing(triple, 200000, 1e-8);
    AntidistReport r = verify_antidistinguishing(s.povm, triple);
    CHECK(r.pass);
  }
  // The generator should exercise a healthy number of criterion-passing triples.
  CHECK(passing >= 20);
}

TEST_CASE("helstrom_bound values and domain") {
  CHECK(helstrom_bound(0.25) == doctest::Approx(1.0 - std::sqrt(0.75)).epsilon(1e-12));
  CHECK(helstrom_bound(0.0) == doctest::Approx(0.0));
  CHECK(helstrom_bound(1.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(helstrom_bound(-0.1), OutOfRange);
  CHECK_THROWS_AS(helstrom_bound(1.1), OutOfRange);
}

TEST_CASE("helstrom_measurement on |0> vs |+>") {
  const double r = 1.0 / std::sqrt(2.0);
  StateVector zero = basis_vector(2, 0);
  StateVector plus({cplx(r, 0.0), cplx(r, 0.0)});
  HelstromResult h = helstrom_measurement(zero, plus);
  check_povm(h.povm);
  // Error probability (1 - 1/sqrt2)/2 at equal priors.
  CHECK(h.error == doctest::Approx(0.5 * (1.0 - r)).epsilon(1e-10));
  CHECK_THROWS_AS(helstrom_measurement(zero, zero), IdenticalStates);
}

TEST_CASE("helstrom property: empirical error equals half the bound (seed 42)") {
  auto rng = testsupport::make_rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 5);
    StateVector psi = testsupport::random_state(rng, d);
    StateVector phi = testsupport::random_state(rng, d);
    const double ov = std::norm(inner_product(psi, phi));
    if (ov >= 1.0 - 1e-8) continue;
    HelstromResult h = helstrom_measurement(psi, phi);
    CHECK(std::abs(h.error - 0.5 * helstrom_bound(ov)) < 1e-8);
  }
}
