// Copyright 2026 The anyon-chronos Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "chronos/braiding.hpp"
#include "chronos/measurement.hpp"

using namespace chronos;

namespace {
const double kPi = 3.14159265358979323846;

Mat b_matrix() {
  Mat b(2, 2);
  b << cx(0.5, 0.5), cx(0.5, -0.5), cx(0.5, -0.5), cx(0.5, 0.5);
  return b;
}
}  // namespace

TEST_SUITE("braiding") {

TEST_CASE("word parsing") {
  auto word = BraidWord::parse(6, "s2 s4 S3");
  REQUIRE(word.crossings.size() == 3);
  CHECK(word.crossings[0].index == 2);
  CHECK(word.crossings[0].over);
  CHECK(word.crossings[2].index == 3);
  CHECK_FALSE(word.crossings[2].over);
  CHECK(word.format() == "s2 s4 S3");

  CHECK(BraidWord::parse(3, "").crossings.empty());
  CHECK_THROWS_AS(BraidWord::parse(3, "s3"), Error);   // needs strand 4
  CHECK_THROWS_AS(BraidWord::parse(3, "s0"), Error);
  CHECK_THROWS_AS(BraidWord::parse(3, "x1"), Error);
  CHECK_THROWS_AS(BraidWord::parse(3, "s1 t2"), Error);
}

TEST_CASE("three-sigma generators") {
  auto model = su2_level2();
  auto basis = standard_basis(model, 3, AnyonLabel::sigma);

  Mat g1 = generator_matrix(model, basis, 1);
  CHECK(std::abs(g1(0, 0) - cx(1, 0)) < 1e-15);
  CHECK(std::abs(g1(1, 1) - cx(0, 1)) < 1e-15);
  CHECK(std::abs(g1(0, 1)) < 1e-15);

  Mat g2 = generator_matrix(model, basis, 2);
  CHECK(max_abs(g2 - b_matrix()) < 1e-12);
  CHECK(is_unitary(g2, tol::unitary));

  CHECK_THROWS_AS(generator_matrix(model, basis, 3), Error);
}

TEST_CASE("six-sigma generators") {
  auto model = su2_level2();
  auto basis = standard_basis(model, 6, AnyonLabel::vac);

  Mat g2 = generator_matrix(model, basis, 2);
  CHECK(max_abs(g2 - kron(b_matrix(), identity(2))) < 1e-12);

  Mat g3 = generator_matrix(model, basis, 3);
  CHECK(std::abs(g3(0, 0) - cx(1, 0)) < 1e-15);
  CHECK(std::abs(g3(1, 1) - cx(0, 1)) < 1e-15);
  CHECK(std::abs(g3(2, 2) - cx(0, 1)) < 1e-15);
  CHECK(std::abs(g3(3, 3) - cx(1, 0)) < 1e-15);

  Mat g5 = generator_matrix(model, basis, 5);
  Mat r = Mat::Zero(2, 2);
  r(0, 0) = cx(1, 0);
  r(1, 1) = cx(0, 1);
  CHECK(max_abs(g5 - kron(identity(2), r)) < 1e-15);

  // Ising variant swaps the diagonal phases of g3.
  auto ising = ising_variant();
  auto ibasis = standard_basis(ising, 6, AnyonLabel::vac);
  Mat ig3 = generator_matrix(ising, ibasis, 3);
  CHECK(std::abs(ig3(0, 0) - cx(0, 1)) < 1e-15);
  CHECK(std::abs(ig3(1, 1) - cx(1, 0)) < 1e-15);
}

TEST_CASE("x frame is rejected") {
  auto model = su2_level2();
  auto basis = standard_basis(model, 3, AnyonLabel::sigma);
  auto in_x = change_basis_z_to_x(basis_state(basis, 0), 0);
  CHECK_THROWS_AS(generator_matrix(model, in_x.fusion_basis(), 1), Error);
}

TEST_CASE("braid evaluation order") {
  auto model = su2_level2();
  auto basis = standard_basis(model, 3, AnyonLabel::sigma);
  Mat g1 = generator_matrix(model, basis, 1);
  Mat g2 = generator_matrix(model, basis, 2);

  CHECK(max_abs(evaluate_braid(BraidWord::parse(3, ""), model, basis) -
                identity(2)) < 1e-15);
  CHECK(max_abs(evaluate_braid(BraidWord::parse(3, "s1 S1"), model, basis) -
                identity(2)) < 1e-12);
  // First token acts first, so "s1 s2" is the operator product g2 * g1.
  CHECK(max_abs(evaluate_braid(BraidWord::parse(3, "s1 s2"), model, basis) -
                Mat(g2 * g1)) < 1e-12);

  auto word6 = BraidWord::parse(6, "s1");
  CHECK_THROWS_AS(evaluate_braid(word6, model, basis), Error);
}

TEST_CASE("relations hold in both models on both bases") {
  for (const char* name : {"su2_2", "ising"}) {
    auto model = model_by_name(name);
    for (int n : {3, 6}) {
      auto basis = standard_basis(
          model, n, n == 3 ? AnyonLabel::sigma : AnyonLabel::vac);
      auto report = verify_braid_relations(model, basis);
      for (const auto& check : report.checks) {
        INFO(name, " n=", n, " ", check.name, " residual ", check.residual);
        CHECK(check.passed);
      }
    }
  }
}

TEST_CASE("y basis identities") {
  Mat b = b_matrix();
  Vec lhs1 = std::exp(cx(0, kPi / 4)) * (b * ket1());
  CHECK(max_abs(Vec(lhs1 - ket_plus_i())) < 1e-12);
  Vec lhs0 = std::exp(cx(0, -kPi / 4)) * (b * ket0());
  CHECK(max_abs(Vec(lhs0 - ket_minus_i())) < 1e-12);
}

TEST_CASE("two-triple Bell preparation word") {
  auto model = su2_level2();
  auto basis = standard_basis(model, 6, AnyonLabel::vac);
  Mat u = evaluate_braid(BraidWord::parse(6, "s2 s4 s3"), model, basis);
  Vec out = u.col(0);

  Vec target(4);
  target << cx(0.5, 0), cx(0.5, 0), cx(0.5, 0), cx(-0.5, 0);
  CHECK(fidelity(out, target) == doctest::Approx(1.0).epsilon(1e-12));
  // The global phase is i.
  CHECK(max_abs(Vec(out - cx(0, 1) * target)) < 1e-12);

  // The all-under word prepares the same state with the opposite phase.
  Mat u_inv = evaluate_braid(BraidWord::parse(6, "S2 S4 S3"), model, basis);
  CHECK(fidelity(Vec(u_inv.col(0)), target) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("closure orders") {
  auto model = su2_level2();
  auto basis3 = standard_basis(model, 3, AnyonLabel::sigma);
  auto closure3 = group_closure(basis_generators(model, basis3));
  CHECK(closure3.order() == 24);

  auto ising = ising_variant();
  auto ibasis3 = standard_basis(ising, 3, AnyonLabel::sigma);
  CHECK(group_closure(basis_generators(ising, ibasis3)).order() == 24);

  auto basis6 = standard_basis(model, 6, AnyonLabel::vac);
  auto closure6 = group_closure(basis_generators(model, basis6));
  CHECK(closure6.order() == 11520);
}

TEST_CASE("closure is a group") {
  auto model = su2_level2();
  auto basis = standard_basis(model, 3, AnyonLabel::sigma);
  auto closure = group_closure(basis_generators(model, basis));
  REQUIRE(closure.order() == 24);

  std::set<std::string> keys;
  for (const auto& el : closure.elements) keys.insert(el.key);
  CHECK(keys.size() == 24);
  for (const auto& a : closure.elements) {
    CHECK(keys.count(PhaseCanonicalGate::from(a.matrix.adjoint()).key) == 1);
    for (const auto& b : closure.elements) {
      CHECK(keys.count(PhaseCanonicalGate::from(Mat(a.matrix * b.matrix)).key) ==
            1);
    }
  }

  // Square roots of all three Pauli operators appear.
  Mat b = b_matrix();
  Mat r = Mat::Zero(2, 2);
  r(0, 0) = cx(1, 0);
  r(1, 1) = cx(0, 1);
  Mat rbr = r * b * r.adjoint();
  CHECK(keys.count(PhaseCanonicalGate::from(b).key) == 1);
  CHECK(keys.count(PhaseCanonicalGate::from(r).key) == 1);
  CHECK(keys.count(PhaseCanonicalGate::from(rbr).key) == 1);
  CHECK(max_abs(phase_canonical(Mat(b * b)) - phase_canonical(pauli_x())) <
        1e-12);
  CHECK(max_abs(phase_canonical(Mat(r * r)) - phase_canonical(pauli_z())) <
        1e-12);
  CHECK(max_abs(phase_canonical(Mat(rbr * rbr)) - phase_canonical(pauli_y())) <
        1e-12);
}

TEST_CASE("orbit of a basis state") {
  auto model = su2_level2();
  auto basis = standard_basis(model, 3, AnyonLabel::sigma);
  auto closure = group_closure(basis_generators(model, basis));
  auto orbit = reachable_states(basis_state(basis, 0), closure);
  CHECK(orbit.size() == 6);

  int equatorial = 0;
  for (const auto& v : orbit) {
    auto bloch = bloch_vector(v);
    if (std::abs(bloch[2]) < 1e-9) ++equatorial;
  }
  CHECK(equatorial == 4);

  // The orbit is exactly the single-qubit stabilizer states.
  std::set<std::string> orbit_keys;
  for (const auto& v : orbit) orbit_keys.insert(canonical_key(v));
  std::set<std::string> stab_keys;
  for (const auto& s : stabilizer_states(1)) stab_keys.insert(canonical_key(s));
  CHECK(orbit_keys == stab_keys);
}

TEST_CASE("closure budget") {
  Mat slow = Mat::Zero(2, 2);
  slow(0, 0) = cx(1, 0);
  slow(1, 1) = std::exp(cx(0, 0.1));
  CHECK_THROWS_AS(group_closure({slow}, 100), Error);
  try {
    group_closure({slow}, 100);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::budget);
  }
}

}  // TEST_SUITE
