#include <doctest.h>

#include <set>

#include "altham/invariant_solver.hpp"
#include "helpers.hpp"

using namespace altham;
using namespace altham::solver;

namespace {

RealMatrix rotation_generator(double lambda = 1.0) {
  RealMatrix a(2, 2);
  a << 0, lambda, -lambda, 0;
  return a;
}

RealMatrix two_block_oscillator(double l1, double l2) {
  RealMatrix a = RealMatrix::Zero(4, 4);
  a.block(0, 0, 2, 2) = rotation_generator(l1);
  a.block(2, 2, 2, 2) = rotation_generator(l2);
  return a;
}

}  // namespace

TEST_CASE("symmetric invariant forms of the rotation generator span I") {
  const auto basis =
      solve_invariant_forms(rotation_generator(), FormKind::Symmetric);
  REQUIRE(basis.dimension() == 1);
  CHECK(basis.projection_residual(RealMatrix::Identity(2, 2)) < 1e-12);
  CHECK(basis.residuals[0] < 1e-12);
}

TEST_CASE("skew invariant forms of the rotation generator") {
  const auto basis = solve_invariant_forms(rotation_generator(), FormKind::Skew);
  REQUIRE(basis.dimension() == 1);
  CHECK(basis.projection_residual(rotation_generator()) < 1e-12);
}

TEST_CASE("two rotation blocks with distinct frequencies decouple") {
  const RealMatrix a = two_block_oscillator(1.0, 2.0);
  const auto sym = solve_invariant_forms(a, FormKind::Symmetric);
  CHECK(sym.dimension() == 2);
  const auto skew = solve_invariant_forms(a, FormKind::Skew);
  CHECK(skew.dimension() == 2);
}

TEST_CASE("invariant basis elements are Frobenius-orthonormal") {
  const RealMatrix a = two_block_oscillator(1.0, 2.0);
  const auto basis = solve_invariant_forms(a, FormKind::Symmetric);
  for (Index i = 0; i < basis.dimension(); ++i)
    for (Index k = 0; k < basis.dimension(); ++k) {
      const double ip = (basis.basis[i].array() * basis.basis[k].array()).sum();
      CHECK(ip == doctest::Approx(i == k ? 1.0 : 0.0).epsilon(1e-10));
    }
}

TEST_CASE("kernel dimension is a similarity invariant") {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 5; ++trial) {
    const auto sys = test::seeded_factorable(100 + trial, 4, false);
    const RealMatrix s = rng::invertible_matrix(gen, 4);
    const RealMatrix a2 = s * sys.a * s.inverse();
    for (FormKind kind : {FormKind::Symmetric, FormKind::Skew}) {
      CHECK(solve_invariant_forms(sys.a, kind).dimension() ==
            solve_invariant_forms(a2, kind).dimension());
    }
  }
}

TEST_CASE("trace condition: rotation passes, identity fails") {
  const auto pass = check_trace_condition(rotation_generator(), 3);
  CHECK(pass.pass);
  for (double t : pass.traces) CHECK(t < 1e-14);

  const auto fail = check_trace_condition(RealMatrix::Identity(2, 2), 1);
  CHECK_FALSE(fail.pass);
  CHECK(fail.traces[0] == doctest::Approx(2.0));
}

TEST_CASE("trace condition on seeded factorizable systems") {
  for (int trial = 0; trial < 10; ++trial) {
    const auto sys = test::seeded_factorable(500 + trial, 6, false);
    const auto rep = check_trace_condition(sys.a, 5);
    CHECK(rep.pass);
  }
}

TEST_CASE("factorization of the rotation generator") {
  const RealMatrix a = rotation_generator();
  const auto set = enumerate_factorizations(a, 100, 1);
  REQUIRE(set.status == FactorStatus::Ok);
  REQUIRE_FALSE(set.found.empty());
  bool positive_found = false;
  for (const auto& f : set.found) {
    CHECK(f.residual <= 1e-10);
    CHECK((a - f.lambda * f.h).norm() <= 1e-10 * a.norm());
    if (f.h_positive_definite) {
      positive_found = true;
      // H = |c| I for the oscillator; Lambda = A / |c|
      const double c = f.h(0, 0);
      CHECK(c > 0.0);
      CHECK((f.h - c * RealMatrix::Identity(2, 2)).norm() < 1e-12);
      CHECK((f.lambda - a / c).norm() < 1e-12 * f.lambda.norm());
    }
  }
  CHECK(positive_found);
}

TEST_CASE("identity matrix has no skew factorization") {
  const auto set = enumerate_factorizations(RealMatrix::Identity(2, 2), 50, 1);
  CHECK(set.status == FactorStatus::EmptySkewBasis);
  CHECK(set.found.empty());
}

TEST_CASE("anisotropic oscillator: per-block sign freedom is exhausted") {
  const RealMatrix a = two_block_oscillator(1.0, std::sqrt(2.0));
  const auto skew = solve_invariant_forms(a, FormKind::Skew);
  REQUIRE(skew.dimension() == 2);
  const auto set = enumerate_factorizations(a, 100, 2024);
  REQUIRE(set.status == FactorStatus::Ok);

  std::set<std::pair<bool, bool>> sign_patterns;
  bool definite_found = false;
  for (const auto& f : set.found) {
    const double c0 = (skew.basis[0].array() * f.omega.array()).sum();
    const double c1 = (skew.basis[1].array() * f.omega.array()).sum();
    sign_patterns.insert({c0 > 0.0, c1 > 0.0});
    definite_found |= f.h_positive_definite;
  }
  CHECK(sign_patterns.size() == 4);  // 2^n patterns, n = 2 blocks
  CHECK(definite_found);
}

TEST_CASE("round trip: seeded A = Lambda H is recovered by the skew solver") {
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 2 + 2 * (trial % 4);
    const auto sys = test::seeded_factorable(900 + trial, n, false);
    const auto skew = solve_invariant_forms(sys.a, FormKind::Skew);
    REQUIRE(skew.dimension() >= 1);
    const RealMatrix omega = sys.lambda.inverse();
    CHECK(skew.projection_residual(omega) <= 1e-8);

    const auto set = enumerate_factorizations(sys.a, 100, 3000 + trial);
    REQUIRE(set.status == FactorStatus::Ok);
    for (const auto& f : set.found) CHECK(f.residual <= 1e-10);
  }
}

TEST_CASE("recursion fields of the rotation generator alternate sign") {
  const RealMatrix a = rotation_generator();
  const auto rep = recursion_fields(a, 2);
  REQUIRE(rep.fields.size() == 3);
  CHECK((rep.fields[0] - a).norm() < 1e-15);
  CHECK((rep.fields[1] + a).norm() < 1e-15);  // A^3 = -A
  CHECK((rep.fields[2] - a).norm() < 1e-14);  // A^5 = A
  CHECK(rep.max_commutator == 0.0);
  CHECK(rep.pass);
}

TEST_CASE("recursion fields stay invariant for factorizable systems") {
  for (int trial = 0; trial < 5; ++trial) {
    const auto sys = test::seeded_factorable(1300 + trial, 4, false);
    const auto rep = recursion_fields(sys.a, 3);
    CHECK(rep.max_commutator <= 1e-12);
    CHECK(rep.max_invariance <= 1e-8);
  }
}
