#include <doctest.h>

#include <cmath>

#include "altham/biunitary.hpp"
#include "altham/compatibility.hpp"
#include "helpers.hpp"

using namespace altham;
using namespace altham::biu;

TEST_CASE("equal structures give the full unitary group") {
  const ComplexMatrix eye = ComplexMatrix::Identity(3, 3);
  const auto s = biunitary_group(eye, eye);
  REQUIRE(s.status == BiUnitaryStatus::Ok);
  REQUIRE(s.blocks.size() == 1);
  CHECK(s.blocks[0].multiplicity == 3);
  CHECK(s.group_dimension == 9);
  CHECK_FALSE(s.cyclic);
}

TEST_CASE("distinct eigenvalues give the torus of phases") {
  const ComplexMatrix h1 = ComplexMatrix::Identity(3, 3);
  ComplexMatrix h2 = ComplexMatrix::Zero(3, 3);
  h2.diagonal() << Complex(1, 0), Complex(2, 0), Complex(3, 0);
  const auto s = biunitary_group(h1, h2);
  REQUIRE(s.status == BiUnitaryStatus::Ok);
  CHECK(s.blocks.size() == 3);
  CHECK(s.group_dimension == 3);
  CHECK(s.cyclic);
}

TEST_CASE("mixed multiplicities: diag(2,2,5)") {
  const ComplexMatrix h1 = ComplexMatrix::Identity(3, 3);
  ComplexMatrix h2 = ComplexMatrix::Zero(3, 3);
  h2.diagonal() << Complex(2, 0), Complex(2, 0), Complex(5, 0);
  const auto s = biunitary_group(h1, h2);
  REQUIRE(s.status == BiUnitaryStatus::Ok);
  REQUIRE(s.blocks.size() == 2);
  CHECK(s.blocks[0].multiplicity == 2);
  CHECK(s.blocks[1].multiplicity == 1);
  CHECK(s.group_dimension == 5);
  CHECK_FALSE(s.cyclic);
}

TEST_CASE("group dimension equals the brute-force kernel dimension") {
  std::mt19937_64 gen(888);
  for (Index n = 2; n <= 6; ++n) {
    // generic pair
    const ComplexMatrix h1 = rng::hermitian_pd_matrix(gen, n);
    const ComplexMatrix h2 = rng::hermitian_pd_matrix(gen, n);
    const auto s = biunitary_group(h1, h2);
    REQUIRE(s.status == BiUnitaryStatus::Ok);
    CHECK(s.group_dimension == test::biunitary_dimension_oracle(h1, h2));

    // degenerate pair: h2 = h1 scaled blockwise through a congruence
    ComplexMatrix d = ComplexMatrix::Identity(n, n);
    for (Index k = n / 2; k < n; ++k) d(k, k) = Complex(3, 0);
    const ComplexMatrix c = rng::complex_matrix(gen, n) +
                            3.0 * ComplexMatrix::Identity(n, n);
    const ComplexMatrix h1d = c.adjoint() * c;
    const ComplexMatrix h2d = c.adjoint() * d * c;
    const auto sd = biunitary_group(h1d, h2d);
    REQUIRE(sd.status == BiUnitaryStatus::Ok);
    CHECK(sd.group_dimension == test::biunitary_dimension_oracle(h1d, h2d));
  }
}

TEST_CASE("is_biunitary accepts e^{i theta(G)} and group samples") {
  std::mt19937_64 gen(999);
  const ComplexMatrix h1 = rng::hermitian_pd_matrix(gen, 4);
  ComplexMatrix d = ComplexMatrix::Identity(4, 4);
  d(2, 2) = d(3, 3) = Complex(2.5, 0);
  const ComplexMatrix c = rng::complex_matrix(gen, 4) +
                          3.0 * ComplexMatrix::Identity(4, 4);
  const ComplexMatrix h1x = c.adjoint() * c;
  const ComplexMatrix h2x = c.adjoint() * d * c;
  const auto s = biunitary_group(h1x, h2x);
  REQUIRE(s.status == BiUnitaryStatus::Ok);

  const ComplexMatrix u_theta =
      phase_function_unitary(s, [](double lam) { return lam * lam; });
  const auto check_theta = is_biunitary(u_theta, h1x, h2x);
  CHECK(check_theta.biunitary);
  CHECK(check_theta.residual_h1 <= 1e-10);
  CHECK(check_theta.residual_h2 <= 1e-10);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const ComplexMatrix u = sample_group_element(s, seed);
    CHECK(is_biunitary(u, h1x, h2x).biunitary);
  }

  CHECK(is_biunitary(ComplexMatrix::Identity(4, 4), h1x, h2x).biunitary);
}

TEST_CASE("an h1-unitary that ignores h2 is rejected") {
  std::mt19937_64 gen(1001);
  const ComplexMatrix h1 = ComplexMatrix::Identity(3, 3);
  ComplexMatrix h2 = ComplexMatrix::Zero(3, 3);
  h2.diagonal() << Complex(1, 0), Complex(2, 0), Complex(3, 0);
  const ComplexMatrix u = rng::unitary_matrix(gen, 3);
  const auto check = is_biunitary(u, h1, h2);
  CHECK(check.residual_h1 <= 1e-10);
  CHECK_FALSE(check.biunitary);
  CHECK(check.residual_h2 > 1e-3);
}

TEST_CASE("non-positive h2 is flagged") {
  const ComplexMatrix h1 = ComplexMatrix::Identity(2, 2);
  ComplexMatrix h2 = ComplexMatrix::Identity(2, 2);
  h2(1, 1) = Complex(-1, 0);
  CHECK(biunitary_group(h1, h2).status == BiUnitaryStatus::NotPositive);
}

TEST_CASE("box example: full interval pairs eigenvalues, half does not") {
  const auto full = box_example(4, 1.0, BoxInterval::Full);
  REQUIRE(full.eigenvalues.size() == 2);
  CHECK(full.eigenvalues[0] == doctest::Approx(1.0625));
  CHECK(full.eigenvalues[1] == doctest::Approx(1.5625));
  CHECK(full.multiplicities[0] == 2);
  CHECK(full.multiplicities[1] == 2);
  CHECK(full.group_dimension == 8);
  CHECK_FALSE(full.cyclic);

  const auto half = box_example(2, 1.0, BoxInterval::Half);
  REQUIRE(half.eigenvalues.size() == 2);
  CHECK(half.multiplicities[0] == 1);
  CHECK(half.multiplicities[1] == 1);
  CHECK(half.group_dimension == 2);
  CHECK(half.cyclic);

  // the half grid is the positive half of the full grid
  CHECK(full.group_dimension == 4 * half.group_dimension);
  CHECK(half.eigenvalues == full.eigenvalues);
}

TEST_CASE("box example: sqrt(lambda - 1) spacing is the uniform grid step") {
  const auto full = box_example(8, 2.0, BoxInterval::Full);
  CHECK(full.sqrt_spacing == doctest::Approx(0.5));  // 2 alpha / n_grid
  const auto half = box_example(5, 1.0, BoxInterval::Half);
  CHECK(half.sqrt_spacing == doctest::Approx(0.2));
}

TEST_CASE("half-interval boxes are cyclic for any grid") {
  for (Index n : {2, 3, 7, 16})
    CHECK(box_example(n, 1.3, BoxInterval::Half).cyclic);
}

TEST_CASE("common-J triples complexify onto one space and match decompose") {
  // two triples sharing J: canonical and a blockwise-scaled one
  const Index n = 4;
  RealMatrix j = RealMatrix::Zero(n, n);
  for (Index k = 0; k < n / 2; ++k) {
    j(2 * k, 2 * k + 1) = -1.0;
    j(2 * k + 1, 2 * k) = 1.0;
  }
  const auto t1 = forms::make_triple(RealMatrix::Identity(n, n), j);
  RealMatrix g2 = RealMatrix::Identity(n, n);
  g2(2, 2) = g2(3, 3) = 4.0;
  const auto t2 = forms::make_triple(g2, j);

  const RealMatrix basis = adapted_basis(t1);
  const ComplexMatrix h1 = complexify_metric(t1, basis);
  const ComplexMatrix h2 = complexify_metric(t2, basis);
  CHECK((h1 - ComplexMatrix::Identity(n / 2, n / 2)).norm() < 1e-12);

  const auto s = biunitary_group(h1, h2);
  REQUIRE(s.status == BiUnitaryStatus::Ok);
  REQUIRE(s.blocks.size() == 2);
  CHECK(s.blocks[0].lambda == doctest::Approx(1.0));
  CHECK(s.blocks[1].lambda == doctest::Approx(4.0));

  // §8 note: shared J makes the pair compatible; the real decomposition
  // sees the same eigenvalues with all-plus signs
  const auto pair = compat::CompatPair::make(t1, t2);
  CHECK(compat::check_compatibility(pair).compatible);
  const auto rep = compat::decompose(pair);
  REQUIRE(rep.blocks.size() == 2);
  CHECK(rep.blocks[0].lambda == doctest::Approx(1.0));
  CHECK(rep.blocks[1].lambda == doctest::Approx(4.0));
  CHECK(rep.blocks[0].sign == 1);
  CHECK(rep.blocks[1].sign == 1);
}
