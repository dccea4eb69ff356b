#include <doctest.h>

#include "altham/forms.hpp"
#include "helpers.hpp"

using namespace altham;
using namespace altham::forms;

namespace {

RealMatrix rotation_generator() {
  RealMatrix a(2, 2);
  a << 0, 1, -1, 0;
  return a;
}

RealMatrix canonical_j() {
  RealMatrix j(2, 2);
  j << 0, -1, 1, 0;  // J e1 = e2
  return j;
}

}  // namespace

TEST_CASE("metric adjoint with the Euclidean metric is the transpose") {
  std::mt19937_64 gen(7);
  const RealMatrix a = rng::uniform_matrix(gen, 4);
  const auto g = BilinearForm::symmetric(RealMatrix::Identity(4, 4));
  CHECK((metric_adjoint(a, g) - a.transpose()).norm() < 1e-14);
}

TEST_CASE("metric adjoint against the hand-computed diag(1,4) case") {
  const RealMatrix a = rotation_generator();
  RealMatrix gm(2, 2);
  gm << 1, 0, 0, 4;
  const auto g = BilinearForm::symmetric(gm);
  RealMatrix expected(2, 2);
  expected << 0, -4, 0.25, 0;
  CHECK((metric_adjoint(a, g) - expected).norm() < 1e-14);
}

TEST_CASE("g-self-adjoint operators are fixed points of the adjoint") {
  std::mt19937_64 gen(11);
  const RealMatrix gm = rng::spd_matrix(gen, 4);
  const auto g = BilinearForm::symmetric(gm);
  const RealMatrix s = rng::symmetric_matrix(gen, 4);
  const RealMatrix a = gm.inverse() * s;  // g A symmetric <=> A g-self-adjoint
  CHECK((metric_adjoint(a, g) - a).norm() < 1e-10 * a.norm());
}

TEST_CASE("metric adjoint is an involution") {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 2 + static_cast<Index>(trial % 5);
    const RealMatrix gm = rng::spd_matrix(gen, n);
    const auto g = BilinearForm::symmetric(gm);
    const RealMatrix a = rng::uniform_matrix(gen, n);
    CHECK((metric_adjoint(metric_adjoint(a, g), g) - a).norm() <=
          1e-12 * std::max(1.0, a.norm()));
  }
}

TEST_CASE("metric adjoint rejects bad inputs") {
  const auto g = BilinearForm::symmetric(RealMatrix::Identity(2, 2));
  CHECK_THROWS_AS(metric_adjoint(RealMatrix::Identity(3, 3), g),
                  DimensionMismatch);
  RealMatrix indefinite(2, 2);
  indefinite << 1, 0, 0, -1;
  BilinearForm bad;
  bad.matrix = indefinite;
  bad.kind = FormKind::Symmetric;
  CHECK_THROWS_AS(metric_adjoint(RealMatrix::Identity(2, 2), bad), InvalidInput);
}

TEST_CASE("form factories enforce their kind tags") {
  CHECK_THROWS_AS(BilinearForm::symmetric(rotation_generator()), InvalidInput);
  CHECK_THROWS_AS(BilinearForm::skew(RealMatrix::Identity(2, 2)), InvalidInput);
  const auto g = BilinearForm::symmetric(RealMatrix::Identity(2, 2));
  CHECK(g.definite);
  RealMatrix ind(2, 2);
  ind << 1, 0, 0, -1;
  CHECK_FALSE(BilinearForm::symmetric(ind).definite);
}

TEST_CASE("validate_triple accepts the canonical triple") {
  const RealMatrix g = RealMatrix::Identity(2, 2);
  const RealMatrix j = canonical_j();
  const auto rep = validate_triple(g, j, g * j);
  CHECK(rep.accepted);
  CHECK(rep.j_square == doctest::Approx(0.0));
  CHECK(rep.omega_matrix == doctest::Approx(0.0));
}

TEST_CASE("validate_triple rejects J = I") {
  const RealMatrix eye = RealMatrix::Identity(2, 2);
  const auto rep = validate_triple(eye, eye, eye);
  CHECK_FALSE(rep.accepted);
  CHECK(rep.j_square > 1e-2);
  CHECK(rep.omega_skewness > 1e-2);
}

TEST_CASE("validate_triple under uniform scaling") {
  const double lambda = 3.5;
  const RealMatrix g = lambda * RealMatrix::Identity(2, 2);
  const RealMatrix j = canonical_j();
  const auto rep = validate_triple(g, j, lambda * (RealMatrix::Identity(2, 2) * j));
  CHECK(rep.accepted);
}

TEST_CASE("validate_triple flags odd dimension as structural") {
  const RealMatrix eye = RealMatrix::Identity(3, 3);
  const auto rep = validate_triple(eye, eye, eye);
  CHECK(rep.structural_rejection);
  CHECK_FALSE(rep.accepted);
}

TEST_CASE("hermitian_eval frozen values on the canonical triple") {
  const auto triple =
      make_triple(RealMatrix::Identity(2, 2), canonical_j());
  RealVector e1(2), e2(2);
  e1 << 1, 0;
  e2 << 0, 1;
  const Complex h11 = hermitian_eval(triple, e1, e1);
  CHECK(h11.real() == doctest::Approx(1.0));
  CHECK(h11.imag() == doctest::Approx(0.0));
  const Complex h12 = hermitian_eval(triple, e1, e2);
  CHECK(h12.real() == doctest::Approx(0.0));
  CHECK(h12.imag() == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eval sesquilinearity identities on random data") {
  std::mt19937_64 gen(17);
  // a non-trivial triple: congruence transport of the canonical one
  const Index n = 6;
  RealMatrix j0 = RealMatrix::Zero(n, n);
  for (Index k = 0; k < n / 2; ++k) {
    j0(2 * k, 2 * k + 1) = -1.0;
    j0(2 * k + 1, 2 * k) = 1.0;
  }
  const RealMatrix s = rng::invertible_matrix(gen, n);
  const RealMatrix g = s.transpose() * s;
  const RealMatrix j = s.inverse() * j0 * s;
  const auto triple = make_triple(g, j);

  for (int trial = 0; trial < 100; ++trial) {
    const RealVector x = rng::vector(gen, n);
    const RealVector y = rng::vector(gen, n);
    const Complex hxy = hermitian_eval(triple, x, y);
    const Complex hyx = hermitian_eval(triple, y, x);
    CHECK(std::abs(hxy - std::conj(hyx)) < 1e-10 * std::abs(hxy));
    const Complex hx_jy = hermitian_eval(triple, x, triple.j * y);
    CHECK(std::abs(hx_jy - Complex(0, 1) * hxy) < 1e-10 * std::abs(hxy));
    const Complex hjx_y = hermitian_eval(triple, triple.j * x, y);
    CHECK(std::abs(hjx_y + Complex(0, 1) * hxy) < 1e-10 * std::abs(hxy));
    const Complex hxx = hermitian_eval(triple, x, x);
    CHECK(hxx.real() >= 0.0);
    CHECK(std::abs(hxx.imag()) < 1e-10 * hxx.real());
  }
}

TEST_CASE("forms honor their kind tags as bilinear maps") {
  std::mt19937_64 gen(23);
  const RealMatrix gm = rng::spd_matrix(gen, 4);
  const RealMatrix wm = rng::skew_matrix(gen, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const RealVector x = rng::vector(gen, 4);
    const RealVector y = rng::vector(gen, 4);
    CHECK(std::abs(x.dot(gm * y) - y.dot(gm * x)) <=
          1e-12 * gm.norm() * x.norm() * y.norm());
    CHECK(std::abs(x.dot(wm * y) + y.dot(wm * x)) <=
          1e-12 * wm.norm() * x.norm() * y.norm());
  }
}
