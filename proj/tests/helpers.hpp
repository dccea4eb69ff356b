#pragma once

#include <Eigen/SVD>

#include <cstdint>
#include <random>
#include <vector>

#include "altham/core.hpp"
#include "altham/random.hpp"

namespace altham::test {

/// Seeded factorizable system A = Lambda H with Lambda invertible skew and
/// H symmetric (optionally positive definite).
struct FactorableSystem {
  RealMatrix a;
  RealMatrix lambda;
  RealMatrix h;
};

inline FactorableSystem seeded_factorable(std::uint64_t seed, Index n,
                                          bool h_positive) {
  if (n % 2 != 0) throw InvalidInput("seeded_factorable: even dim required");
  std::mt19937_64 gen(seed);
  FactorableSystem sys;
  for (;;) {
    sys.lambda = rng::skew_matrix(gen, n);
    if (std::abs(Eigen::FullPivLU<RealMatrix>(sys.lambda).determinant()) > 1e-4)
      break;
  }
  sys.h = h_positive ? rng::spd_matrix(gen, n) : rng::symmetric_matrix(gen, n);
  sys.a = sys.lambda * sys.h;
  return sys;
}

/// Independent oracle for the bi-unitary group dimension: real nullity of
/// the linearized equations X^H h + h X = 0 for h in {h1, h2}.
inline Index biunitary_dimension_oracle(const ComplexMatrix& h1,
                                        const ComplexMatrix& h2) {
  const Index n = h1.rows();
  const Index unknowns = 2 * n * n;
  RealMatrix system(4 * n * n, unknowns);
  Index col = 0;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (int part = 0; part < 2; ++part) {
        ComplexMatrix x = ComplexMatrix::Zero(n, n);
        x(a, b) = part == 0 ? Complex(1, 0) : Complex(0, 1);
        const ComplexMatrix m1 = x.adjoint() * h1 + h1 * x;
        const ComplexMatrix m2 = x.adjoint() * h2 + h2 * x;
        Index row = 0;
        for (Index r = 0; r < n; ++r)
          for (Index c = 0; c < n; ++c) {
            system(row++, col) = m1(r, c).real();
            system(row++, col) = m1(r, c).imag();
          }
        for (Index r = 0; r < n; ++r)
          for (Index c = 0; c < n; ++c) {
            system(row++, col) = m2(r, c).real();
            system(row++, col) = m2(r, c).imag();
          }
        ++col;
      }
  Eigen::BDCSVD<RealMatrix> svd(system);
  const auto& sigma = svd.singularValues();
  Index nullity = 0;
  for (Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) <= 1e-9 * sigma(0)) ++nullity;
  nullity += unknowns - sigma.size();
  return nullity;
}

/// Classical RK4 integrator for dx/dt = field(x); oracle for the closed-form
/// flows.
template <class Field>
RealVector rk4_integrate(const Field& field, RealVector x, double t_end,
                         double dt) {
  double t = 0.0;
  while (t < t_end - 1e-15) {
    const double step = std::min(dt, t_end - t);
    const RealVector k1 = field(x);
    const RealVector k2 = field(x + 0.5 * step * k1);
    const RealVector k3 = field(x + 0.5 * step * k2);
    const RealVector k4 = field(x + step * k3);
    x += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += step;
  }
  return x;
}

}  // namespace altham::test
