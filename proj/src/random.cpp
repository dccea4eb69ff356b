#include "altham/random.hpp"

#include <Eigen/QR>

namespace altham::rng {

namespace {
double unit(std::mt19937_64& gen) {
  return std::uniform_real_distribution<double>(-1.0, 1.0)(gen);
}
}  // namespace

RealMatrix uniform_matrix(std::mt19937_64& gen, Index n) {
  RealMatrix m(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) m(r, c) = unit(gen);
  return m;
}

RealMatrix symmetric_matrix(std::mt19937_64& gen, Index n) {
  RealMatrix m = uniform_matrix(gen, n);
  return 0.5 * (m + m.transpose());
}

RealMatrix skew_matrix(std::mt19937_64& gen, Index n) {
  RealMatrix m = uniform_matrix(gen, n);
  return 0.5 * (m - m.transpose());
}

RealMatrix spd_matrix(std::mt19937_64& gen, Index n) {
  RealMatrix m = uniform_matrix(gen, n);
  // M M^T shifted away from singularity
  return m * m.transpose() + 0.5 * RealMatrix::Identity(n, n);
}

RealMatrix orthogonal_matrix(std::mt19937_64& gen, Index n) {
  Eigen::HouseholderQR<RealMatrix> qr(uniform_matrix(gen, n));
  RealMatrix q = qr.householderQ();
  // fix signs so Q is a deterministic function of the draw
  RealMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index c = 0; c < n; ++c)
    if (r(c, c) < 0) q.col(c) *= -1.0;
  return q;
}

RealMatrix invertible_matrix(std::mt19937_64& gen, Index n) {
  for (;;) {
    RealMatrix m = uniform_matrix(gen, n);
    if (std::abs(Eigen::FullPivLU<RealMatrix>(m).determinant()) > 1e-3) return m;
  }
}

RealVector vector(std::mt19937_64& gen, Index n) {
  RealVector v(n);
  for (Index r = 0; r < n; ++r) v(r) = unit(gen);
  return v;
}

ComplexMatrix complex_matrix(std::mt19937_64& gen, Index n) {
  ComplexMatrix m(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) {
      double re = unit(gen);
      double im = unit(gen);
      m(r, c) = Complex(re, im);
    }
  return m;
}

ComplexMatrix unitary_matrix(std::mt19937_64& gen, Index n) {
  Eigen::HouseholderQR<ComplexMatrix> qr(complex_matrix(gen, n));
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index c = 0; c < n; ++c) {
    Complex d = r(c, c);
    if (std::abs(d) > 0) q.col(c) *= d / std::abs(d);
  }
  return q;
}

ComplexMatrix hermitian_pd_matrix(std::mt19937_64& gen, Index n) {
  ComplexMatrix m = complex_matrix(gen, n);
  return m * m.adjoint() + 0.5 * ComplexMatrix::Identity(n, n);
}

}  // namespace altham::rng
