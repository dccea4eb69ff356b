#include "altham/kernels.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace altham::kernels {

namespace {

// Chunk length for the parallel reductions. Fixed so that chunk boundaries
// (and therefore the merge order and the floating-point result) do not
// depend on the thread count.
constexpr long kChunk = 128;

ComplexMatrix matrix_power(const ComplexMatrix& t, const ComplexMatrix& t_inv,
                           long k) {
  const Index n = t.rows();
  ComplexMatrix acc = ComplexMatrix::Identity(n, n);
  ComplexMatrix base = k >= 0 ? t : t_inv;
  unsigned long e = static_cast<unsigned long>(k >= 0 ? k : -k);
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    base = base * base;
    e >>= 1UL;
  }
  return acc;
}

}  // namespace

ComplexMatrix congruence_power_sum_serial(const ComplexMatrix& t,
                                          const ComplexMatrix& h0, long n_max) {
  require_square(t, "congruence_power_sum");
  require_same_dim(t.rows(), h0.rows(), "congruence_power_sum");
  const Index n = t.rows();
  Eigen::PartialPivLU<ComplexMatrix> lu(t);
  const ComplexMatrix t_inv = lu.inverse();

  ComplexMatrix sum = h0;  // k = 0
  ComplexMatrix fwd = ComplexMatrix::Identity(n, n);
  ComplexMatrix bwd = ComplexMatrix::Identity(n, n);
  for (long k = 1; k <= n_max; ++k) {
    fwd = fwd * t;
    bwd = bwd * t_inv;
    sum += fwd.adjoint() * h0 * fwd;
    sum += bwd.adjoint() * h0 * bwd;
  }
  return sum;
}

ComplexMatrix congruence_power_sum_omp(const ComplexMatrix& t,
                                       const ComplexMatrix& h0, long n_max) {
  require_square(t, "congruence_power_sum");
  require_same_dim(t.rows(), h0.rows(), "congruence_power_sum");
  const Index n = t.rows();
  Eigen::PartialPivLU<ComplexMatrix> lu(t);
  const ComplexMatrix t_inv = lu.inverse();

  // k = 1 .. n_max in fixed chunks; each chunk covers +k and -k together.
  const long chunks = (n_max + kChunk - 1) / kChunk;
  std::vector<ComplexMatrix> partial(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < chunks; ++c) {
    const long k_begin = 1 + c * kChunk;
    const long k_end = std::min(n_max, k_begin + kChunk - 1);
    ComplexMatrix fwd = matrix_power(t, t_inv, k_begin - 1);
    ComplexMatrix bwd = matrix_power(t, t_inv, -(k_begin - 1));
    ComplexMatrix local = ComplexMatrix::Zero(n, n);
    for (long k = k_begin; k <= k_end; ++k) {
      fwd = fwd * t;
      bwd = bwd * t_inv;
      local += fwd.adjoint() * h0 * fwd;
      local += bwd.adjoint() * h0 * bwd;
    }
    partial[static_cast<std::size_t>(c)] = std::move(local);
  }

  ComplexMatrix sum = h0;
  for (const auto& p : partial) sum += p;
  return sum;
}

Index constrained_space_dim(Index n, bool symmetric) {
  return symmetric ? n * (n + 1) / 2 : n * (n - 1) / 2;
}

RealMatrix constrained_basis_element(Index n, bool symmetric, Index c) {
  RealMatrix b = RealMatrix::Zero(n, n);
  const double off = 1.0 / std::sqrt(2.0);
  Index idx = 0;
  for (Index r = 0; r < n; ++r) {
    for (Index s = symmetric ? r : r + 1; s < n; ++s) {
      if (idx == c) {
        if (symmetric && r == s) {
          b(r, r) = 1.0;
        } else if (symmetric) {
          b(r, s) = off;
          b(s, r) = off;
        } else {
          b(r, s) = off;
          b(s, r) = -off;
        }
        return b;
      }
      ++idx;
    }
  }
  throw InvalidInput("basis element index out of range");
}

RealVector constrained_coordinates(const RealMatrix& b, bool symmetric) {
  const Index n = b.rows();
  RealVector v(constrained_space_dim(n, symmetric));
  const double off = std::sqrt(2.0);
  Index idx = 0;
  for (Index r = 0; r < n; ++r) {
    for (Index s = symmetric ? r : r + 1; s < n; ++s) {
      if (symmetric && r == s)
        v(idx) = b(r, r);
      else if (symmetric)
        v(idx) = 0.5 * (b(r, s) + b(s, r)) * off;
      else
        v(idx) = 0.5 * (b(r, s) - b(s, r)) * off;
      ++idx;
    }
  }
  return v;
}

namespace {

void fill_invariance_column(const RealMatrix& a, bool symmetric, Index c,
                            RealMatrix& m) {
  const RealMatrix b = constrained_basis_element(a.rows(), symmetric, c);
  const RealMatrix image = b * a + a.transpose() * b;
  m.col(c) = constrained_coordinates(image, symmetric);
}

}  // namespace

RealMatrix invariance_operator_serial(const RealMatrix& a, bool symmetric) {
  require_square(a, "invariance_operator");
  const Index d = constrained_space_dim(a.rows(), symmetric);
  RealMatrix m(d, d);
  for (Index c = 0; c < d; ++c) fill_invariance_column(a, symmetric, c, m);
  return m;
}

RealMatrix invariance_operator_omp(const RealMatrix& a, bool symmetric) {
  require_square(a, "invariance_operator");
  const Index d = constrained_space_dim(a.rows(), symmetric);
  RealMatrix m(d, d);
#pragma omp parallel for schedule(static)
  for (Index c = 0; c < d; ++c) fill_invariance_column(a, symmetric, c, m);
  return m;
}

std::vector<double> map_batch_serial(std::size_t count,
                                     const std::function<double(std::size_t)>& f) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
  return out;
}

std::vector<double> map_batch_omp(std::size_t count,
                                  const std::function<double(std::size_t)>& f) {
  std::vector<double> out(count);
  const long long c = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < c; ++i)
    out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  return out;
}

}  // namespace altham::kernels
