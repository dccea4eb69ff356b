#pragma once

#include <functional>
#include <vector>

#include "altham/core.hpp"

// Data-parallel inner loops, each in an OpenMP flavor and a serial reference
// flavor. The OpenMP kernels chunk work along fixed boundaries that do not
// depend on the thread count, and partial results are merged in chunk order,
// so their output is bit-identical across OMP_NUM_THREADS settings. The
// serial references are the plain loops; tests compare the two flavors and
// bench/ times them.

namespace altham::kernels {

/// Symmetric congruence power sum  sum_{k=-N}^{N} (T^k)^H H0 T^k.
/// Requires T invertible. The divisor (2N+1) is NOT applied.
ComplexMatrix congruence_power_sum_serial(const ComplexMatrix& t,
                                          const ComplexMatrix& h0, long n_max);
ComplexMatrix congruence_power_sum_omp(const ComplexMatrix& t,
                                       const ComplexMatrix& h0, long n_max);

/// Matrix of the map B -> B A + A^T B restricted to the symmetric or skew
/// subspace, in the Frobenius-orthonormal basis of that subspace (column c =
/// coordinates of the image of basis element c). d = n(n+1)/2 or n(n-1)/2.
RealMatrix invariance_operator_serial(const RealMatrix& a, bool symmetric);
RealMatrix invariance_operator_omp(const RealMatrix& a, bool symmetric);

/// Evaluates f on every point index in [0, count); results in index order.
std::vector<double> map_batch_serial(std::size_t count,
                                     const std::function<double(std::size_t)>& f);
std::vector<double> map_batch_omp(std::size_t count,
                                  const std::function<double(std::size_t)>& f);

/// Frobenius-orthonormal basis element c of the symmetric/skew n x n
/// matrices, in a fixed (row-major upper-triangle) enumeration.
RealMatrix constrained_basis_element(Index n, bool symmetric, Index c);
Index constrained_space_dim(Index n, bool symmetric);

/// Coordinates of a symmetric/skew matrix in the same basis.
RealVector constrained_coordinates(const RealMatrix& b, bool symmetric);

}  // namespace altham::kernels
