#pragma once

#include <cstdint>
#include <random>

#include "altham/core.hpp"

namespace altham::rng {

/// Decorrelated per-stream seed (splitmix64 step on base ^ stream).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RealMatrix uniform_matrix(std::mt19937_64& gen, Index n);  // entries in [-1, 1]
RealMatrix symmetric_matrix(std::mt19937_64& gen, Index n);
RealMatrix skew_matrix(std::mt19937_64& gen, Index n);
RealMatrix spd_matrix(std::mt19937_64& gen, Index n);      // well-conditioned
RealMatrix orthogonal_matrix(std::mt19937_64& gen, Index n);
RealMatrix invertible_matrix(std::mt19937_64& gen, Index n);
RealVector vector(std::mt19937_64& gen, Index n);
ComplexMatrix complex_matrix(std::mt19937_64& gen, Index n);
ComplexMatrix unitary_matrix(std::mt19937_64& gen, Index n);
ComplexMatrix hermitian_pd_matrix(std::mt19937_64& gen, Index n);

}  // namespace altham::rng
