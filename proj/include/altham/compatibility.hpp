#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "altham/forms.hpp"

namespace altham::compat {

using forms::AdmissibleTriple;

/// Two admissible triples together with the Hamiltonian fields A_a of their
/// quadratic functions: A_a = Lambda_a g_a with Lambda_a = omega_a^{-1}.
struct CompatPair {
  AdmissibleTriple triple1;
  AdmissibleTriple triple2;
  RealMatrix a1;
  RealMatrix a2;

  static CompatPair make(AdmissibleTriple t1, AdmissibleTriple t2);
};

struct CompatibilityReport {
  bool compatible = false;
  // L_{Gamma_1} g_2, L_{Gamma_1} omega_2, L_{Gamma_2} g_1, L_{Gamma_2} omega_1
  std::array<double, 4> residuals{};
  double commutator = 0.0;  // ||[A1, A2]|| / (||A1|| ||A2||)
  double tol_used = 0.0;
};

CompatibilityReport check_compatibility(const CompatPair& pair,
                                        const Config& cfg = {});

enum class CompatStatus { Ok, IncompatibleInput, NonPositiveG, TMismatch };

struct ConnectingOperators {
  CompatStatus status = CompatStatus::Ok;
  RealMatrix g;  // g1^{-1} g2
  RealMatrix t;  // omega1^{-1} omega2
  double max_commutator = 0.0;      // over pairs of {G, T, J1, J2}
  double max_self_adjoint = 0.0;    // G, T vs both metrics
  double max_skew_adjoint = 0.0;    // J1, J2 vs both metrics
  double max_orthogonality = 0.0;   // J1, J2 g-orthogonal for both
  double identity_residual = 0.0;   // ||G + J1 T J2|| / ||G||
  std::string message;
};

/// G = g1^{-1} g2 and T = omega1^{-1} omega2 with the commuting-family
/// certificates and G = -J1 T J2.
ConnectingOperators connecting_operators(const CompatPair& pair,
                                         const Config& cfg = {});

struct DecompositionBlock {
  RealMatrix basis;   // columns, g1-orthonormal
  double lambda = 0.0;
  int sign = +1;
  Index dim = 0;
  double g_scaling_residual = 0.0;      // || g2|_W - lambda g1|_W ||, relative
  double omega_scaling_residual = 0.0;  // || omega2|_W -+ lambda omega1|_W ||
  double j_match_residual = 0.0;        // || J2|_W -+ J1|_W ||, relative
};

struct DecompositionReport {
  CompatStatus status = CompatStatus::Ok;
  std::vector<DecompositionBlock> blocks;  // sorted: lambda asc, + before -
  double cross_orthogonality = 0.0;   // max cross-block g1/g2 inner product
  double reconstruction_residual = 0.0;  // (g2, omega2) reassembled from blocks
  double span_defect = 0.0;           // union-of-bases completeness
  std::string message;
};

/// Double orthogonal decomposition driven by the joint (G, T) spectrum:
/// per block g2 = lambda g1, omega2 = sign * lambda * omega1, J2 = sign * J1.
DecompositionReport decompose(const CompatPair& pair, const Config& cfg = {});

struct CanonicalForms {
  std::vector<double> lambda_plus;
  std::vector<double> lambda_minus;
  std::vector<Index> dims_plus;
  std::vector<Index> dims_minus;
  bool both_signs_present = false;
};

/// The data of the canonical quadratic forms h1, h2 relative to the J1
/// complexification; h2 fails to be (anti)linear exactly when both signs
/// occur.
CanonicalForms canonical_hermitian_forms(const DecompositionReport& report);

struct PoissonCheck {
  double max_value = 0.0;       // max over samples of the scaled bracket
  std::vector<double> values;   // one per sample point
  bool pass = false;
};

/// {g_1, g_2}_a (xi) = (g1 xi)^T Lambda_a (g2 xi) at seeded random points,
/// scaled by ||g1 xi|| ||g2 xi|| ||Lambda_a||.
PoissonCheck poisson_commutation_check(const CompatPair& pair, int samples,
                                       std::uint64_t seed = 1,
                                       const Config& cfg = {});

/// Test/acceptance helper: assembles a compatible pair from block data
/// (lambda, sign, even dim) conjugated by a random change of basis.
CompatPair seeded_pair(const std::vector<std::tuple<double, int, Index>>& blocks,
                       std::uint64_t seed, bool orthogonal_basis_change = false);

}  // namespace altham::compat
