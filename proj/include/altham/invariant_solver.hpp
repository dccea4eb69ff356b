#pragma once

#include <cstdint>
#include <vector>

#include "altham/forms.hpp"

namespace altham::solver {

using forms::BilinearForm;
using forms::FormKind;

/// Orthonormal (Frobenius) basis of the kind-constrained solutions of
/// B A + A^T B = 0.
struct InvariantFormBasis {
  FormKind kind = FormKind::Symmetric;
  std::vector<RealMatrix> basis;
  Index space_dim = 0;                 // dimension of the ambient sym/skew space
  std::vector<double> residuals;       // invariance residual per element
  double svd_threshold_used = 0.0;

  Index dimension() const { return static_cast<Index>(basis.size()); }

  /// Norm of the component of b orthogonal to the span, over ||b||.
  double projection_residual(const RealMatrix& b) const;
};

InvariantFormBasis solve_invariant_forms(const RealMatrix& a, FormKind kind,
                                         const Config& cfg = {});

struct TraceReport {
  std::vector<double> traces;     // |Tr A^(2k+1)|, k = 0..k_max
  std::vector<double> scales;     // ||A||_F^(2k+1)
  bool pass = false;
  double tol_used = 0.0;
};

/// Necessary condition for A = Lambda H: Tr A^(2k+1) = 0 for all k.
TraceReport check_trace_condition(const RealMatrix& a, int k_max,
                                  const Config& cfg = {});

/// One Hamiltonian factorization A = Lambda H with Lambda = omega^{-1} and
/// H = omega A for an invertible invariant skew form omega.
struct Factorization {
  RealMatrix lambda;          // Poisson matrix, skew invertible
  RealMatrix h;               // symmetric
  RealMatrix omega;           // the sampled invariant skew form
  double residual = 0.0;      // ||A - Lambda H|| / ||A||
  bool h_positive_definite = false;
  std::uint64_t attempt_seed = 0;
};

enum class FactorStatus { Ok, NoInvertibleSkew, EmptySkewBasis };

struct FactorizationSet {
  FactorStatus status = FactorStatus::Ok;
  std::vector<Factorization> found;
  int attempts_used = 0;
};

/// Samples random coefficient vectors over the skew invariant basis
/// (deterministic per-attempt seeds derived from `seed`), keeps the
/// invertible draws. Every returned pair satisfies the tol_fact residual.
FactorizationSet enumerate_factorizations(const RealMatrix& a, int attempts,
                                          std::uint64_t seed = 1,
                                          const Config& cfg = {});

struct RecursionReport {
  std::vector<RealMatrix> fields;       // A^(2k+1), k = 0..k_max
  double max_commutator = 0.0;          // max ||[A^(2k+1), A^(2r+1)]||
  double max_invariance = 0.0;          // residual vs every skew basis form
  bool pass = false;
};

/// The commuting recursion fields A^(2k+1), certified against the skew
/// invariant basis of A.
RecursionReport recursion_fields(const RealMatrix& a, int k_max,
                                 const Config& cfg = {});

}  // namespace altham::solver
