#pragma once

#include "altham/core.hpp"

namespace altham::forms {

enum class FormKind { Symmetric, Skew };

/// Real bilinear form tagged with its symmetry class. `definite` is only
/// meaningful for the symmetric kind and certifies a positive spectrum.
struct BilinearForm {
  RealMatrix matrix;
  FormKind kind = FormKind::Symmetric;
  bool definite = false;

  Index dim() const { return matrix.rows(); }

  /// Validates the kind residual (tol_sym, relative) and, for symmetric
  /// forms, probes definiteness. Throws InvalidInput on a kind violation.
  static BilinearForm symmetric(RealMatrix m, const Config& cfg = {});
  static BilinearForm skew(RealMatrix m, const Config& cfg = {});
};

double symmetry_residual(const RealMatrix& m);  // ||M - M^T|| / ||M||
double skewness_residual(const RealMatrix& m);  // ||M + M^T|| / ||M||
bool is_positive_definite(const RealMatrix& m);

/// Metric g, complex structure J and the skew form with matrix g*J.
struct AdmissibleTriple {
  BilinearForm g;
  RealMatrix j;
  BilinearForm omega;

  Index dim() const { return j.rows(); }
};

/// The g-adjoint g^{-1} A^T g. Requires g symmetric positive definite.
RealMatrix metric_adjoint(const RealMatrix& a, const BilinearForm& g);

struct TripleReport {
  bool accepted = false;
  bool structural_rejection = false;  // odd dimension: no complex structure
  double g_symmetry = 0.0;
  double omega_skewness = 0.0;
  double j_square = 0.0;        // ||J^2 + I|| / ||I||
  double omega_matrix = 0.0;    // ||omega - g J|| / ||g J||
  double g_orthogonality = 0.0; // ||J^T g J - g|| / ||g||
  double g_min_eigenvalue = 0.0;
  double tol_used = 0.0;
  std::string reason;
};

/// Certifies every AdmissibleTriple invariant with residual norms; accepts
/// iff all residuals are within tol_triple and g is positive definite.
TripleReport validate_triple(const RealMatrix& g, const RealMatrix& j,
                             const RealMatrix& omega, const Config& cfg = {});

/// Builds the triple after a passing validate_triple; throws otherwise.
AdmissibleTriple make_triple(const RealMatrix& g, const RealMatrix& j,
                             const Config& cfg = {});

/// h(x,y) = g(x,y) + i g(Jx,y); antilinear in the first argument.
Complex hermitian_eval(const AdmissibleTriple& t, const RealVector& x,
                       const RealVector& y);

}  // namespace altham::forms
