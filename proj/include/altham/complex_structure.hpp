#pragma once

#include "altham/forms.hpp"
#include "altham/invariant_solver.hpp"

namespace altham::polar {

using forms::AdmissibleTriple;
using forms::BilinearForm;

enum class PolarStatus { Ok, SingularA, NotSkewAdjoint };

struct PolarResult {
  PolarStatus status = PolarStatus::Ok;
  RealMatrix j;
  RealMatrix abs_a;            // g-symmetric positive definite
  BilinearForm g;              // the metric used
  double factor_residual = 0.0;       // ||A - J|A||| / ||A||
  double j_square_residual = 0.0;     // ||J^2 + I|| / ||I||
  double orthogonality_residual = 0.0;// ||J^T g J - g|| / ||g||
  double commutation_residual = 0.0;  // ||[J, A]|| / (||J|| ||A||)
  double liouville_gap = 0.0;         // || |A| - I || / ||I||: J(A)=-Delta iff 0
  std::string message;
};

/// Polar decomposition A = J |A| in the metric g = H. Requires H positive
/// definite and invariant (A skew-adjoint for H); |A| = sqrt(-A^2) computed
/// in g-orthonormal coordinates with an eigenvalue floor.
PolarResult polar_complex_structure(const RealMatrix& a, const BilinearForm& h,
                                    const Config& cfg = {});

struct HermitianAssembly {
  PolarStatus status = PolarStatus::Ok;
  AdmissibleTriple triple;
  // Lie-derivative residuals along A of g, omega and J, each relative.
  double g_invariance = 0.0;
  double omega_invariance = 0.0;
  double j_invariance = 0.0;
  double liouville_gap = 0.0;
  std::string message;
};

/// Triple (g = H, J from polar, omega = g J), certified invariant under A.
HermitianAssembly assemble_invariant_hermitian(const RealMatrix& a,
                                               const solver::Factorization& f,
                                               const Config& cfg = {});

/// 1/2 xi^T g xi = 1/2 Re h(xi, xi).
double quadratic_hamiltonian(const AdmissibleTriple& t, const RealVector& xi);

/// Scaling-and-squaring matrix exponential (flow transport for the
/// invariance checks).
RealMatrix flow_matrix(const RealMatrix& a, double t);

}  // namespace altham::polar
