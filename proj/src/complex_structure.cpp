#include "altham/complex_structure.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace altham::polar {

RealMatrix flow_matrix(const RealMatrix& a, double t) {
  return (t * a).exp();
}

PolarResult polar_complex_structure(const RealMatrix& a, const BilinearForm& h,
                                    const Config& cfg) {
  require_square(a, "polar_complex_structure");
  require_same_dim(a.rows(), h.dim(), "polar_complex_structure");
  const Index n = a.rows();

  PolarResult out;
  out.g = h;

  if (h.kind != forms::FormKind::Symmetric || !h.definite) {
    out.status = PolarStatus::NotSkewAdjoint;
    out.message = "metric H must be symmetric positive definite";
    return out;
  }

  Eigen::FullPivLU<RealMatrix> lu(a);
  const double det_scale = std::pow(
      a.norm() / std::sqrt(static_cast<double>(n)), static_cast<double>(n));
  if (std::abs(lu.determinant()) <= cfg.det_floor * det_scale) {
    out.status = PolarStatus::SingularA;
    out.message = "det A below the singularity floor; degenerate case";
    return out;
  }

  // H-invariance of A <=> A is skew-adjoint for the metric g = H.
  const RealMatrix adj = forms::metric_adjoint(a, h);
  if (relative((adj + a).norm(), a.norm()) > cfg.tol_triple) {
    out.status = PolarStatus::NotSkewAdjoint;
    out.message = "H A + A^T H != 0: H is not invariant under A";
    return out;
  }

  // Work in g-orthonormal coordinates: g = L L^T, X^ = L^T X L^{-T}. There
  // the adjoint is the plain transpose and -A^2 is symmetric positive.
  Eigen::LLT<RealMatrix> llt(h.matrix);
  const RealMatrix lt = RealMatrix(llt.matrixL()).transpose();
  const RealMatrix lt_inv =
      lt.triangularView<Eigen::Upper>().solve(RealMatrix::Identity(n, n));
  const RealMatrix a_hat = lt * a * lt_inv;

  const RealMatrix minus_a2 = -(a_hat * a_hat);
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(
      0.5 * (minus_a2 + minus_a2.transpose()));
  const RealVector evals = es.eigenvalues();
  const double floor = 1e-12 * evals.cwiseAbs().maxCoeff();
  if (evals.minCoeff() <= floor) {
    out.status = PolarStatus::SingularA;
    out.message = "-A^2 has a near-zero eigenvalue in the metric frame";
    return out;
  }

  const RealMatrix sqrt_hat = es.eigenvectors() *
                              evals.cwiseSqrt().asDiagonal() *
                              es.eigenvectors().transpose();
  const RealMatrix j_hat = a_hat * sqrt_hat.inverse();

  // Back to the original frame.
  const RealMatrix abs_a = lt_inv * sqrt_hat * lt;
  const RealMatrix j = lt_inv * j_hat * lt;

  out.abs_a = abs_a;
  out.j = j;
  const RealMatrix eye = RealMatrix::Identity(n, n);
  out.factor_residual = relative((a - j * abs_a).norm(), a.norm());
  out.j_square_residual = (j * j + eye).norm() / eye.norm();
  out.orthogonality_residual =
      relative((j.transpose() * h.matrix * j - h.matrix).norm(), h.matrix.norm());
  out.commutation_residual =
      relative((j * a - a * j).norm(), j.norm() * a.norm());
  out.liouville_gap = (abs_a - eye).norm() / eye.norm();
  return out;
}

HermitianAssembly assemble_invariant_hermitian(const RealMatrix& a,
                                               const solver::Factorization& f,
                                               const Config& cfg) {
  HermitianAssembly out;
  if (!f.h_positive_definite)
    throw InvalidInput(
        "assemble_invariant_hermitian: factorization Hamiltonian must be "
        "positive definite");
  const BilinearForm g = forms::BilinearForm::symmetric(f.h, cfg);
  PolarResult polar = polar_complex_structure(a, g, cfg);
  if (polar.status != PolarStatus::Ok) {
    out.status = polar.status;
    out.message = polar.message;
    return out;
  }
  out.liouville_gap = polar.liouville_gap;

  const RealMatrix omega = g.matrix * polar.j;
  out.triple.g = g;
  out.triple.j = polar.j;
  out.triple.omega =
      forms::BilinearForm::skew(0.5 * (omega - omega.transpose().eval()), cfg);

  out.g_invariance = relative((g.matrix * a + a.transpose() * g.matrix).norm(),
                              g.matrix.norm() * a.norm());
  out.omega_invariance = relative(
      (out.triple.omega.matrix * a + a.transpose() * out.triple.omega.matrix).norm(),
      out.triple.omega.matrix.norm() * a.norm());
  out.j_invariance = relative((polar.j * a - a * polar.j).norm(),
                              polar.j.norm() * a.norm());
  return out;
}

double quadratic_hamiltonian(const AdmissibleTriple& t, const RealVector& xi) {
  require_same_dim(xi.size(), t.dim(), "quadratic_hamiltonian");
  return 0.5 * xi.dot(t.g.matrix * xi);
}

}  // namespace altham::polar
