#include "altham/forms.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace altham::forms {

double symmetry_residual(const RealMatrix& m) {
  return relative((m - m.transpose()).norm(), m.norm());
}

double skewness_residual(const RealMatrix& m) {
  return relative((m + m.transpose()).norm(), m.norm());
}

bool is_positive_definite(const RealMatrix& m) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(0.5 * (m + m.transpose()),
                                               Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() > 0.0;
}

BilinearForm BilinearForm::symmetric(RealMatrix m, const Config& cfg) {
  require_square(m, "symmetric form");
  if (symmetry_residual(m) > cfg.tol_sym)
    throw InvalidInput("form tagged symmetric fails the symmetry residual");
  BilinearForm f;
  f.matrix = std::move(m);
  f.kind = FormKind::Symmetric;
  f.definite = is_positive_definite(f.matrix);
  return f;
}

BilinearForm BilinearForm::skew(RealMatrix m, const Config& cfg) {
  require_square(m, "skew form");
  if (skewness_residual(m) > cfg.tol_sym)
    throw InvalidInput("form tagged skew fails the skewness residual");
  BilinearForm f;
  f.matrix = std::move(m);
  f.kind = FormKind::Skew;
  f.definite = false;
  return f;
}

RealMatrix metric_adjoint(const RealMatrix& a, const BilinearForm& g) {
  require_square(a, "metric_adjoint");
  require_same_dim(a.rows(), g.dim(), "metric_adjoint");
  if (g.kind != FormKind::Symmetric)
    throw InvalidInput("metric_adjoint: g must be symmetric");
  Eigen::LLT<RealMatrix> llt(g.matrix);
  if (llt.info() != Eigen::Success)
    throw InvalidInput("metric_adjoint: g is not positive definite");
  return llt.solve(a.transpose() * g.matrix);
}

TripleReport validate_triple(const RealMatrix& g, const RealMatrix& j,
                             const RealMatrix& omega, const Config& cfg) {
  require_square(g, "validate_triple");
  require_same_dim(g.rows(), j.rows(), "validate_triple");
  require_same_dim(g.rows(), omega.rows(), "validate_triple");
  require_square(j, "validate_triple");
  require_square(omega, "validate_triple");

  const Index n = g.rows();
  TripleReport rep;
  rep.tol_used = cfg.tol_triple;

  if (n % 2 != 0) {
    rep.structural_rejection = true;
    rep.reason = "odd dimension admits no complex structure";
    return rep;
  }

  rep.g_symmetry = symmetry_residual(g);
  rep.omega_skewness = skewness_residual(omega);

  const RealMatrix eye = RealMatrix::Identity(n, n);
  rep.j_square = (j * j + eye).norm() / eye.norm();
  const RealMatrix gj = g * j;
  rep.omega_matrix = relative((omega - gj).norm(), gj.norm());
  rep.g_orthogonality = relative((j.transpose() * g * j - g).norm(), g.norm());

  Eigen::SelfAdjointEigenSolver<RealMatrix> es(0.5 * (g + g.transpose()),
                                               Eigen::EigenvaluesOnly);
  rep.g_min_eigenvalue = es.eigenvalues().minCoeff();

  const double tol = cfg.tol_triple;
  rep.accepted = rep.g_symmetry <= tol && rep.omega_skewness <= tol &&
                 rep.j_square <= tol && rep.omega_matrix <= tol &&
                 rep.g_orthogonality <= tol && rep.g_min_eigenvalue > 0.0;
  if (!rep.accepted && rep.reason.empty()) {
    if (rep.g_min_eigenvalue <= 0.0)
      rep.reason = "g is not positive definite";
    else if (rep.j_square > tol)
      rep.reason = "J^2 != -I";
    else if (rep.omega_matrix > tol)
      rep.reason = "omega does not match g J";
    else if (rep.g_orthogonality > tol)
      rep.reason = "J is not g-orthogonal";
    else
      rep.reason = "form kind residual too large";
  }
  return rep;
}

AdmissibleTriple make_triple(const RealMatrix& g, const RealMatrix& j,
                             const Config& cfg) {
  const RealMatrix omega = g * j;
  TripleReport rep = validate_triple(g, j, omega, cfg);
  if (!rep.accepted)
    throw InvalidInput("make_triple: " + rep.reason);
  AdmissibleTriple t;
  t.g = BilinearForm::symmetric(0.5 * (g + g.transpose()), cfg);
  t.j = j;
  t.omega = BilinearForm::skew(0.5 * (omega - omega.transpose()), cfg);
  return t;
}

Complex hermitian_eval(const AdmissibleTriple& t, const RealVector& x,
                       const RealVector& y) {
  require_same_dim(x.size(), t.dim(), "hermitian_eval");
  require_same_dim(y.size(), t.dim(), "hermitian_eval");
  const RealMatrix& g = t.g.matrix;
  const double re = x.dot(g * y);
  const double im = (t.j * x).dot(g * y);
  return {re, im};
}

}  // namespace altham::forms
