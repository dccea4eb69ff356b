#include "altham/nagy.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>

#include "altham/kernels.hpp"

namespace altham::nagy {

namespace {

struct MetricFrame {
  ComplexMatrix lh;      // h0 = L L^H, lh = L^H
  ComplexMatrix lh_inv;
};

MetricFrame metric_frame(const ComplexMatrix& h0) {
  Eigen::LLT<ComplexMatrix> llt(h0);
  if (llt.info() != Eigen::Success)
    throw InvalidInput("fiducial metric h0 must be Hermitian positive definite");
  MetricFrame f;
  f.lh = ComplexMatrix(llt.matrixL()).adjoint();
  f.lh_inv = f.lh.triangularView<Eigen::Upper>().solve(
      ComplexMatrix::Identity(h0.rows(), h0.rows()));
  return f;
}

// h0-operator norm: largest singular value in the h0-orthonormal frame.
double h0_norm(const ComplexMatrix& x, const MetricFrame& f) {
  return operator_norm(ComplexMatrix(f.lh * x * f.lh_inv));
}

// h0-self-adjoint square root of an h0-self-adjoint positive operator.
ComplexMatrix h0_sqrt(const ComplexMatrix& p, const MetricFrame& f) {
  const ComplexMatrix p_hat = f.lh * p * f.lh_inv;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (p_hat + p_hat.adjoint()));
  const ComplexMatrix s_hat = es.eigenvectors() *
                              es.eigenvalues().cwiseSqrt().asDiagonal() *
                              es.eigenvectors().adjoint();
  return f.lh_inv * s_hat * f.lh;
}

}  // namespace

PowerBoundReport power_bound(const ComplexMatrix& t, const ComplexMatrix& h0,
                             int k_range) {
  require_square(t, "power_bound");
  require_same_dim(t.rows(), h0.rows(), "power_bound");
  if (k_range < 1) throw InvalidInput("power_bound: k_range must be >= 1");

  PowerBoundReport rep;
  rep.k_range = k_range;

  Eigen::PartialPivLU<ComplexMatrix> lu(t);
  const double rcond =
      t.norm() > 0 ? 1.0 / (t.norm() * lu.inverse().norm()) : 0.0;
  if (!(rcond > 1e-14)) {
    rep.status = NagyStatus::SingularT;
    return rep;
  }
  const ComplexMatrix t_inv = lu.inverse();
  const MetricFrame frame = metric_frame(h0);

  const Index n = t.rows();
  rep.growth.assign(static_cast<std::size_t>(2 * k_range + 1), 0.0);
  ComplexMatrix fwd = ComplexMatrix::Identity(n, n);
  ComplexMatrix bwd = ComplexMatrix::Identity(n, n);
  rep.growth[static_cast<std::size_t>(k_range)] = 1.0;
  for (int k = 1; k <= k_range; ++k) {
    fwd = fwd * t;
    bwd = bwd * t_inv;
    rep.growth[static_cast<std::size_t>(k_range + k)] = h0_norm(fwd, frame);
    rep.growth[static_cast<std::size_t>(k_range - k)] = h0_norm(bwd, frame);
  }
  rep.c_estimate = *std::max_element(rep.growth.begin(), rep.growth.end());

  // Growth trend: compare the sup over the outer half of the scan with the
  // sup over the inner half; a power-bounded T plateaus, geometric growth
  // does not.
  double inner = 1.0, outer = 1.0;
  for (int k = 0; k <= k_range; ++k) {
    const double v = std::max(rep.growth[static_cast<std::size_t>(k_range + k)],
                              rep.growth[static_cast<std::size_t>(k_range - k)]);
    if (k <= k_range / 2)
      inner = std::max(inner, v);
    else
      outer = std::max(outer, v);
  }
  rep.trend_ratio = outer / inner;
  rep.divergent = rep.trend_ratio > 1.01;
  if (rep.divergent) rep.status = NagyStatus::NotPowerBounded;
  return rep;
}

InvariantMetricResult invariant_metric_cesaro(const ComplexMatrix& t,
                                              const ComplexMatrix& h0, long n,
                                              const Config& cfg,
                                              int scan_range) {
  require_square(t, "invariant_metric_cesaro");
  require_same_dim(t.rows(), h0.rows(), "invariant_metric_cesaro");
  if (n < 1) throw InvalidInput("invariant_metric_cesaro: N must be >= 1");

  InvariantMetricResult out;
  out.method = MetricMethod::Cesaro;

  const PowerBoundReport bound = power_bound(t, h0, scan_range);
  if (bound.status != NagyStatus::Ok) {
    out.status = bound.status;
    out.message = bound.status == NagyStatus::SingularT
                      ? "T is numerically singular"
                      : "growth scan flags T as not power-bounded";
    return out;
  }

  const ComplexMatrix sum = kernels::congruence_power_sum_omp(t, h0, n);
  out.metric = sum / static_cast<double>(2 * n + 1);
  out.cesaro_terms = 2 * n + 1;

  out.invariance_defect = relative(
      (t.adjoint() * out.metric * t - out.metric).norm(), out.metric.norm());

  const MetricFrame frame = metric_frame(h0);
  out.p = h0.partialPivLu().solve(out.metric);
  const ComplexMatrix p_hat = frame.lh * out.p * frame.lh_inv;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (p_hat + p_hat.adjoint()),
                                                  Eigen::EigenvaluesOnly);
  out.min_p_eigenvalue = es.eigenvalues().minCoeff();
  out.q = h0_sqrt(out.p, frame);
  return out;
}

InvariantMetricResult invariant_metric_spectral(const ComplexMatrix& t,
                                                const ComplexMatrix& h0,
                                                const Config& cfg) {
  require_square(t, "invariant_metric_spectral");
  require_same_dim(t.rows(), h0.rows(), "invariant_metric_spectral");
  const Index n = t.rows();

  InvariantMetricResult out;
  out.method = MetricMethod::Spectral;

  Eigen::ComplexEigenSolver<ComplexMatrix> es(t);
  if (es.info() != Eigen::Success) {
    out.status = NagyStatus::NotSemisimple;
    out.message = "eigendecomposition failed";
    return out;
  }
  for (Index i = 0; i < n; ++i) {
    if (std::abs(std::abs(es.eigenvalues()(i)) - 1.0) > cfg.tol_unimodular) {
      out.status = NagyStatus::NotUnimodular;
      out.message = "an eigenvalue leaves the unit circle; T is not "
                    "two-sidedly power-bounded";
      return out;
    }
  }
  const ComplexMatrix s = es.eigenvectors();
  Eigen::JacobiSVD<ComplexMatrix> svd(s);
  const double cond_floor = 1e-12;
  if (svd.singularValues()(n - 1) <=
      cond_floor * svd.singularValues()(0)) {
    out.status = NagyStatus::NotSemisimple;
    out.message = "eigenvector matrix is numerically singular (defective T "
                  "is not power-bounded)";
    return out;
  }

  const ComplexMatrix s_inv = s.partialPivLu().solve(
      ComplexMatrix::Identity(n, n));
  ComplexMatrix metric = s_inv.adjoint() * s_inv;
  metric = 0.5 * (metric + metric.adjoint().eval());

  // Normalize so det P = 1 (P = h0^{-1} metric is similar to a positive
  // matrix, so its determinant is real positive).
  const Complex det_h0 = h0.partialPivLu().determinant();
  const Complex det_m = metric.partialPivLu().determinant();
  const double det_p = (det_m / det_h0).real();
  metric /= std::pow(det_p, 1.0 / static_cast<double>(n));

  out.metric = metric;
  out.invariance_defect =
      relative((t.adjoint() * metric * t - metric).norm(), metric.norm());

  const MetricFrame frame = metric_frame(h0);
  out.p = h0.partialPivLu().solve(metric);
  const ComplexMatrix p_hat = frame.lh * out.p * frame.lh_inv;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> ses(0.5 * (p_hat + p_hat.adjoint()),
                                                   Eigen::EigenvaluesOnly);
  out.min_p_eigenvalue = ses.eigenvalues().minCoeff();
  out.q = h0_sqrt(out.p, frame);
  return out;
}

SimilarityResult similarity_to_unitary(const InvariantMetricResult& m,
                                       const ComplexMatrix& t,
                                       const ComplexMatrix& h0) {
  SimilarityResult out;
  if (m.status != NagyStatus::Ok) {
    out.status = m.status;
    out.message = "invariant metric construction failed upstream";
    return out;
  }
  out.q = m.q;
  out.u = m.q * t * m.q.partialPivLu().solve(
      ComplexMatrix::Identity(t.rows(), t.rows()));
  out.unitarity_residual = relative(
      (out.u.adjoint() * h0 * out.u - h0).norm(), h0.norm());

  const MetricFrame frame = metric_frame(h0);
  const ComplexMatrix q_hat = frame.lh * m.q * frame.lh_inv;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (q_hat + q_hat.adjoint()),
                                                  Eigen::EigenvaluesOnly);
  out.q_spectrum_min = es.eigenvalues().minCoeff();
  out.q_spectrum_max = es.eigenvalues().maxCoeff();
  return out;
}

}  // namespace altham::nagy
