#pragma once

#include <vector>

#include "altham/core.hpp"

namespace altham::nagy {

enum class NagyStatus {
  Ok,
  SingularT,
  NotPowerBounded,
  NotUnimodular,
  NotSemisimple,
  NotPositive,
};

struct PowerBoundReport {
  NagyStatus status = NagyStatus::Ok;
  double c_estimate = 1.0;            // max of the growth table
  int k_range = 0;
  std::vector<double> growth;         // ||T^k||_{h0}, k = -K..K (index k+K)
  bool divergent = false;             // growth-trend flag
  double trend_ratio = 1.0;           // outer-half max / inner-half max
};

/// h0-operator norms of the powers T^k for |k| <= K.
PowerBoundReport power_bound(const ComplexMatrix& t, const ComplexMatrix& h0,
                             int k_range);

enum class MetricMethod { Cesaro, Spectral };

struct InvariantMetricResult {
  NagyStatus status = NagyStatus::Ok;
  MetricMethod method = MetricMethod::Cesaro;
  ComplexMatrix metric;     // matrix of h_T
  ComplexMatrix p;          // operator with h_T(x,y) = h0(x, P y); P = h0^{-1} metric
  ComplexMatrix q;          // h0-self-adjoint square root of P
  double invariance_defect = 0.0;  // ||T^H M T - M|| / ||M||, M the metric
  double min_p_eigenvalue = 0.0;
  long cesaro_terms = 0;           // 2N+1 (Cesaro only)
  std::string message;
};

/// Symmetric Cesaro mean M_N = (2N+1)^{-1} sum_{|k|<=N} (T^k)^H H0 T^k; the
/// computable surrogate for the Banach-Mazur limit on the power-bounded
/// class. Defect decays as O(1/N).
InvariantMetricResult invariant_metric_cesaro(const ComplexMatrix& t,
                                              const ComplexMatrix& h0, long n,
                                              const Config& cfg = {},
                                              int scan_range = 200);

/// Exact construction from an eigenvector matrix S of T (all |eig| = 1
/// required): metric S^{-H} S^{-1}, normalized so det P = 1.
InvariantMetricResult invariant_metric_spectral(const ComplexMatrix& t,
                                                const ComplexMatrix& h0,
                                                const Config& cfg = {});

struct SimilarityResult {
  NagyStatus status = NagyStatus::Ok;
  ComplexMatrix q;          // P^{1/2} in the h0 geometry
  ComplexMatrix u;          // Q T Q^{-1}
  double unitarity_residual = 0.0;  // ||U^H H0 U - H0|| / ||H0||
  double q_spectrum_min = 0.0;
  double q_spectrum_max = 0.0;
  std::string message;
};

/// Q T Q^{-1} = U unitary w.r.t. h0; spec(Q) within [1/c, c] up to the
/// method's convergence defect.
SimilarityResult similarity_to_unitary(const InvariantMetricResult& m,
                                       const ComplexMatrix& t,
                                       const ComplexMatrix& h0);

}  // namespace altham::nagy
