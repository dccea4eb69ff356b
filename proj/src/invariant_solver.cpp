#include "altham/invariant_solver.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include <cmath>

#include "altham/kernels.hpp"
#include "altham/random.hpp"

namespace altham::solver {

double InvariantFormBasis::projection_residual(const RealMatrix& b) const {
  if (b.norm() == 0.0) return 0.0;
  RealMatrix rem = b;
  for (const auto& e : basis) {
    const double coeff = (e.array() * rem.array()).sum();
    rem -= coeff * e;
  }
  return rem.norm() / b.norm();
}

InvariantFormBasis solve_invariant_forms(const RealMatrix& a, FormKind kind,
                                         const Config& cfg) {
  require_square(a, "solve_invariant_forms");
  const bool symmetric = (kind == FormKind::Symmetric);
  const Index n = a.rows();
  const Index d = kernels::constrained_space_dim(n, symmetric);

  InvariantFormBasis out;
  out.kind = kind;
  out.space_dim = d;
  out.svd_threshold_used = cfg.svd_kernel;
  if (d == 0) return out;

  const RealMatrix op = kernels::invariance_operator_omp(a, symmetric);

  Eigen::BDCSVD<RealMatrix> svd(op, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double cutoff = cfg.svd_kernel * (sigma.size() ? sigma(0) : 0.0);

  for (Index c = d - 1; c >= 0; --c) {
    if (sigma(c) > cutoff && sigma(0) > 0.0) break;
    RealMatrix b = RealMatrix::Zero(n, n);
    const RealVector coords = svd.matrixV().col(c);
    for (Index k = 0; k < d; ++k)
      b += coords(k) * kernels::constrained_basis_element(n, symmetric, k);
    // deterministic sign: first nonzero coordinate positive
    for (Index k = 0; k < d; ++k) {
      if (std::abs(coords(k)) > 1e-12) {
        if (coords(k) < 0) b = -b;
        break;
      }
    }
    const double res =
        relative((b * a + a.transpose() * b).norm(), b.norm() * a.norm());
    out.basis.push_back(std::move(b));
    out.residuals.push_back(res);
  }
  return out;
}

TraceReport check_trace_condition(const RealMatrix& a, int k_max,
                                  const Config& cfg) {
  require_square(a, "check_trace_condition");
  if (k_max < 0) throw InvalidInput("check_trace_condition: k_max must be >= 0");
  TraceReport rep;
  rep.tol_used = cfg.tol_trace;
  rep.pass = true;
  const double scale1 = a.norm();
  RealMatrix power = a;            // A^(2k+1)
  const RealMatrix a2 = a * a;
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) power = power * a2;
    const double tr = std::abs(power.trace());
    const double scale = std::pow(scale1, 2 * k + 1);
    rep.traces.push_back(tr);
    rep.scales.push_back(scale);
    if (tr > cfg.tol_trace * scale) rep.pass = false;
  }
  return rep;
}

FactorizationSet enumerate_factorizations(const RealMatrix& a, int attempts,
                                          std::uint64_t seed,
                                          const Config& cfg) {
  require_square(a, "enumerate_factorizations");
  const Index n = a.rows();
  FactorizationSet out;

  const InvariantFormBasis skew = solve_invariant_forms(a, FormKind::Skew, cfg);
  if (skew.dimension() == 0) {
    out.status = FactorStatus::EmptySkewBasis;
    return out;
  }

  const double a_norm = a.norm();
  for (int attempt = 0; attempt < attempts; ++attempt) {
    ++out.attempts_used;
    const std::uint64_t attempt_seed =
        rng::derive_seed(seed, static_cast<std::uint64_t>(attempt));
    std::mt19937_64 gen(attempt_seed);
    RealMatrix omega = RealMatrix::Zero(n, n);
    const RealVector coeffs = rng::vector(gen, skew.dimension());
    for (Index k = 0; k < skew.dimension(); ++k)
      omega += coeffs(k) * skew.basis[static_cast<std::size_t>(k)];

    Eigen::FullPivLU<RealMatrix> lu(omega);
    const double det = std::abs(lu.determinant());
    const double det_scale =
        std::pow(omega.norm() / std::sqrt(static_cast<double>(n)),
                 static_cast<double>(n));
    if (det <= cfg.det_floor * det_scale || !lu.isInvertible()) continue;

    Factorization f;
    f.omega = omega;
    f.h = omega * a;
    f.h = 0.5 * (f.h + f.h.transpose().eval());  // symmetric by invariance
    f.lambda = lu.inverse();
    f.residual = relative((a - f.lambda * f.h).norm(), a_norm);
    f.h_positive_definite = forms::is_positive_definite(f.h);
    f.attempt_seed = attempt_seed;
    if (f.residual <= cfg.tol_fact) out.found.push_back(std::move(f));
  }

  if (out.found.empty()) out.status = FactorStatus::NoInvertibleSkew;
  return out;
}

RecursionReport recursion_fields(const RealMatrix& a, int k_max,
                                 const Config& cfg) {
  require_square(a, "recursion_fields");
  if (k_max < 1) throw InvalidInput("recursion_fields: k_max must be >= 1");
  RecursionReport rep;
  const RealMatrix a2 = a * a;
  RealMatrix power = a;
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) power = power * a2;
    rep.fields.push_back(power);
  }
  for (std::size_t i = 0; i < rep.fields.size(); ++i)
    for (std::size_t j = i + 1; j < rep.fields.size(); ++j) {
      const RealMatrix& x = rep.fields[i];
      const RealMatrix& y = rep.fields[j];
      rep.max_commutator = std::max(
          rep.max_commutator,
          relative((x * y - y * x).norm(), x.norm() * y.norm()));
    }
  const InvariantFormBasis skew = solve_invariant_forms(a, FormKind::Skew, cfg);
  for (const auto& omega : skew.basis)
    for (const auto& field : rep.fields)
      rep.max_invariance = std::max(
          rep.max_invariance,
          relative((omega * field + field.transpose() * omega).norm(),
                   omega.norm() * field.norm()));
  rep.pass = rep.max_commutator <= cfg.tol_solve &&
             rep.max_invariance <= cfg.tol_solve;
  return rep;
}

}  // namespace altham::solver
