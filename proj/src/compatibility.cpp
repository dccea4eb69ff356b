#include "altham/compatibility.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <tuple>

#include "altham/random.hpp"

namespace altham::compat {

CompatPair CompatPair::make(AdmissibleTriple t1, AdmissibleTriple t2) {
  require_same_dim(t1.dim(), t2.dim(), "CompatPair");
  CompatPair pair;
  pair.a1 = t1.omega.matrix.inverse() * t1.g.matrix;
  pair.a2 = t2.omega.matrix.inverse() * t2.g.matrix;
  pair.triple1 = std::move(t1);
  pair.triple2 = std::move(t2);
  return pair;
}

namespace {

double lie_residual(const RealMatrix& form, const RealMatrix& field) {
  return relative((form * field + field.transpose() * form).norm(),
                  form.norm() * field.norm());
}

}  // namespace

CompatibilityReport check_compatibility(const CompatPair& pair,
                                        const Config& cfg) {
  CompatibilityReport rep;
  rep.tol_used = cfg.tol_compat;
  rep.residuals[0] = lie_residual(pair.triple2.g.matrix, pair.a1);
  rep.residuals[1] = lie_residual(pair.triple2.omega.matrix, pair.a1);
  rep.residuals[2] = lie_residual(pair.triple1.g.matrix, pair.a2);
  rep.residuals[3] = lie_residual(pair.triple1.omega.matrix, pair.a2);
  rep.commutator =
      relative((pair.a1 * pair.a2 - pair.a2 * pair.a1).norm(),
               pair.a1.norm() * pair.a2.norm());
  rep.compatible = true;
  for (double r : rep.residuals)
    if (r > cfg.tol_compat) rep.compatible = false;
  return rep;
}

namespace {

double self_adjoint_residual(const RealMatrix& x, const RealMatrix& g) {
  return relative((g * x - x.transpose() * g).norm(), g.norm() * x.norm());
}

double skew_adjoint_residual(const RealMatrix& x, const RealMatrix& g) {
  return relative((g * x + x.transpose() * g).norm(), g.norm() * x.norm());
}

double commutator_residual(const RealMatrix& x, const RealMatrix& y) {
  return relative((x * y - y * x).norm(), x.norm() * y.norm());
}

double congruence_residual(const RealMatrix& x, const RealMatrix& g) {
  return relative((x.transpose() * g * x - g).norm(), g.norm());
}

}  // namespace

ConnectingOperators connecting_operators(const CompatPair& pair,
                                         const Config& cfg) {
  ConnectingOperators out;
  const CompatibilityReport compat = check_compatibility(pair, cfg);
  if (!compat.compatible) {
    out.status = CompatStatus::IncompatibleInput;
    out.message = "pair fails the compatibility residuals";
    return out;
  }

  const RealMatrix& g1 = pair.triple1.g.matrix;
  const RealMatrix& g2 = pair.triple2.g.matrix;
  const RealMatrix& w1 = pair.triple1.omega.matrix;
  const RealMatrix& w2 = pair.triple2.omega.matrix;
  const RealMatrix& j1 = pair.triple1.j;
  const RealMatrix& j2 = pair.triple2.j;

  out.g = g1.partialPivLu().solve(g2);
  out.t = w1.partialPivLu().solve(w2);

  const RealMatrix ops[4] = {out.g, out.t, j1, j2};
  for (int i = 0; i < 4; ++i)
    for (int k = i + 1; k < 4; ++k)
      out.max_commutator =
          std::max(out.max_commutator, commutator_residual(ops[i], ops[k]));
  for (const RealMatrix* m : {&g1, &g2}) {
    out.max_self_adjoint =
        std::max({out.max_self_adjoint, self_adjoint_residual(out.g, *m),
                  self_adjoint_residual(out.t, *m)});
    out.max_skew_adjoint =
        std::max({out.max_skew_adjoint, skew_adjoint_residual(j1, *m),
                  skew_adjoint_residual(j2, *m)});
    out.max_orthogonality = std::max(
        {out.max_orthogonality, congruence_residual(j1, *m),
         congruence_residual(j2, *m)});
  }
  out.identity_residual =
      relative((out.g + j1 * out.t * j2).norm(), out.g.norm());
  return out;
}

namespace {

struct Cluster {
  double value = 0.0;
  Index begin = 0;  // eigenvalue index range [begin, end)
  Index end = 0;
};

std::vector<Cluster> cluster_eigenvalues(const RealVector& sorted,
                                         double rel_gap) {
  std::vector<Cluster> clusters;
  const double scale = std::max(std::abs(sorted(0)),
                                std::abs(sorted(sorted.size() - 1)));
  Index begin = 0;
  for (Index i = 1; i <= sorted.size(); ++i) {
    if (i == sorted.size() || sorted(i) - sorted(i - 1) > rel_gap * scale) {
      Cluster c;
      c.begin = begin;
      c.end = i;
      c.value = sorted.segment(begin, i - begin).mean();
      clusters.push_back(c);
      begin = i;
    }
  }
  return clusters;
}

}  // namespace

DecompositionReport decompose(const CompatPair& pair, const Config& cfg) {
  DecompositionReport rep;
  const CompatibilityReport compat = check_compatibility(pair, cfg);
  if (!compat.compatible) {
    rep.status = CompatStatus::IncompatibleInput;
    rep.message = "pair fails the compatibility residuals";
    return rep;
  }

  const Index n = pair.triple1.dim();
  const RealMatrix& g1 = pair.triple1.g.matrix;
  const RealMatrix& g2 = pair.triple2.g.matrix;
  const RealMatrix& w1 = pair.triple1.omega.matrix;
  const RealMatrix& w2 = pair.triple2.omega.matrix;
  const RealMatrix& j1 = pair.triple1.j;
  const RealMatrix& j2 = pair.triple2.j;

  // Diagonalize G in the g1 geometry: with g1 = L L^T the operator
  // L^T G L^{-T} is plain symmetric, so eigenvectors pulled back through
  // L^{-T} are g1-orthonormal and "orthogonal for both metrics" becomes an
  // ordinary orthogonality statement.
  Eigen::LLT<RealMatrix> llt(g1);
  const RealMatrix lt = RealMatrix(llt.matrixL()).transpose();
  const RealMatrix lt_inv =
      lt.triangularView<Eigen::Upper>().solve(RealMatrix::Identity(n, n));

  const RealMatrix g_op = g1.partialPivLu().solve(g2);
  const RealMatrix t_op = w1.partialPivLu().solve(w2);
  const RealMatrix g_hat = lt * g_op * lt_inv;
  const RealMatrix t_hat = lt * t_op * lt_inv;

  Eigen::SelfAdjointEigenSolver<RealMatrix> es(0.5 * (g_hat + g_hat.transpose()));
  const RealVector evals = es.eigenvalues();
  if (evals.minCoeff() <= 0.0) {
    rep.status = CompatStatus::NonPositiveG;
    rep.message = "G has a non-positive eigenvalue";
    return rep;
  }

  const auto clusters = cluster_eigenvalues(evals, cfg.cluster_tol);
  for (const Cluster& cl : clusters) {
    const Index m = cl.end - cl.begin;
    const RealMatrix u = es.eigenvectors().middleCols(cl.begin, m);
    // T restricted to the lambda-eigenspace; its eigenvalues must be
    // +-lambda, and the sign partition is the W_{lambda,+-lambda} split.
    const RealMatrix t_restricted = u.transpose() * t_hat * u;
    Eigen::SelfAdjointEigenSolver<RealMatrix> ts(
        0.5 * (t_restricted + t_restricted.transpose()));
    for (Index i = 0; i < m; ++i) {
      if (std::abs(std::abs(ts.eigenvalues()(i)) - cl.value) >
          cfg.cluster_tol * std::max(1.0, cl.value)) {
        rep.status = CompatStatus::TMismatch;
        rep.message = "T eigenvalue differs from +-lambda";
        return rep;
      }
    }
    for (int sign : {+1, -1}) {
      std::vector<Index> cols;
      for (Index i = 0; i < m; ++i)
        if ((sign > 0) == (ts.eigenvalues()(i) > 0)) cols.push_back(i);
      if (cols.empty()) continue;
      RealMatrix w(m, static_cast<Index>(cols.size()));
      for (std::size_t k = 0; k < cols.size(); ++k)
        w.col(static_cast<Index>(k)) = ts.eigenvectors().col(cols[k]);
      DecompositionBlock block;
      block.basis = lt_inv * (u * w);
      block.lambda = cl.value;
      block.sign = sign;
      block.dim = static_cast<Index>(cols.size());
      rep.blocks.push_back(std::move(block));
    }
  }

  std::sort(rep.blocks.begin(), rep.blocks.end(),
            [](const DecompositionBlock& a, const DecompositionBlock& b) {
              if (a.lambda != b.lambda) return a.lambda < b.lambda;
              return a.sign > b.sign;
            });

  // Per-block identities: g2 = lambda g1, omega2 = sign lambda omega1,
  // J2 = sign J1, all restricted to the block.
  Index total = 0;
  for (auto& block : rep.blocks) {
    const RealMatrix& b = block.basis;
    const double lambda = block.lambda;
    const double s = static_cast<double>(block.sign);
    const RealMatrix g1_w = b.transpose() * g1 * b;
    const RealMatrix g2_w = b.transpose() * g2 * b;
    const RealMatrix w1_w = b.transpose() * w1 * b;
    const RealMatrix w2_w = b.transpose() * w2 * b;
    const RealMatrix j1_w = b.transpose() * g1 * j1 * b;
    const RealMatrix j2_w = b.transpose() * g1 * j2 * b;
    block.g_scaling_residual =
        relative((g2_w - lambda * g1_w).norm(), lambda * g1_w.norm());
    block.omega_scaling_residual =
        relative((w2_w - s * lambda * w1_w).norm(), lambda * w1_w.norm());
    block.j_match_residual = relative((j2_w - s * j1_w).norm(), j1_w.norm());
    total += block.dim;
  }
  rep.span_defect = std::abs(static_cast<double>(total - n));

  // Cross-block orthogonality in both metrics (g1-orthonormal bases, g2
  // scaled by the block eigenvalues).
  for (std::size_t i = 0; i < rep.blocks.size(); ++i)
    for (std::size_t k = i + 1; k < rep.blocks.size(); ++k) {
      const RealMatrix& bi = rep.blocks[i].basis;
      const RealMatrix& bk = rep.blocks[k].basis;
      const double g2_scale =
          std::sqrt(rep.blocks[i].lambda * rep.blocks[k].lambda);
      rep.cross_orthogonality = std::max(
          {rep.cross_orthogonality,
           (bi.transpose() * g1 * bk).cwiseAbs().maxCoeff(),
           (bi.transpose() * g2 * bk).cwiseAbs().maxCoeff() / g2_scale});
    }

  // Reassemble g2 = sum lambda_k g1 Pi_k and omega2 = sum (+-lambda_k)
  // omega1 Pi_k with Pi_k = B B^T g1 the g1-orthogonal block projector.
  RealMatrix g2_rec = RealMatrix::Zero(n, n);
  RealMatrix w2_rec = RealMatrix::Zero(n, n);
  for (const auto& block : rep.blocks) {
    const RealMatrix pi = block.basis * block.basis.transpose() * g1;
    g2_rec += block.lambda * (g1 * pi);
    w2_rec += block.sign * block.lambda * (w1 * pi);
  }
  rep.reconstruction_residual =
      std::max(relative((g2_rec - g2).norm(), g2.norm()),
               relative((w2_rec - w2).norm(), w2.norm()));
  return rep;
}

CanonicalForms canonical_hermitian_forms(const DecompositionReport& report) {
  CanonicalForms out;
  for (const auto& block : report.blocks) {
    if (block.sign > 0) {
      out.lambda_plus.push_back(block.lambda);
      out.dims_plus.push_back(block.dim);
    } else {
      out.lambda_minus.push_back(block.lambda);
      out.dims_minus.push_back(block.dim);
    }
  }
  out.both_signs_present =
      !out.lambda_plus.empty() && !out.lambda_minus.empty();
  return out;
}

PoissonCheck poisson_commutation_check(const CompatPair& pair, int samples,
                                       std::uint64_t seed, const Config& cfg) {
  PoissonCheck out;
  const Index n = pair.triple1.dim();
  const RealMatrix lam1 = pair.triple1.omega.matrix.inverse();
  const RealMatrix lam2 = pair.triple2.omega.matrix.inverse();
  const RealMatrix& g1 = pair.triple1.g.matrix;
  const RealMatrix& g2 = pair.triple2.g.matrix;
  const double lam1_norm = lam1.norm();
  const double lam2_norm = lam2.norm();

  std::mt19937_64 gen(seed);
  for (int s = 0; s < samples; ++s) {
    const RealVector xi = rng::vector(gen, n);
    const RealVector u = g1 * xi;
    const RealVector v = g2 * xi;
    const double b1 = std::abs(u.dot(lam1 * v));
    const double b2 = std::abs(u.dot(lam2 * v));
    const double scale1 = u.norm() * v.norm() * lam1_norm;
    const double scale2 = u.norm() * v.norm() * lam2_norm;
    const double value =
        std::max(relative(b1, scale1), relative(b2, scale2));
    out.values.push_back(value);
    out.max_value = std::max(out.max_value, value);
  }
  out.pass = out.max_value <= cfg.tol_compat * 1e2;
  return out;
}

CompatPair seeded_pair(const std::vector<std::tuple<double, int, Index>>& blocks,
                       std::uint64_t seed, bool orthogonal_basis_change) {
  Index n = 0;
  for (const auto& [lambda, sign, dim] : blocks) {
    if (dim % 2 != 0) throw InvalidInput("seeded_pair: block dims must be even");
    if (lambda <= 0.0) throw InvalidInput("seeded_pair: lambda must be > 0");
    n += dim;
  }

  // Canonical structures in the split frame.
  RealMatrix g1 = RealMatrix::Identity(n, n);
  RealMatrix g2 = RealMatrix::Zero(n, n);
  RealMatrix j1 = RealMatrix::Zero(n, n);
  RealMatrix j2 = RealMatrix::Zero(n, n);
  Index at = 0;
  for (const auto& [lambda, sign, dim] : blocks) {
    for (Index k = 0; k < dim / 2; ++k) {
      const Index r = at + 2 * k;
      j1(r, r + 1) = -1.0;
      j1(r + 1, r) = 1.0;
      j2(r, r + 1) = -static_cast<double>(sign);
      j2(r + 1, r) = static_cast<double>(sign);
    }
    g2.block(at, at, dim, dim) =
        lambda * RealMatrix::Identity(dim, dim);
    at += dim;
  }

  std::mt19937_64 gen(seed);
  const RealMatrix s = orthogonal_basis_change ? rng::orthogonal_matrix(gen, n)
                                               : rng::invertible_matrix(gen, n);
  const RealMatrix s_inv = s.inverse();

  auto transported = [&](const RealMatrix& g, const RealMatrix& j) {
    return forms::make_triple(s.transpose() * g * s, s_inv * j * s);
  };
  return CompatPair::make(transported(g1, j1), transported(g2, j2));
}

}  // namespace altham::compat
