#include "altham/biunitary.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "altham/random.hpp"

namespace altham::biu {

namespace {

bool hermitian_positive(const ComplexMatrix& h) {
  if ((h - h.adjoint()).norm() > 1e-10 * std::max(1.0, h.norm())) return false;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() > 0.0;
}

}  // namespace

BiUnitaryStructure biunitary_group(const ComplexMatrix& h1,
                                   const ComplexMatrix& h2,
                                   const Config& cfg) {
  require_square(h1, "biunitary_group");
  require_same_dim(h1.rows(), h2.rows(), "biunitary_group");
  const Index n = h1.rows();

  BiUnitaryStructure out;
  if (!hermitian_positive(h1) || !hermitian_positive(h2)) {
    out.status = BiUnitaryStatus::NotPositive;
    out.message = "h1 and h2 must be Hermitian positive definite";
    return out;
  }

  out.g = h1.partialPivLu().solve(h2);

  // G is h1-self-adjoint and positive; diagonalize it in the h1 geometry.
  Eigen::LLT<ComplexMatrix> llt(h1);
  const ComplexMatrix lh = ComplexMatrix(llt.matrixL()).adjoint();
  const ComplexMatrix lh_inv =
      lh.triangularView<Eigen::Upper>().solve(ComplexMatrix::Identity(n, n));
  const ComplexMatrix g_hat = lh * out.g * lh_inv;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(
      0.5 * (g_hat + g_hat.adjoint()));
  const RealVector evals = es.eigenvalues();

  const double scale = std::max(std::abs(evals(0)), std::abs(evals(n - 1)));
  Index begin = 0;
  for (Index i = 1; i <= n; ++i) {
    if (i == n || evals(i) - evals(i - 1) > cfg.cluster_tol * scale) {
      EigenBlock block;
      block.lambda = evals.segment(begin, i - begin).mean();
      block.multiplicity = i - begin;
      block.basis = lh_inv * es.eigenvectors().middleCols(begin, i - begin);
      out.group_dimension += block.multiplicity * block.multiplicity;
      out.blocks.push_back(std::move(block));
      begin = i;
    }
  }
  out.cyclic = std::all_of(out.blocks.begin(), out.blocks.end(),
                           [](const EigenBlock& b) { return b.multiplicity == 1; });
  return out;
}

BiUnitaryCheck is_biunitary(const ComplexMatrix& u, const ComplexMatrix& h1,
                            const ComplexMatrix& h2, const Config& cfg) {
  require_square(u, "is_biunitary");
  require_same_dim(u.rows(), h1.rows(), "is_biunitary");
  require_same_dim(u.rows(), h2.rows(), "is_biunitary");
  BiUnitaryCheck out;
  out.tol_used = cfg.tol_biunitary;
  out.residual_h1 = relative((u.adjoint() * h1 * u - h1).norm(), h1.norm());
  out.residual_h2 = relative((u.adjoint() * h2 * u - h2).norm(), h2.norm());
  out.biunitary = out.residual_h1 <= cfg.tol_biunitary &&
                  out.residual_h2 <= cfg.tol_biunitary;
  return out;
}

ComplexMatrix phase_function_unitary(const BiUnitaryStructure& s,
                                     const std::function<double(double)>& theta) {
  if (s.blocks.empty()) throw InvalidInput("phase_function_unitary: empty structure");
  const Index n = s.blocks.front().basis.rows();
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  ComplexMatrix basis(n, n);
  ComplexMatrix phases = ComplexMatrix::Zero(n, n);
  Index at = 0;
  for (const auto& block : s.blocks) {
    basis.middleCols(at, block.multiplicity) = block.basis;
    const Complex phase = std::exp(Complex(0.0, theta(block.lambda)));
    for (Index k = 0; k < block.multiplicity; ++k) phases(at + k, at + k) = phase;
    at += block.multiplicity;
  }
  // u acts as the phase on each eigenspace; basis columns are h1-orthonormal
  // so the inverse of `basis` realizes the h1-orthogonal coordinates.
  u = basis * phases * basis.inverse();
  return u;
}

ComplexMatrix sample_group_element(const BiUnitaryStructure& s,
                                   std::uint64_t seed) {
  if (s.blocks.empty()) throw InvalidInput("sample_group_element: empty structure");
  const Index n = s.blocks.front().basis.rows();
  ComplexMatrix basis(n, n);
  ComplexMatrix blockdiag = ComplexMatrix::Zero(n, n);
  std::mt19937_64 gen(seed);
  Index at = 0;
  for (const auto& block : s.blocks) {
    basis.middleCols(at, block.multiplicity) = block.basis;
    blockdiag.block(at, at, block.multiplicity, block.multiplicity) =
        rng::unitary_matrix(gen, block.multiplicity);
    at += block.multiplicity;
  }
  return basis * blockdiag * basis.inverse();
}

BoxReport box_example(Index n_grid, double alpha, BoxInterval interval) {
  if (n_grid < 2 || alpha <= 0.0)
    throw InvalidInput("box_example: need n_grid >= 2 and alpha > 0");

  BoxReport out;
  if (interval == BoxInterval::Full) {
    // midpoint grid over [-alpha, alpha]; n_grid even so points pair as +-x
    if (n_grid % 2 != 0)
      throw InvalidInput("box_example: full interval needs an even n_grid");
    const double h = 2.0 * alpha / static_cast<double>(n_grid);
    for (Index k = 0; k < n_grid; ++k)
      out.grid.push_back(-alpha + (static_cast<double>(k) + 0.5) * h);
    // eigenvalues 1 + x^2 pair exactly by construction
    for (Index k = n_grid / 2; k < n_grid; ++k) {
      out.eigenvalues.push_back(1.0 + out.grid[k] * out.grid[k]);
      out.multiplicities.push_back(2);
      out.group_dimension += 4;
    }
    out.cyclic = false;
    if (out.eigenvalues.size() > 1)
      out.sqrt_spacing = std::sqrt(out.eigenvalues[1] - 1.0) -
                         std::sqrt(out.eigenvalues[0] - 1.0);
  } else {
    const double h = alpha / static_cast<double>(n_grid);
    for (Index k = 0; k < n_grid; ++k)
      out.grid.push_back((static_cast<double>(k) + 0.5) * h);
    for (Index k = 0; k < n_grid; ++k) {
      out.eigenvalues.push_back(1.0 + out.grid[k] * out.grid[k]);
      out.multiplicities.push_back(1);
      out.group_dimension += 1;
    }
    out.cyclic = true;
    if (out.eigenvalues.size() > 1)
      out.sqrt_spacing = std::sqrt(out.eigenvalues[1] - 1.0) -
                         std::sqrt(out.eigenvalues[0] - 1.0);
  }
  return out;
}

RealMatrix adapted_basis(const forms::AdmissibleTriple& t) {
  const Index n = t.dim();
  const RealMatrix& j = t.j;
  const RealMatrix& g = t.g.matrix;

  // g-orthonormal J-adapted basis (u_1, J u_1, u_2, J u_2, ...). Since J is
  // g-skew-adjoint and g-orthogonal, J u is automatically g-orthogonal to u
  // and to every earlier J-invariant pair span, so plain g-Gram-Schmidt on
  // the candidates suffices.
  RealMatrix basis(n, n);
  Index have = 0;
  for (Index cand = 0; cand < n && have < n; ++cand) {
    RealVector u = RealVector::Zero(n);
    u(cand) = 1.0;
    for (Index k = 0; k < have; ++k)
      u -= basis.col(k).dot(g * u) * basis.col(k);
    const double norm = std::sqrt(u.dot(g * u));
    if (norm < 1e-8) continue;
    u /= norm;
    basis.col(have) = u;
    basis.col(have + 1) = j * u;
    have += 2;
  }
  if (have != n)
    throw InvalidInput("adapted_basis: failed to build a J-adapted basis");
  return basis;
}

ComplexMatrix complexify_metric(const forms::AdmissibleTriple& t,
                                const RealMatrix& basis) {
  const Index n = t.dim();
  require_same_dim(basis.rows(), n, "complexify_metric");
  if (n % 2 != 0) throw InvalidInput("complexify_metric: odd dimension");

  const Index m = n / 2;
  ComplexMatrix h(m, m);
  for (Index r = 0; r < m; ++r)
    for (Index c = 0; c < m; ++c) {
      const RealVector x = basis.col(2 * r);
      const RealVector y = basis.col(2 * c);
      const double re = x.dot(t.g.matrix * y);
      const double im = (t.j * x).dot(t.g.matrix * y);
      h(r, c) = Complex(re, im);
    }
  return h;
}

}  // namespace altham::biu
