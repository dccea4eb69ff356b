#include "altham/classical_osc.hpp"

#include <cmath>

#include "altham/kernels.hpp"

namespace altham::osc {

PhasePoint oscillator_flow(const OscillatorSpec& spec, const PhasePoint& x,
                           double t) {
  if (x.q.size() != spec.modes() || x.p.size() != spec.modes())
    throw DimensionMismatch("oscillator_flow: point size mismatch");
  PhasePoint out = x;
  for (std::size_t k = 0; k < spec.modes(); ++k) {
    const double c = std::cos(spec.frequencies[k] * t);
    const double s = std::sin(spec.frequencies[k] * t);
    out.q[k] = x.q[k] * c + x.p[k] * s;
    out.p[k] = -x.q[k] * s + x.p[k] * c;
  }
  return out;
}

std::pair<double, double> map_PQ(const OscillatorSpec& spec,
                                 const PhasePoint& x) {
  if (spec.modes() != 1)
    throw InvalidInput("map_PQ: the explicit construction is one-dimensional");
  if (x.q.size() != 1 || x.p.size() != 1)
    throw DimensionMismatch("map_PQ: point size mismatch");
  const double q = x.q[0];
  const double p = x.p[0];
  const double f = std::exp(0.5 * spec.lambda * (p * p + q * q));
  return {spec.lambda * q * f, spec.lambda * p * f};
}

double fd_derivative(const std::function<double(double)>& f, double x,
                     double base_step) {
  const double h = base_step * std::max(1.0, std::abs(x));
  auto central = [&](double step) {
    return (f(x + step) - f(x - step)) / (2.0 * step);
  };
  // two Richardson levels on the central difference
  const double d1 = central(h);
  const double d2 = central(h / 2.0);
  const double d4 = central(h / 4.0);
  const double r1 = (4.0 * d2 - d1) / 3.0;
  const double r2 = (4.0 * d4 - d2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

double fd_second(const std::function<double(double)>& f, double x,
                 double base_step) {
  const double h = base_step * std::max(1.0, std::abs(x));
  auto central = [&](double step) {
    return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
  };
  const double d1 = central(h);
  const double d2 = central(h / 2.0);
  const double d4 = central(h / 4.0);
  const double r1 = (4.0 * d2 - d1) / 3.0;
  const double r2 = (4.0 * d4 - d2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

double fd_second_mixed(const std::function<double(double, double)>& f,
                       double x, double y, double base_step) {
  const double hx = base_step * std::max(1.0, std::abs(x));
  const double hy = base_step * std::max(1.0, std::abs(y));
  auto central = [&](double sx, double sy) {
    return (f(x + sx, y + sy) - f(x + sx, y - sy) - f(x - sx, y + sy) +
            f(x - sx, y - sy)) /
           (4.0 * sx * sy);
  };
  const double d1 = central(hx, hy);
  const double d2 = central(hx / 2.0, hy / 2.0);
  const double d4 = central(hx / 4.0, hy / 4.0);
  const double r1 = (4.0 * d2 - d1) / 3.0;
  const double r2 = (4.0 * d4 - d2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

BracketReport bracket_identity_check(const OscillatorSpec& spec,
                                     const PhasePoint& x, double fd_step) {
  if (fd_step <= 0.0) throw InvalidInput("bracket_identity_check: fd_step > 0");
  if (spec.modes() != 1)
    throw InvalidInput("bracket_identity_check: one-dimensional construction");
  BracketReport rep;
  if (spec.lambda == 0.0) {
    rep.degenerate = true;  // P = Q = 0 identically
    return rep;
  }
  const double q = x.q.at(0);
  const double p = x.p.at(0);
  const double lam = spec.lambda;

  auto P_of = [&](double qq, double pp) {
    return lam * pp * std::exp(0.5 * lam * (pp * pp + qq * qq));
  };
  auto Q_of = [&](double qq, double pp) {
    return lam * qq * std::exp(0.5 * lam * (pp * pp + qq * qq));
  };

  const double dP_dq =
      fd_derivative([&](double v) { return P_of(v, p); }, q, fd_step);
  const double dP_dp =
      fd_derivative([&](double v) { return P_of(q, v); }, p, fd_step);
  const double dQ_dq =
      fd_derivative([&](double v) { return Q_of(v, p); }, q, fd_step);
  const double dQ_dp =
      fd_derivative([&](double v) { return Q_of(q, v); }, p, fd_step);

  rep.fd_bracket = dP_dq * dQ_dp - dP_dp * dQ_dq;

  const double r2 = p * p + q * q;
  const double f = std::exp(0.5 * lam * r2);
  // {p,q} = -1 with the canonical {q,p} = +1
  rep.closed_form = lam * lam * f * f * (1.0 + lam * r2) * (-1.0);
  rep.relative_error = std::abs(rep.fd_bracket - rep.closed_form) /
                       std::max(1e-300, std::abs(rep.closed_form));
  return rep;
}

LinearityReport linear_in_both_check(const OscillatorSpec& spec,
                                     const PhasePoint& x,
                                     const std::vector<double>& t_grid,
                                     double tol) {
  if (spec.modes() != 1)
    throw InvalidInput("linear_in_both_check: one-dimensional construction");
  LinearityReport rep;

  auto QP_at = [&](double t) {
    return map_PQ(spec, oscillator_flow(spec, x, t));
  };

  const auto origin = QP_at(0.0);
  const double e0 =
      origin.first * origin.first + origin.second * origin.second;

  const auto q_res = kernels::map_batch_omp(t_grid.size(), [&](std::size_t i) {
    const double t = t_grid[i];
    const double dQ =
        fd_derivative([&](double tt) { return QP_at(tt).first; }, t, 1e-5);
    return std::abs(dQ - QP_at(t).second);
  });
  const auto p_res = kernels::map_batch_omp(t_grid.size(), [&](std::size_t i) {
    const double t = t_grid[i];
    const double dP =
        fd_derivative([&](double tt) { return QP_at(tt).second; }, t, 1e-5);
    return std::abs(dP + QP_at(t).first);
  });
  const auto e_res = kernels::map_batch_omp(t_grid.size(), [&](std::size_t i) {
    const auto [Q, P] = QP_at(t_grid[i]);
    return std::abs(Q * Q + P * P - e0);
  });
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    rep.max_q_residual = std::max(rep.max_q_residual, q_res[i]);
    rep.max_p_residual = std::max(rep.max_p_residual, p_res[i]);
    rep.max_energy_drift = std::max(rep.max_energy_drift, e_res[i]);
  }
  rep.pass = rep.max_q_residual <= tol && rep.max_p_residual <= tol;
  return rep;
}

RadialProfile exponential_profile(double lambda) {
  return [lambda](double s) { return std::exp(0.5 * lambda * s); };
}

TwoFormReport invariant_two_form_check(const OscillatorSpec& spec,
                                       const RadialProfile& profile,
                                       const std::vector<PhasePoint>& points,
                                       double t, double tol) {
  TwoFormReport rep;

  auto F = [&](double q, double p) { return profile(p * p + q * q); };

  // c = d_q(F_p) d_p(F_q) - d_p(F_p) d_q(F_q); first-derivative fields use
  // a second-derivative stencil on F. Base step 1e-3: at 1e-5 the eps/h^2
  // roundoff would exceed the 1e-8 invariance target.
  auto coefficient = [&](double q, double p) {
    const double fqp = fd_second_mixed(F, q, p, 1e-3);
    const double fpp =
        fd_second([&](double v) { return F(q, v); }, p, 1e-3);
    const double fqq =
        fd_second([&](double v) { return F(v, p); }, q, 1e-3);
    return fqp * fqp - fpp * fqq;
  };

  const auto values = kernels::map_batch_omp(
      points.size(), [&](std::size_t i) {
        return coefficient(points[i].q.at(0), points[i].p.at(0));
      });
  const auto flowed = kernels::map_batch_omp(
      points.size(), [&](std::size_t i) {
        const PhasePoint y = oscillator_flow(spec, points[i], t);
        return coefficient(y.q.at(0), y.p.at(0));
      });

  rep.coefficient = values;
  rep.coefficient_flow = flowed;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double change = std::abs(flowed[i] - values[i]) /
                          std::max(1e-300, std::abs(values[i]));
    rep.max_relative_change = std::max(rep.max_relative_change, change);
  }
  rep.pass = rep.max_relative_change <= tol;
  return rep;
}

}  // namespace altham::osc
