#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "altham/core.hpp"

namespace altham::osc {

/// Anisotropic oscillator data: per-mode frequencies and the parameter of
/// the exponential coordinate map F = exp(lambda/2 (p^2 + q^2)).
struct OscillatorSpec {
  std::vector<double> frequencies;
  double lambda = 1.0;

  std::size_t modes() const { return frequencies.size(); }
};

struct PhasePoint {
  std::vector<double> q;
  std::vector<double> p;
};

/// Exact per-mode rotation with the convention dq/dt = lambda_k p,
/// dp/dt = -lambda_k q; conserves p_k^2 + q_k^2 mode by mode.
PhasePoint oscillator_flow(const OscillatorSpec& spec, const PhasePoint& x,
                           double t);

/// One-dimensional map (Q, P) = (lambda q F, lambda p F); throws for n != 1.
std::pair<double, double> map_PQ(const OscillatorSpec& spec,
                                 const PhasePoint& x);

struct BracketReport {
  bool degenerate = false;     // lambda = 0: zero map, check skipped
  double fd_bracket = 0.0;     // {P, Q} by central differences
  double closed_form = 0.0;    // lambda^2 F^2 (1 + lambda r^2) {p, q}
  double relative_error = 0.0;
};

/// Finite-difference check of {P,Q} = lambda^2 F^2 [1 + lambda (p^2+q^2)]
/// {p,q} at one point ({q,p} = +1 canonical, so {p,q} = -1).
BracketReport bracket_identity_check(const OscillatorSpec& spec,
                                     const PhasePoint& x, double fd_step);

struct LinearityReport {
  double max_q_residual = 0.0;  // max |dQ/dt - P| over the grid
  double max_p_residual = 0.0;  // max |dP/dt + Q|
  double max_energy_drift = 0.0;  // |Q^2 + P^2| variation along the flow
  bool pass = false;
};

/// Transports x along the flow over t_grid and verifies dQ/dt = P,
/// dP/dt = -Q by finite differences in t (unit frequency).
LinearityReport linear_in_both_check(const OscillatorSpec& spec,
                                     const PhasePoint& x,
                                     const std::vector<double>& t_grid,
                                     double tol = 1e-6);

/// Radial profile handle: F(q,p) = profile(p^2 + q^2).
using RadialProfile = std::function<double(double)>;

RadialProfile exponential_profile(double lambda);

struct TwoFormReport {
  std::vector<double> coefficient;       // c(q,p) at each point
  std::vector<double> coefficient_flow;  // c at the flow image
  double max_relative_change = 0.0;
  bool pass = false;
};

/// Coefficient of omega_F = c(q,p) dq ^ dp, c = Jacobian determinant of the
/// map (dF/dp, dF/dq); invariance means c is constant along flow orbits.
/// Derivatives by central differences with two Richardson levels.
TwoFormReport invariant_two_form_check(const OscillatorSpec& spec,
                                       const RadialProfile& profile,
                                       const std::vector<PhasePoint>& points,
                                       double t, double tol = 1e-8);

// Finite-difference helpers (central stencils + two Richardson levels).
double fd_derivative(const std::function<double(double)>& f, double x,
                     double base_step);
double fd_second_mixed(const std::function<double(double, double)>& f,
                       double x, double y, double base_step);
double fd_second(const std::function<double(double)>& f, double x,
                 double base_step);

}  // namespace altham::osc
