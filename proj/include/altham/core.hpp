#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace altham {

using Real = double;
using Complex = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Numerical thresholds used across the toolkit. All residual tolerances are
/// relative to the scale of the operands; every report carries the values
/// actually used.
struct Config {
  double tol_sym = 1e-12;         // symmetry/skewness classification
  double tol_triple = 1e-10;      // admissible-triple certification
  double tol_solve = 1e-9;        // invariance residual of basis elements
  double svd_kernel = 1e-9;       // sigma <= svd_kernel * sigma_max is null
  double tol_fact = 1e-10;        // ||A - Lambda H|| / ||A||
  double det_floor = 1e-10;       // scale-free singularity floor
  double tol_trace = 1e-10;       // trace condition, scaled by ||A||_F^(2k+1)
  double cluster_tol = 1e-6;      // relative eigenvalue clustering gap
  double tol_block = 1e-9;        // per-block decomposition identities
  double tol_compat = 1e-10;      // compatibility residuals
  double tol_unimodular = 1e-8;   // | |eig| - 1 | bound (power boundedness)
  double tol_biunitary = 1e-10;   // bi-unitarity residuals

  // Returns false when the name is unknown.
  bool set(std::string_view name, double value);
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require_square(const ComplexMatrix& m, std::string_view what) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw DimensionMismatch(std::string(what) + ": expected a nonempty square matrix");
}

inline void require_square(const RealMatrix& m, std::string_view what) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw DimensionMismatch(std::string(what) + ": expected a nonempty square matrix");
}

inline void require_same_dim(Index a, Index b, std::string_view what) {
  if (a != b)
    throw DimensionMismatch(std::string(what) + ": dimension mismatch (" +
                            std::to_string(a) + " vs " + std::to_string(b) + ")");
}

/// Largest singular value (h0 = identity operator norm).
double operator_norm(const ComplexMatrix& m);
double operator_norm(const RealMatrix& m);

/// Relative residual ||x|| / scale with a floor so an exactly-zero scale
/// degrades to the absolute residual.
inline double relative(double residual, double scale) {
  return scale > 0.0 ? residual / scale : residual;
}

}  // namespace altham
