#include "altham/core.hpp"

#include <Eigen/SVD>

namespace altham {

bool Config::set(std::string_view name, double value) {
  struct Entry {
    std::string_view name;
    double Config::*field;
  };
  static constexpr Entry entries[] = {
      {"tol_sym", &Config::tol_sym},
      {"tol_triple", &Config::tol_triple},
      {"tol_solve", &Config::tol_solve},
      {"svd_kernel", &Config::svd_kernel},
      {"tol_fact", &Config::tol_fact},
      {"det_floor", &Config::det_floor},
      {"tol_trace", &Config::tol_trace},
      {"cluster_tol", &Config::cluster_tol},
      {"tol_block", &Config::tol_block},
      {"tol_compat", &Config::tol_compat},
      {"tol_unimodular", &Config::tol_unimodular},
      {"tol_biunitary", &Config::tol_biunitary},
  };
  for (const auto& e : entries) {
    if (e.name == name) {
      this->*(e.field) = value;
      return true;
    }
  }
  return false;
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double operator_norm(const RealMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<RealMatrix> svd(m);
  return svd.singularValues()(0);
}

}  // namespace altham
