#pragma once

#include <json.hpp>

#include "altham/core.hpp"

namespace altham::io {

/// Dense square matrix as carried by the JSON interchange format:
///   {"dim": n, "kind": "real"|"complex", "entries": [[...],[...]]}
/// with complex entries serialized as [re, im] pairs.
struct SquareMatrix {
  enum class Kind { Real, Complex };

  Kind kind = Kind::Real;
  ComplexMatrix entries;

  Index dim() const { return entries.rows(); }
  bool is_real() const { return kind == Kind::Real; }

  /// The real part, valid only for kind == Real.
  RealMatrix real() const;

  static SquareMatrix from_real(const RealMatrix& m);
  static SquareMatrix from_complex(const ComplexMatrix& m);
};

SquareMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::ordered_json matrix_to_json(const SquareMatrix& m);

nlohmann::ordered_json real_matrix_to_json(const RealMatrix& m);
nlohmann::ordered_json complex_matrix_to_json(const ComplexMatrix& m);

/// Fetches j[key] and parses it as a matrix; throws InvalidInput when absent.
SquareMatrix matrix_field(const nlohmann::json& j, const std::string& key);

}  // namespace altham::io
