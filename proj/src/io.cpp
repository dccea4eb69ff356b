#include "altham/io.hpp"

#include <cmath>

namespace altham::io {

RealMatrix SquareMatrix::real() const {
  if (kind != Kind::Real)
    throw InvalidInput("matrix is complex where a real one is required");
  return entries.real();
}

SquareMatrix SquareMatrix::from_real(const RealMatrix& m) {
  require_square(m, "matrix");
  SquareMatrix out;
  out.kind = Kind::Real;
  out.entries = m.cast<Complex>();
  return out;
}

SquareMatrix SquareMatrix::from_complex(const ComplexMatrix& m) {
  require_square(m, "matrix");
  SquareMatrix out;
  out.kind = Kind::Complex;
  out.entries = m;
  return out;
}

namespace {

Complex parse_entry(const nlohmann::json& e, bool complex_kind) {
  if (e.is_number()) return Complex(e.get<double>(), 0.0);
  if (complex_kind && e.is_array() && e.size() == 2 && e[0].is_number() &&
      e[1].is_number())
    return Complex(e[0].get<double>(), e[1].get<double>());
  throw InvalidInput("matrix entry must be a number" +
                     std::string(complex_kind ? " or an [re, im] pair" : ""));
}

}  // namespace

SquareMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("matrix: expected a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw InvalidInput("matrix: missing integer field \"dim\"");
  const auto dim = j["dim"].get<long>();
  if (dim < 1) throw InvalidInput("matrix: dim must be >= 1");

  std::string kind = j.value("kind", std::string("real"));
  if (kind != "real" && kind != "complex")
    throw InvalidInput("matrix: kind must be \"real\" or \"complex\"");
  const bool complex_kind = (kind == "complex");

  if (!j.contains("entries") || !j["entries"].is_array() ||
      j["entries"].size() != static_cast<std::size_t>(dim))
    throw InvalidInput("matrix: entries must be a dim-sized array of rows");

  ComplexMatrix m(dim, dim);
  for (long r = 0; r < dim; ++r) {
    const auto& row = j["entries"][static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim))
      throw InvalidInput("matrix: row " + std::to_string(r) +
                         " must have dim entries");
    for (long c = 0; c < dim; ++c) {
      Complex v = parse_entry(row[static_cast<std::size_t>(c)], complex_kind);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw InvalidInput("matrix: non-finite entry at (" + std::to_string(r) +
                           "," + std::to_string(c) + ")");
      m(r, c) = v;
    }
  }

  SquareMatrix out;
  out.kind = complex_kind ? SquareMatrix::Kind::Complex : SquareMatrix::Kind::Real;
  out.entries = m;
  return out;
}

nlohmann::ordered_json real_matrix_to_json(const RealMatrix& m) {
  nlohmann::ordered_json j;
  j["dim"] = m.rows();
  j["kind"] = "real";
  auto rows = nlohmann::ordered_json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

nlohmann::ordered_json complex_matrix_to_json(const ComplexMatrix& m) {
  nlohmann::ordered_json j;
  j["dim"] = m.rows();
  j["kind"] = "complex";
  auto rows = nlohmann::ordered_json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (Index c = 0; c < m.cols(); ++c)
      row.push_back(nlohmann::ordered_json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

nlohmann::ordered_json matrix_to_json(const SquareMatrix& m) {
  return m.is_real() ? real_matrix_to_json(m.entries.real())
                     : complex_matrix_to_json(m.entries);
}

SquareMatrix matrix_field(const nlohmann::json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput("input: missing matrix field \"" + key + "\"");
  return matrix_from_json(j[key]);
}

}  // namespace altham::io
