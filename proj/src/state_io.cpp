#include "qillum/state_io.hpp"

#include <fstream>

namespace qillum {

using nlohmann::json;

namespace {

json complex_pair(const Complex& c) { return json::array({c.real(), c.imag()}); }

Complex parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError("expected [re, im], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::size_t parse_dim(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw FormatError(std::string("missing or invalid \"") + key + "\"");
  }
  return j[key].get<std::size_t>();
}

}  // namespace

json to_json(const BipartiteState& state) {
  json amps = json::array();
  for (const auto& a : state.amplitudes()) amps.push_back(complex_pair(a));
  return json{{"d_s", state.d_s()}, {"d_i", state.d_i()}, {"amplitudes", std::move(amps)}};
}

json to_json(const ComplexMatrix& mat) {
  json rows = json::array();
  for (std::size_t i = 0; i < mat.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < mat.dim(); ++j) row.push_back(complex_pair(mat(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"dim", mat.dim()}, {"entries", std::move(rows)}};
}

BipartiteState bipartite_state_from_json(const json& j, double tol) {
  if (!j.is_object()) throw FormatError("state JSON must be an object");
  const std::size_t d_s = parse_dim(j, "d_s");
  const std::size_t d_i = parse_dim(j, "d_i");
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) {
    throw FormatError("missing \"amplitudes\" array");
  }
  std::vector<Complex> amps;
  amps.reserve(j["amplitudes"].size());
  for (const auto& a : j["amplitudes"]) amps.push_back(parse_complex(a));
  return BipartiteState(d_s, d_i, std::move(amps), tol);
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("matrix JSON must be an object");
  const std::size_t dim = parse_dim(j, "dim");
  if (dim == 0) throw FormatError("\"dim\" must be >= 1");
  if (!j.contains("entries")) throw FormatError("missing \"entries\"");
  const auto& rows = j["entries"];
  if (!rows.is_array() || rows.size() != dim) {
    throw FormatError("\"entries\" must hold " + std::to_string(dim) + " rows");
  }
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != dim) {
      throw FormatError("each row must hold " + std::to_string(dim) + " entries");
    }
    for (const auto& e : row) entries.push_back(parse_complex(e));
  }
  return ComplexMatrix(dim, std::move(entries));
}

DensityMatrix density_matrix_from_json(const json& j, double tol) {
  if (j.is_object() && j.contains("amplitudes")) {
    return DensityMatrix(bipartite_state_from_json(j, tol).projector(), tol);
  }
  return DensityMatrix(matrix_from_json(j), tol);
}

DensityMatrix load_density_matrix(const std::filesystem::path& path, double tol) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  return density_matrix_from_json(j, tol);
}

}  // namespace qillum
