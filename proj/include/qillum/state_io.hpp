// JSON (de)serialization of pure bipartite states and density matrices.
//
//   pure:    {"d_s": n, "d_i": m, "amplitudes": [[re, im], ...]}
//   density: {"dim": n, "entries": [[[re, im], ...], ...]}   (row-major)
#pragma once

#include <filesystem>
#include <stdexcept>

#include <json.hpp>

#include "qillum/states.hpp"

namespace qillum {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const BipartiteState& state);
nlohmann::json to_json(const ComplexMatrix& mat);
inline nlohmann::json to_json(const DensityMatrix& rho) { return to_json(rho.matrix()); }

BipartiteState bipartite_state_from_json(const nlohmann::json& j, double tol = kDefaultTolerance);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// Accepts either format; a pure state is turned into its projector.
DensityMatrix density_matrix_from_json(const nlohmann::json& j, double tol = kDefaultTolerance);

DensityMatrix load_density_matrix(const std::filesystem::path& path,
                                  double tol = kDefaultTolerance);

}  // namespace qillum
