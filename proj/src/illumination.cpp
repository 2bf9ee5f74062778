#include "qillum/illumination.hpp"

#include <string>

namespace qillum {

namespace {

void require_fraction(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ScenarioError(std::string(name) + " must lie in [0, 1], got " + std::to_string(value));
  }
}

void require_post_selected(const IlluminationScenario& scenario, const char* what) {
  if (!scenario.is_post_selected()) {
    throw ScenarioError(std::string(what) + ": scenario is not post-selected");
  }
}

ComplexMatrix remaining_post_selected_matrix(const BipartiteState& input) {
  const double d_s = static_cast<double>(input.d_s());
  return kron(ComplexMatrix::identity(input.d_s()) * Complex(1.0 / d_s),
              idler_reduction(input).matrix());
}

}  // namespace

IlluminationScenario::IlluminationScenario(BipartiteState input, double eta, double lam,
                                           bool post_selected)
    : input_(std::move(input)), eta_(eta), lam_(lam), post_selected_(post_selected) {
  require_fraction(eta_, "eta");
  require_fraction(lam_, "lam");
  if (post_selected_ && lam_ != 1.0) throw ScenarioError("post-selected scenario requires lam = 1");
}

IlluminationScenario IlluminationScenario::post_selected(BipartiteState input, double eta) {
  return IlluminationScenario(std::move(input), eta, 1.0, true);
}

IlluminationScenario IlluminationScenario::full(BipartiteState input, double eta, double lam) {
  return IlluminationScenario(std::move(input), eta, lam, false);
}

IlluminationScenario IlluminationScenario::with_input(BipartiteState input) const {
  return IlluminationScenario(std::move(input), eta_, lam_, post_selected_);
}

DensityMatrix remaining_state_post_selected(const IlluminationScenario& scenario) {
  require_post_selected(scenario, "remaining_state_post_selected");
  return DensityMatrix(remaining_post_selected_matrix(scenario.input()));
}

DensityMatrix returned_state_post_selected(const IlluminationScenario& scenario) {
  require_post_selected(scenario, "returned_state_post_selected");
  const double eta = scenario.eta();
  auto mixed = scenario.input().projector() * Complex(eta) +
               remaining_post_selected_matrix(scenario.input()) * Complex(1.0 - eta);
  return DensityMatrix(std::move(mixed));
}

ComplexMatrix embed_input_projector(const BipartiteState& input) {
  const std::size_t d_i = input.d_i();
  std::vector<Complex> embedded((input.d_s() + 1) * d_i);
  for (std::size_t s = 0; s < input.d_s(); ++s) {
    for (std::size_t i = 0; i < d_i; ++i) embedded[(s + 1) * d_i + i] = input.amplitude(s, i);
  }
  return ComplexMatrix::projector(embedded);
}

namespace {

ComplexMatrix remaining_full_matrix(const IlluminationScenario& scenario) {
  const auto& input = scenario.input();
  const std::size_t d_s = input.d_s();
  const double lam = scenario.lam();
  ComplexMatrix signal(d_s + 1);
  signal(0, 0) = 1.0 - lam;
  for (std::size_t k = 1; k <= d_s; ++k) signal(k, k) = lam / static_cast<double>(d_s);
  return kron(signal, idler_reduction(input).matrix());
}

}  // namespace

DensityMatrix remaining_state_full(const IlluminationScenario& scenario) {
  return DensityMatrix(remaining_full_matrix(scenario));
}

DensityMatrix returned_state_full(const IlluminationScenario& scenario) {
  const double eta = scenario.eta();
  auto mixed = embed_input_projector(scenario.input()) * Complex(eta) +
               remaining_full_matrix(scenario) * Complex(1.0 - eta);
  return DensityMatrix(std::move(mixed));
}

IlluminationScenario ci_baseline(const IlluminationScenario& scenario) {
  require_post_selected(scenario, "ci_baseline");
  const auto& input = scenario.input();
  const auto decomposition = schmidt(input);
  const auto& lead_signal = decomposition.signal_basis.front();

  const std::size_t d_i = input.d_i();
  std::vector<Complex> amps(input.d_s() * d_i);
  for (std::size_t s = 0; s < input.d_s(); ++s) amps[s * d_i] = lead_signal[s];
  return scenario.with_input(BipartiteState(input.d_s(), d_i, std::move(amps)));
}

}  // namespace qillum
