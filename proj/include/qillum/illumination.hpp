// Channel outputs of the single-photon illumination model.
//
// Target absent:  rho1 = ((1 - lam)|vac><vac| + lam 1/d_s) (x) Phi_I
// Target present: rho0 = eta Phi_q + (1 - eta) rho1
//
// The post-selected model fixes lam = 1 and drops the vacuum, leaving
// rho1 = 1/d_s (x) Phi_I on the d_s * d_i joint space. The full model lives on
// a vacuum-augmented signal space of dimension d_s + 1 with the vacuum at
// signal index 0.
#pragma once

#include "qillum/states.hpp"

namespace qillum {

class ScenarioError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IlluminationScenario {
 public:
  static IlluminationScenario post_selected(BipartiteState input, double eta);
  static IlluminationScenario full(BipartiteState input, double eta, double lam);

  const BipartiteState& input() const noexcept { return input_; }
  double eta() const noexcept { return eta_; }
  double lam() const noexcept { return lam_; }
  bool is_post_selected() const noexcept { return post_selected_; }

  IlluminationScenario with_input(BipartiteState input) const;

 private:
  IlluminationScenario(BipartiteState input, double eta, double lam, bool post_selected);

  BipartiteState input_;
  double eta_;
  double lam_;
  bool post_selected_;
};

/// 1/d_s (x) Phi_I.
DensityMatrix remaining_state_post_selected(const IlluminationScenario& scenario);
/// eta Phi_q + (1 - eta) rho1.
DensityMatrix returned_state_post_selected(const IlluminationScenario& scenario);

/// Vacuum-augmented target-absent state, dim (d_s + 1) * d_i.
DensityMatrix remaining_state_full(const IlluminationScenario& scenario);
/// Vacuum-augmented target-present state, dim (d_s + 1) * d_i.
DensityMatrix returned_state_full(const IlluminationScenario& scenario);

/// Input projector embedded in the vacuum-augmented space (modes shifted by one).
ComplexMatrix embed_input_projector(const BipartiteState& input);

/// Conventional-illumination baseline: the same scenario with the input
/// replaced by |s_1> (x) |0>_I, where |s_1> is the dominant Schmidt signal
/// vector of the original input. The idler is pure, so K_I = 1.
IlluminationScenario ci_baseline(const IlluminationScenario& scenario);

}  // namespace qillum
