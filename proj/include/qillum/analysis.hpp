// Parameter sweeps and numerical checks of the post-selected illumination
// model: monotonicity of H01 and of the Helstrom error, optimality of the
// maximally entangled input, and spectrum dependence of the Helstrom error.
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qillum/discrimination.hpp"

namespace qillum {

class AnalysisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two evaluation routes that must agree do not.
class NumericalCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Agreement required between the closed-form and matrix H01.
inline constexpr double kH01Agreement = 1e-9;

/// A rule for building an input state at a given signal dimension.
class StateFamily {
 public:
  enum class Kind { Bell, UniformRank, Spectrum };

  static StateFamily bell();
  static StateFamily uniform_rank(std::size_t rank);
  static StateFamily spectrum(std::vector<double> weights);

  Kind kind() const noexcept { return kind_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  /// Throws AnalysisError when the family cannot be realized at d_s.
  BipartiteState make(std::size_t d_s) const;
  std::string label() const;

 private:
  StateFamily(Kind kind, std::size_t rank, std::vector<double> weights)
      : kind_(kind), rank_(rank), weights_(std::move(weights)) {}

  Kind kind_;
  std::size_t rank_;
  std::vector<double> weights_;
};

struct SweepGrid {
  std::vector<double> etas;
  std::vector<std::size_t> dims;
  std::vector<StateFamily> families;
  double p0 = 0.5;
};

struct SweepRecord {
  double eta = 0.0;
  std::size_t d_s = 0;
  std::size_t d_i = 0;
  double k_i = 0.0;
  double h01_closed = 0.0;
  double h01_direct = 0.0;
  double p_err = 0.0;
  double p_err_ci = 0.0;
  double advantage = 0.0;
  std::string family;
};

/// Evaluates one post-selected scenario through both H01 routes and the
/// Helstrom bound. Throws NumericalCheckError if the H01 routes disagree.
SweepRecord evaluate_point(const BipartiteState& input, double eta, double p0 = 0.5,
                           std::string family = {});

/// One record per grid point, ordered eta-major, then dimension, then family.
std::vector<SweepRecord> run_sweep(const SweepGrid& grid);

struct MonotonicityViolation {
  std::string axis;    // "eta", "d_s", "k_i" or a '+'-joined combination
  std::string metric;  // "h01", "p_err" or "order"
  std::size_t before = 0;  // index of the dominated record
  std::size_t after = 0;   // index of the dominating record
  double value_before = 0.0;
  double value_after = 0.0;
};

struct MonotonicityReport {
  std::size_t comparisons = 0;
  std::vector<MonotonicityViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks every pair of records where one dominates the other in
/// (eta, d_s, k_i). Along such a trajectory h01 and p_err must not increase
/// beyond `slack`, and must strictly decrease when the larger eta is
/// positive. Throws AnalysisError when some configuration is missing etas.
MonotonicityReport verify_monotonicity(std::span<const SweepRecord> records,
                                       double slack = 1e-10);

struct OptimalityReport {
  std::size_t d_s = 0;
  std::size_t d_i = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double eta = 0.0;
  double p0 = 0.5;
  double bell_h01 = 0.0;
  double bell_h01_closed = 0.0;
  double bell_p_err = 0.0;
  double best_sampled_h01 = 0.0;
  double best_sampled_p_err = 0.0;
  double margin_h01 = 0.0;
  double margin_p_err = 0.0;

  double margin() const noexcept { return std::min(margin_h01, margin_p_err); }
};

/// Maximally entangled state of Schmidt rank min(d_s, d_i); the Bell state
/// when d_s == d_i.
BipartiteState maximally_entangled_state(std::size_t d_s, std::size_t d_i);

/// Compares the given samples against the maximally entangled reference.
OptimalityReport compare_with_bell(std::size_t d_s, std::size_t d_i,
                                   std::span<const BipartiteState> samples, double eta,
                                   double p0 = 0.5);

/// Haar-samples `n_samples` inputs and compares them against the reference.
OptimalityReport verify_bell_optimality(std::size_t d_s, std::size_t d_i, std::size_t n_samples,
                                        std::uint64_t seed, double eta = 0.5, double p0 = 0.5);

struct SpectrumProbeReport {
  std::size_t d_s = 0;
  double eta = 0.0;
  double k_target = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::vector<double>> spectra;
  std::vector<double> p_errors;
  double spread = 0.0;
};

/// Length-d_s spectrum interpolating uniform-on-r and uniform-on-(r+1) with
/// r = floor(k), tuned so that 1 / sum(w^2) == k.
std::vector<double> interpolated_spectrum(std::size_t d_s, double k);

/// Helstrom errors of the post-selected model for each spectrum, and their
/// max - min spread.
double helstrom_spread(std::size_t d_s, double eta, std::span<const std::vector<double>> spectra,
                       double p0 = 0.5, std::vector<double>* errors = nullptr);

/// Draws `n_spectra` spectra with K = k_target and reports how far their
/// Helstrom errors spread. No pass/fail judgment is made.
SpectrumProbeReport spectrum_dependence_probe(std::size_t d_s, double eta, double k_target,
                                              std::size_t n_spectra, std::uint64_t seed,
                                              double p0 = 0.5);

}  // namespace qillum
