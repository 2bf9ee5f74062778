// Validated quantum states: density matrices and bipartite pure states.
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qillum/linalg.hpp"

namespace qillum {

class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Schmidt coefficients below this (on lambda_m = coefficient^2) are dropped.
inline constexpr double kSchmidtCutoff = 1e-12;

/// Hermitian, positive-semidefinite, unit-trace operator.
class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and smallest eigenvalue >= -tol.
  explicit DensityMatrix(ComplexMatrix mat, double tol = kDefaultTolerance);

  const ComplexMatrix& matrix() const noexcept { return mat_; }
  std::size_t dim() const noexcept { return mat_.dim(); }

  /// Tr[rho^2].
  double purity() const;

 private:
  ComplexMatrix mat_;
};

/// Pure state on C^{d_s} (x) C^{d_i}; amplitude index is s * d_i + i.
class BipartiteState {
 public:
  BipartiteState(std::size_t d_s, std::size_t d_i, std::vector<Complex> amplitudes,
                 double tol = kDefaultTolerance);

  std::size_t d_s() const noexcept { return d_s_; }
  std::size_t d_i() const noexcept { return d_i_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& amplitude(std::size_t s, std::size_t i) const { return amplitudes_[s * d_i_ + i]; }

  /// |phi><phi| on the joint space.
  ComplexMatrix projector() const { return ComplexMatrix::projector(amplitudes_); }

 private:
  std::size_t d_s_;
  std::size_t d_i_;
  std::vector<Complex> amplitudes_;
};

struct SchmidtData {
  std::vector<double> coefficients;  // sqrt(lambda_m), descending
  std::size_t rank = 0;
  std::vector<std::vector<Complex>> signal_basis;
  std::vector<std::vector<Complex>> idler_basis;

  /// sum_m coefficient_m |s_m>|i_m> as a flat amplitude vector.
  std::vector<Complex> reconstruct() const;
};

BipartiteState bell_state(std::size_t d);

/// Schmidt decomposition from the eigendecomposition of the idler reduction.
/// The first nonzero component of every signal vector is made real and
/// non-negative.
SchmidtData schmidt(const BipartiteState& state, double tol = kSchmidtCutoff);

DensityMatrix idler_reduction(const BipartiteState& state);
DensityMatrix signal_reduction(const BipartiteState& state);

/// K = 1 / Tr[rho^2].
double effective_rank_k(const DensityMatrix& rho);

/// sum_m sqrt(spectrum_m) |m>_S |m>_I with d_i = spectrum.size().
BipartiteState schmidt_family_state(std::size_t d_s, std::span<const double> spectrum,
                                    double tol = kDefaultTolerance);

/// Haar-random pure state: i.i.d. standard complex Gaussians, normalized.
template <class Generator>
BipartiteState haar_random_state(std::size_t d_s, std::size_t d_i, Generator& gen) {
  if (d_s < 2 || d_i < 1) {
    throw InvalidStateError("haar_random_state: need d_s >= 2 and d_i >= 1");
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> amps(d_s * d_i);
  double norm_sq = 0.0;
  for (auto& a : amps) {
    const double re = normal(gen);
    const double im = normal(gen);
    a = Complex(re, im);
    norm_sq += re * re + im * im;
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (auto& a : amps) a *= scale;
  return BipartiteState(d_s, d_i, std::move(amps));
}

/// Seeded convenience overload (std::mt19937_64).
BipartiteState haar_random_state(std::size_t d_s, std::size_t d_i, std::uint64_t seed);

}  // namespace qillum
