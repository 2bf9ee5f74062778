// Binary state discrimination: POVM error, Helstrom bound and the
// normalized Hilbert-Schmidt distinguishability.
#pragma once

#include <vector>

#include "qillum/illumination.hpp"
#include "qillum/states.hpp"

namespace qillum {

class InvalidPovmError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Eigenvalues of p0 rho0 - p1 rho1 above -kProjectorThreshold go to Pi_0.
inline constexpr double kProjectorThreshold = 1e-12;

class Povm {
 public:
  /// Each element must be Hermitian PSD and the elements must sum to 1.
  explicit Povm(std::vector<ComplexMatrix> elements, double tol = kDefaultTolerance);

  const std::vector<ComplexMatrix>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t dim() const noexcept { return elements_.front().dim(); }
  const ComplexMatrix& operator[](std::size_t k) const { return elements_[k]; }

 private:
  std::vector<ComplexMatrix> elements_;
};

class DiscriminationProblem {
 public:
  DiscriminationProblem(DensityMatrix rho0, DensityMatrix rho1, double p0 = 0.5,
                        double tol = kDefaultTolerance);

  const DensityMatrix& rho0() const noexcept { return rho0_; }
  const DensityMatrix& rho1() const noexcept { return rho1_; }
  double p0() const noexcept { return p0_; }
  double p1() const noexcept { return p1_; }
  std::size_t dim() const noexcept { return rho0_.dim(); }

  /// p0 rho0 - p1 rho1.
  ComplexMatrix weighted_difference() const;

 private:
  DensityMatrix rho0_;
  DensityMatrix rho1_;
  double p0_;
  double p1_;
};

/// p0 Tr[rho0 Pi_1] + p1 Tr[rho1 Pi_0] for a two-outcome POVM.
double povm_error(const DiscriminationProblem& problem, const Povm& povm);

/// (1 - ||p0 rho0 - p1 rho1||_1) / 2.
double helstrom_error(const DiscriminationProblem& problem);

/// Pi_0 projects onto the non-negative eigenspace of p0 rho0 - p1 rho1.
Povm optimal_povm(const DiscriminationProblem& problem, double threshold = kProjectorThreshold);

/// Tr[rho sigma] / sqrt(Tr[rho^2] Tr[sigma^2]).
double hs_distinguishability(const DensityMatrix& rho, const DensityMatrix& sigma);

/// 1 / sqrt(1 + eta^2 (d_s k_i - 1)).
double h01_closed_form(double eta, std::size_t d_s, double k_i);

/// H01 of the post-selected scenario evaluated from its density matrices.
double h01_direct(const IlluminationScenario& scenario);

/// H01(CI baseline) - H01(scenario), both evaluated from density matrices.
double advantage(const IlluminationScenario& scenario);

}  // namespace qillum
