#include "qillum/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qillum {

Povm::Povm(std::vector<ComplexMatrix> elements, double tol) : elements_(std::move(elements)) {
  if (elements_.empty()) throw InvalidPovmError("Povm: no elements");
  const std::size_t dim = elements_.front().dim();
  ComplexMatrix total(dim);
  for (const auto& e : elements_) {
    if (e.dim() != dim) throw DimensionError("Povm: elements differ in dimension");
    if (!e.is_hermitian(tol)) throw InvalidPovmError("Povm: element is not Hermitian");
    if (eigh(e, tol).eigenvalues.front() < -tol) {
      throw InvalidPovmError("Povm: element is not positive semidefinite");
    }
    total += e;
  }
  if (!total.approx_equal(ComplexMatrix::identity(dim), tol)) {
    throw InvalidPovmError("Povm: elements do not sum to the identity");
  }
}

DiscriminationProblem::DiscriminationProblem(DensityMatrix rho0, DensityMatrix rho1, double p0,
                                             double tol)
    : rho0_(std::move(rho0)), rho1_(std::move(rho1)), p0_(p0), p1_(1.0 - p0) {
  if (rho0_.dim() != rho1_.dim()) {
    throw DimensionError("DiscriminationProblem: rho0 is " + std::to_string(rho0_.dim()) +
                         "-dimensional, rho1 is " + std::to_string(rho1_.dim()));
  }
  if (!(p0 >= -tol && p0 <= 1.0 + tol)) {
    throw std::invalid_argument("DiscriminationProblem: prior p0 must lie in [0, 1]");
  }
  p0_ = std::clamp(p0, 0.0, 1.0);
  p1_ = 1.0 - p0_;
}

ComplexMatrix DiscriminationProblem::weighted_difference() const {
  return rho0_.matrix() * Complex(p0_) - rho1_.matrix() * Complex(p1_);
}

double povm_error(const DiscriminationProblem& problem, const Povm& povm) {
  if (povm.size() != 2) {
    throw InvalidPovmError("povm_error: expected a two-outcome POVM, got " +
                           std::to_string(povm.size()) + " elements");
  }
  if (povm.dim() != problem.dim()) throw DimensionError("povm_error: POVM/state dimension mismatch");
  // rho and Pi are Hermitian, so Tr[rho Pi] = Tr[rho^dagger Pi].
  const double miss0 = hs_inner(problem.rho0().matrix(), povm[1]).real();
  const double miss1 = hs_inner(problem.rho1().matrix(), povm[0]).real();
  return problem.p0() * miss0 + problem.p1() * miss1;
}

double helstrom_error(const DiscriminationProblem& problem) {
  const double norm = trace_norm(problem.weighted_difference());
  const double value = 0.5 * (1.0 - norm);
  return std::clamp(value, 0.0, std::min(problem.p0(), problem.p1()));
}

Povm optimal_povm(const DiscriminationProblem& problem, double threshold) {
  const auto decomposition = eigh(problem.weighted_difference());
  const std::size_t n = problem.dim();
  ComplexMatrix pi0(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (decomposition.eigenvalues[k] <= -threshold) continue;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        pi0(i, j) += decomposition.eigenvectors(i, k) * std::conj(decomposition.eigenvectors(j, k));
      }
    }
  }
  auto pi1 = ComplexMatrix::identity(n) - pi0;
  return Povm({std::move(pi0), std::move(pi1)});
}

double hs_distinguishability(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("hs_distinguishability: dimension mismatch");
  const double overlap = hs_inner(rho.matrix(), sigma.matrix()).real();
  const double value = overlap / std::sqrt(rho.purity() * sigma.purity());
  return std::clamp(value, 0.0, 1.0);
}

double h01_closed_form(double eta, std::size_t d_s, double k_i) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("h01_closed_form: eta must lie in [0, 1]");
  }
  if (d_s < 2) throw std::invalid_argument("h01_closed_form: d_s must be >= 2");
  if (!(k_i >= 1.0 - kDefaultTolerance) || !std::isfinite(k_i)) {
    throw std::invalid_argument("h01_closed_form: k_i must be >= 1");
  }
  return 1.0 / std::sqrt(1.0 + eta * eta * (static_cast<double>(d_s) * k_i - 1.0));
}

double h01_direct(const IlluminationScenario& scenario) {
  return hs_distinguishability(returned_state_post_selected(scenario),
                               remaining_state_post_selected(scenario));
}

double advantage(const IlluminationScenario& scenario) {
  return h01_direct(ci_baseline(scenario)) - h01_direct(scenario);
}

}  // namespace qillum
