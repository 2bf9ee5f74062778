#include "qillum/states.hpp"

#include <algorithm>
#include <string>

namespace qillum {

DensityMatrix::DensityMatrix(ComplexMatrix mat, double tol) : mat_(std::move(mat)) {
  const double defect = mat_.hermitian_defect();
  if (!(defect <= tol)) {
    throw InvalidStateError("DensityMatrix: not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const Complex tr = mat_.trace();
  if (!(std::abs(tr - 1.0) <= tol)) {
    throw InvalidStateError("DensityMatrix: trace " + std::to_string(tr.real()) + " != 1");
  }
  const auto spectrum = eigh(mat_, tol).eigenvalues;
  if (!(spectrum.front() >= -tol)) {
    throw InvalidStateError("DensityMatrix: negative eigenvalue " +
                            std::to_string(spectrum.front()));
  }
}

double DensityMatrix::purity() const { return hs_inner(mat_, mat_).real(); }

BipartiteState::BipartiteState(std::size_t d_s, std::size_t d_i, std::vector<Complex> amplitudes,
                               double tol)
    : d_s_(d_s), d_i_(d_i), amplitudes_(std::move(amplitudes)) {
  if (d_s < 2 || d_i < 1) {
    throw InvalidStateError("BipartiteState: need d_s >= 2 and d_i >= 1");
  }
  if (amplitudes_.size() != d_s * d_i) {
    throw InvalidStateError("BipartiteState: expected " + std::to_string(d_s * d_i) +
                            " amplitudes, got " + std::to_string(amplitudes_.size()));
  }
  double norm_sq = 0.0;
  for (const auto& a : amplitudes_) norm_sq += std::norm(a);
  if (!(std::abs(norm_sq - 1.0) <= tol)) {
    throw InvalidStateError("BipartiteState: squared norm " + std::to_string(norm_sq) + " != 1");
  }
}

std::vector<Complex> SchmidtData::reconstruct() const {
  if (rank == 0) return {};
  const std::size_t d_s = signal_basis.front().size();
  const std::size_t d_i = idler_basis.front().size();
  std::vector<Complex> amps(d_s * d_i);
  for (std::size_t m = 0; m < rank; ++m) {
    for (std::size_t s = 0; s < d_s; ++s) {
      for (std::size_t i = 0; i < d_i; ++i) {
        amps[s * d_i + i] += coefficients[m] * signal_basis[m][s] * idler_basis[m][i];
      }
    }
  }
  return amps;
}

BipartiteState bell_state(std::size_t d) {
  if (d < 2) throw InvalidStateError("bell_state: d must be >= 2");
  std::vector<Complex> amps(d * d);
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t k = 0; k < d; ++k) amps[k * d + k] = a;
  return BipartiteState(d, d, std::move(amps));
}

namespace {

// (rho_I)_{ij} = sum_s psi_{s i} conj(psi_{s j})
ComplexMatrix idler_matrix(const BipartiteState& state) {
  const std::size_t d_s = state.d_s();
  const std::size_t d_i = state.d_i();
  ComplexMatrix out(d_i);
  for (std::size_t i = 0; i < d_i; ++i) {
    for (std::size_t j = 0; j < d_i; ++j) {
      Complex sum = 0.0;
      for (std::size_t s = 0; s < d_s; ++s) sum += state.amplitude(s, i) * std::conj(state.amplitude(s, j));
      out(i, j) = sum;
    }
  }
  return out;
}

ComplexMatrix signal_matrix(const BipartiteState& state) {
  const std::size_t d_s = state.d_s();
  const std::size_t d_i = state.d_i();
  ComplexMatrix out(d_s);
  for (std::size_t s = 0; s < d_s; ++s) {
    for (std::size_t t = 0; t < d_s; ++t) {
      Complex sum = 0.0;
      for (std::size_t i = 0; i < d_i; ++i) sum += state.amplitude(s, i) * std::conj(state.amplitude(t, i));
      out(s, t) = sum;
    }
  }
  return out;
}

}  // namespace

SchmidtData schmidt(const BipartiteState& state, double tol) {
  const std::size_t d_s = state.d_s();
  const std::size_t d_i = state.d_i();
  const auto decomposition = eigh(idler_matrix(state));

  SchmidtData out;
  // eigh is ascending; walk from the top.
  for (std::size_t k = d_i; k-- > 0;) {
    const double lambda = decomposition.eigenvalues[k];
    if (lambda < tol || out.rank == std::min(d_s, d_i)) break;
    const double coeff = std::sqrt(lambda);

    std::vector<Complex> idler(d_i);
    for (std::size_t i = 0; i < d_i; ++i) idler[i] = decomposition.eigenvectors(i, k);

    // |s_m> = <i_m|phi> / sqrt(lambda_m)
    std::vector<Complex> signal(d_s);
    for (std::size_t s = 0; s < d_s; ++s) {
      Complex sum = 0.0;
      for (std::size_t i = 0; i < d_i; ++i) sum += state.amplitude(s, i) * std::conj(idler[i]);
      signal[s] = sum / coeff;
    }

    const auto lead = std::find_if(signal.begin(), signal.end(),
                                   [](const Complex& c) { return std::abs(c) > 1e-12; });
    if (lead != signal.end()) {
      const double magnitude = std::abs(*lead);
      const Complex phase = *lead / magnitude;
      for (auto& c : signal) c /= phase;
      for (auto& c : idler) c *= phase;
      *lead = magnitude;
    }

    out.coefficients.push_back(coeff);
    out.signal_basis.push_back(std::move(signal));
    out.idler_basis.push_back(std::move(idler));
    ++out.rank;
  }
  return out;
}

DensityMatrix idler_reduction(const BipartiteState& state) {
  return DensityMatrix(idler_matrix(state));
}

DensityMatrix signal_reduction(const BipartiteState& state) {
  return DensityMatrix(signal_matrix(state));
}

double effective_rank_k(const DensityMatrix& rho) { return 1.0 / rho.purity(); }

BipartiteState schmidt_family_state(std::size_t d_s, std::span<const double> spectrum, double tol) {
  if (spectrum.empty() || spectrum.size() > d_s) {
    throw InvalidStateError("schmidt_family_state: spectrum length must be in [1, d_s]");
  }
  double total = 0.0;
  for (double lambda : spectrum) {
    if (!(lambda >= 0.0)) throw InvalidStateError("schmidt_family_state: negative weight");
    total += lambda;
  }
  if (!(std::abs(total - 1.0) <= tol)) {
    throw InvalidStateError("schmidt_family_state: weights sum to " + std::to_string(total));
  }
  const std::size_t d_i = spectrum.size();
  std::vector<Complex> amps(d_s * d_i);
  for (std::size_t m = 0; m < d_i; ++m) amps[m * d_i + m] = std::sqrt(spectrum[m]);
  return BipartiteState(d_s, d_i, std::move(amps), tol);
}

BipartiteState haar_random_state(std::size_t d_s, std::size_t d_i, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return haar_random_state(d_s, d_i, gen);
}

}  // namespace qillum
