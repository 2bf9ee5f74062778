#include "qillum/analysis.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace qillum {

// ---------------------------------------------------------------------------
// Families and sweeps

StateFamily StateFamily::bell() { return StateFamily(Kind::Bell, 0, {}); }

StateFamily StateFamily::uniform_rank(std::size_t rank) {
  if (rank < 1) throw AnalysisError("uniform-rank family needs rank >= 1");
  return StateFamily(Kind::UniformRank, rank, {});
}

StateFamily StateFamily::spectrum(std::vector<double> weights) {
  if (weights.empty()) throw AnalysisError("spectrum family needs at least one weight");
  return StateFamily(Kind::Spectrum, weights.size(), std::move(weights));
}

BipartiteState StateFamily::make(std::size_t d_s) const {
  switch (kind_) {
    case Kind::Bell:
      if (d_s < 2) throw AnalysisError("bell family needs d >= 2");
      return bell_state(d_s);
    case Kind::UniformRank: {
      if (rank_ > d_s) {
        throw AnalysisError("uniform-rank:" + std::to_string(rank_) + " exceeds d_s = " +
                            std::to_string(d_s));
      }
      const std::vector<double> weights(rank_, 1.0 / static_cast<double>(rank_));
      return schmidt_family_state(d_s, weights);
    }
    case Kind::Spectrum:
      if (weights_.size() > d_s) {
        throw AnalysisError("spectrum of length " + std::to_string(weights_.size()) +
                            " exceeds d_s = " + std::to_string(d_s));
      }
      try {
        return schmidt_family_state(d_s, weights_);
      } catch (const InvalidStateError& e) {
        throw AnalysisError(e.what());
      }
  }
  throw AnalysisError("unknown family");
}

std::string StateFamily::label() const {
  switch (kind_) {
    case Kind::Bell:
      return "bell";
    case Kind::UniformRank:
      return "uniform-rank:" + std::to_string(rank_);
    case Kind::Spectrum: {
      std::ostringstream out;
      out.precision(12);
      out << "spectrum:";
      for (std::size_t k = 0; k < weights_.size(); ++k) out << (k ? "," : "") << weights_[k];
      return out.str();
    }
  }
  return "unknown";
}

SweepRecord evaluate_point(const BipartiteState& input, double eta, double p0,
                           std::string family) {
  const auto scenario = IlluminationScenario::post_selected(input, eta);
  const auto rho0 = returned_state_post_selected(scenario);
  const auto rho1 = remaining_state_post_selected(scenario);
  const auto baseline = ci_baseline(scenario);
  const auto ci_rho0 = returned_state_post_selected(baseline);
  const auto ci_rho1 = remaining_state_post_selected(baseline);

  SweepRecord rec;
  rec.eta = eta;
  rec.d_s = input.d_s();
  rec.d_i = input.d_i();
  rec.k_i = effective_rank_k(idler_reduction(input));
  rec.h01_closed = h01_closed_form(eta, rec.d_s, rec.k_i);
  rec.h01_direct = hs_distinguishability(rho0, rho1);
  rec.p_err = helstrom_error(DiscriminationProblem(rho0, rho1, p0));
  rec.p_err_ci = helstrom_error(DiscriminationProblem(ci_rho0, ci_rho1, p0));
  rec.advantage = hs_distinguishability(ci_rho0, ci_rho1) - rec.h01_direct;
  rec.family = std::move(family);

  if (!(std::abs(rec.h01_closed - rec.h01_direct) < kH01Agreement)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "H01 routes disagree at eta=" << eta << ", d_s=" << rec.d_s << ", d_i=" << rec.d_i
        << ": closed " << rec.h01_closed << " vs direct " << rec.h01_direct;
    throw NumericalCheckError(msg.str());
  }
  return rec;
}

std::vector<SweepRecord> run_sweep(const SweepGrid& grid) {
  if (grid.etas.empty() || grid.dims.empty() || grid.families.empty()) {
    throw AnalysisError("sweep grid has an empty axis");
  }
  for (double eta : grid.etas) {
    if (!(eta >= 0.0 && eta <= 1.0)) throw AnalysisError("eta outside [0, 1]: " + std::to_string(eta));
  }
  for (std::size_t d : grid.dims) {
    if (d < 2) throw AnalysisError("signal dimension must be >= 2, got " + std::to_string(d));
  }
  if (!(grid.p0 >= 0.0 && grid.p0 <= 1.0)) throw AnalysisError("prior p0 outside [0, 1]");

  // Build every input up front so an infeasible entry fails before any work.
  std::vector<BipartiteState> inputs;
  inputs.reserve(grid.dims.size() * grid.families.size());
  for (std::size_t d : grid.dims) {
    for (const auto& family : grid.families) inputs.push_back(family.make(d));
  }

  std::vector<SweepRecord> records;
  records.reserve(grid.etas.size() * inputs.size());
  for (double eta : grid.etas) {
    std::size_t slot = 0;
    for (std::size_t di = 0; di < grid.dims.size(); ++di) {
      for (const auto& family : grid.families) {
        records.push_back(evaluate_point(inputs[slot++], eta, grid.p0, family.label()));
      }
    }
  }
  return records;
}

// ---------------------------------------------------------------------------
// Monotonicity

namespace {

constexpr double kRankResolution = 1e-9;

long long rank_key(double k) { return std::llround(k / kRankResolution); }

}  // namespace

MonotonicityReport verify_monotonicity(std::span<const SweepRecord> records, double slack) {
  std::set<double> all_etas;
  std::map<std::tuple<std::size_t, std::size_t, long long, std::string>, std::set<double>> configs;
  for (const auto& r : records) {
    all_etas.insert(r.eta);
    configs[{r.d_s, r.d_i, rank_key(r.k_i), r.family}].insert(r.eta);
  }
  for (const auto& [key, etas] : configs) {
    if (etas != all_etas) {
      throw AnalysisError("incomplete grid: configuration d_s=" + std::to_string(std::get<0>(key)) +
                          ", family=" + std::get<3>(key) + " is missing eta values");
    }
  }

  MonotonicityReport report;
  for (std::size_t a = 0; a < records.size(); ++a) {
    for (std::size_t b = 0; b < records.size(); ++b) {
      const auto& lo = records[a];
      const auto& hi = records[b];
      const bool eta_up = hi.eta > lo.eta;
      const bool ds_up = hi.d_s > lo.d_s;
      const bool k_up = hi.k_i > lo.k_i + kRankResolution;
      const bool dominates = hi.eta >= lo.eta && hi.d_s >= lo.d_s &&
                             hi.k_i >= lo.k_i - kRankResolution && (eta_up || ds_up || k_up);
      if (!dominates) continue;
      ++report.comparisons;

      std::string axis;
      auto add_axis = [&](bool up, const char* name) {
        if (!up) return;
        if (!axis.empty()) axis += '+';
        axis += name;
      };
      add_axis(eta_up, "eta");
      add_axis(ds_up, "d_s");
      add_axis(k_up, "k_i");

      // dH01 is nonzero in every direction once eta > 0 (d_s k_i > 1 always).
      const bool strict = hi.eta > 0.0;
      auto check = [&](const char* metric, double before, double after) {
        const bool bad = strict ? !(after < before) : after > before + slack;
        if (bad) report.violations.push_back({axis, metric, a, b, before, after});
      };
      check("h01", lo.h01_direct, hi.h01_direct);
      check("p_err", lo.p_err, hi.p_err);
      if (hi.h01_direct < lo.h01_direct - slack && hi.p_err > lo.p_err + slack) {
        report.violations.push_back({axis, "order", a, b, lo.p_err, hi.p_err});
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Optimality of the maximally entangled input

BipartiteState maximally_entangled_state(std::size_t d_s, std::size_t d_i) {
  const std::size_t r = std::min(d_s, d_i);
  std::vector<Complex> amps(d_s * d_i);
  const double a = 1.0 / std::sqrt(static_cast<double>(r));
  for (std::size_t k = 0; k < r; ++k) amps[k * d_i + k] = a;
  return BipartiteState(d_s, d_i, std::move(amps));
}

namespace {

struct PointValues {
  double h01;
  double p_err;
};

PointValues evaluate_values(const BipartiteState& input, double eta, double p0) {
  const auto scenario = IlluminationScenario::post_selected(input, eta);
  const auto rho0 = returned_state_post_selected(scenario);
  const auto rho1 = remaining_state_post_selected(scenario);
  return {hs_distinguishability(rho0, rho1), helstrom_error(DiscriminationProblem(rho0, rho1, p0))};
}

}  // namespace

OptimalityReport compare_with_bell(std::size_t d_s, std::size_t d_i,
                                   std::span<const BipartiteState> samples, double eta,
                                   double p0) {
  if (samples.empty()) throw AnalysisError("optimality check needs at least one sample");
  OptimalityReport report;
  report.d_s = d_s;
  report.d_i = d_i;
  report.samples = samples.size();
  report.eta = eta;
  report.p0 = p0;

  const auto reference = evaluate_values(maximally_entangled_state(d_s, d_i), eta, p0);
  report.bell_h01 = reference.h01;
  report.bell_p_err = reference.p_err;
  report.bell_h01_closed =
      h01_closed_form(eta, d_s, static_cast<double>(std::min(d_s, d_i)));

  report.best_sampled_h01 = std::numeric_limits<double>::infinity();
  report.best_sampled_p_err = std::numeric_limits<double>::infinity();
  for (const auto& sample : samples) {
    if (sample.d_s() != d_s || sample.d_i() != d_i) {
      throw AnalysisError("sample dimensions differ from the reference");
    }
    const auto values = evaluate_values(sample, eta, p0);
    report.best_sampled_h01 = std::min(report.best_sampled_h01, values.h01);
    report.best_sampled_p_err = std::min(report.best_sampled_p_err, values.p_err);
  }
  report.margin_h01 = report.best_sampled_h01 - report.bell_h01;
  report.margin_p_err = report.best_sampled_p_err - report.bell_p_err;
  return report;
}

OptimalityReport verify_bell_optimality(std::size_t d_s, std::size_t d_i, std::size_t n_samples,
                                        std::uint64_t seed, double eta, double p0) {
  if (n_samples < 1) throw AnalysisError("n_samples must be >= 1");
  std::mt19937_64 gen(seed);
  std::vector<BipartiteState> samples;
  samples.reserve(n_samples);
  for (std::size_t k = 0; k < n_samples; ++k) samples.push_back(haar_random_state(d_s, d_i, gen));
  auto report = compare_with_bell(d_s, d_i, samples, eta, p0);
  report.seed = seed;
  return report;
}

// ---------------------------------------------------------------------------
// Spectrum dependence

namespace {

double effective_rank(std::span<const double> w) {
  double purity = 0.0;
  for (double x : w) purity += x * x;
  return 1.0 / purity;
}

std::vector<double> mix(std::span<const double> from, std::span<const double> to, double t) {
  std::vector<double> out(from.size());
  for (std::size_t k = 0; k < from.size(); ++k) out[k] = (1.0 - t) * from[k] + t * to[k];
  return out;
}

// Finds t in [0, 1] with K(mix(from, to, t)) == k, assuming K(from) and
// K(to) bracket k.
std::vector<double> bisect_to_rank(std::span<const double> from, std::span<const double> to,
                                   double k) {
  const double f0 = effective_rank(from) - k;
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f = effective_rank(mix(from, to, mid)) - k;
    if ((f < 0.0) == (f0 < 0.0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mix(from, to, 0.5 * (lo + hi));
}

std::vector<double> uniform_on(std::size_t r, std::size_t length) {
  std::vector<double> w(length, 0.0);
  for (std::size_t k = 0; k < r; ++k) w[k] = 1.0 / static_cast<double>(r);
  return w;
}

void require_rank_target(std::size_t d_s, double k) {
  if (d_s < 2) throw AnalysisError("d_s must be >= 2");
  if (!(k >= 1.0 && k <= static_cast<double>(d_s))) {
    throw AnalysisError("k_target must lie in [1, d_s]");
  }
}

constexpr double kEndpointTolerance = 1e-12;

}  // namespace

std::vector<double> interpolated_spectrum(std::size_t d_s, double k) {
  require_rank_target(d_s, k);
  const double top = static_cast<double>(d_s);
  if (k >= top - kEndpointTolerance) return uniform_on(d_s, d_s);
  const auto r = static_cast<std::size_t>(std::floor(k));
  if (k - static_cast<double>(r) <= kEndpointTolerance) return uniform_on(r, d_s);
  return bisect_to_rank(uniform_on(r, d_s), uniform_on(r + 1, d_s), k);
}

double helstrom_spread(std::size_t d_s, double eta, std::span<const std::vector<double>> spectra,
                       double p0, std::vector<double>* errors) {
  if (spectra.empty()) throw AnalysisError("no spectra to compare");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& w : spectra) {
    const double p = evaluate_values(schmidt_family_state(d_s, w), eta, p0).p_err;
    if (errors) errors->push_back(p);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return hi - lo;
}

SpectrumProbeReport spectrum_dependence_probe(std::size_t d_s, double eta, double k_target,
                                              std::size_t n_spectra, std::uint64_t seed,
                                              double p0) {
  require_rank_target(d_s, k_target);
  if (n_spectra < 1) throw AnalysisError("n_spectra must be >= 1");

  SpectrumProbeReport report;
  report.d_s = d_s;
  report.eta = eta;
  report.k_target = k_target;
  report.seed = seed;
  report.spectra.push_back(interpolated_spectrum(d_s, k_target));

  std::mt19937_64 gen(seed);
  std::gamma_distribution<double> gamma(1.0, 1.0);
  const auto uniform = uniform_on(d_s, d_s);
  while (report.spectra.size() < n_spectra) {
    // Flat Dirichlet draw.
    std::vector<double> w(d_s);
    double total = 0.0;
    for (auto& x : w) total += (x = gamma(gen));
    for (auto& x : w) x /= total;

    const std::size_t peak = static_cast<std::size_t>(std::max_element(w.begin(), w.end()) - w.begin());
    if (k_target >= static_cast<double>(d_s) - kEndpointTolerance) {
      report.spectra.push_back(uniform);
      continue;
    }
    std::vector<double> spike(d_s, 0.0);
    spike[peak] = 1.0;
    if (k_target <= 1.0 + kEndpointTolerance) {
      report.spectra.push_back(std::move(spike));
      continue;
    }
    // K rises monotonically towards the uniform spectrum; towards the spike
    // it falls to 1. Either way the endpoints bracket the target.
    if (effective_rank(w) < k_target) {
      report.spectra.push_back(bisect_to_rank(w, uniform, k_target));
    } else {
      report.spectra.push_back(bisect_to_rank(w, spike, k_target));
    }
  }

  report.spread = helstrom_spread(d_s, eta, report.spectra, p0, &report.p_errors);
  return report;
}

}  // namespace qillum
