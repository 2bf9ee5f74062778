#include "qillum/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

namespace qillum {
namespace {

double purity_of(const std::vector<double>& w) {
  return std::inner_product(w.begin(), w.end(), w.begin(), 0.0);
}

TEST(StateFamily, Labels) {
  EXPECT_EQ(StateFamily::bell().label(), "bell");
  EXPECT_EQ(StateFamily::uniform_rank(3).label(), "uniform-rank:3");
  EXPECT_EQ(StateFamily::spectrum({0.5, 0.5}).label(), "spectrum:0.5,0.5");
}

TEST(StateFamily, InfeasibleEntries) {
  EXPECT_THROW(StateFamily::uniform_rank(0), AnalysisError);
  EXPECT_THROW(StateFamily::uniform_rank(4).make(3), AnalysisError);
  EXPECT_THROW(StateFamily::spectrum({0.5, 0.3}).make(3), AnalysisError);
  EXPECT_THROW(StateFamily::spectrum({0.25, 0.25, 0.25, 0.25}).make(3), AnalysisError);
}

TEST(RunSweep, SinglePointAtZeroSignal) {
  const auto records = run_sweep({{0.0}, {3}, {StateFamily::bell()}});
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].h01_closed, 1.0);
  EXPECT_NEAR(records[0].h01_direct, 1.0, 1e-12);
  EXPECT_NEAR(records[0].p_err, 0.5, 1e-12);
  EXPECT_NEAR(records[0].advantage, 0.0, 1e-12);
}

TEST(RunSweep, BellTwoAtFullSignal) {
  const auto records = run_sweep({{1.0}, {2}, {StateFamily::bell()}});
  ASSERT_EQ(records.size(), 1u);
  EXPECT_NEAR(records[0].h01_closed, 0.5, 1e-15);
  // (Phi - 1/4)/2 has eigenvalues 3/8 and -1/8 (x3): ||.||_1 = 3/4.
  EXPECT_NEAR(records[0].p_err, 0.5 * (1.0 - 0.75), 1e-12);
  // CI: (|s0><s0| - 1/2 (x) |0><0|)/2 has eigenvalues +-1/4: ||.||_1 = 1/2.
  EXPECT_NEAR(records[0].p_err_ci, 0.25, 1e-12);
  EXPECT_NEAR(records[0].k_i, 2.0, 1e-12);
}

TEST(RunSweep, BellTwoDecreasesAlongEta) {
  const auto records = run_sweep({{0.0, 0.25, 0.5, 0.75, 1.0}, {2}, {StateFamily::bell()}});
  ASSERT_EQ(records.size(), 5u);
  for (std::size_t k = 1; k < records.size(); ++k) {
    EXPECT_LT(records[k].h01_closed, records[k - 1].h01_closed);
    const double eta = records[k].eta;
    EXPECT_NEAR(records[k].h01_closed, 1.0 / std::sqrt(1.0 + 3.0 * eta * eta), 1e-15);
  }
}

TEST(RunSweep, LexicographicOrdering) {
  const auto records = run_sweep({{0.2, 0.4}, {2, 3}, {StateFamily::bell(), StateFamily::uniform_rank(1)}});
  ASSERT_EQ(records.size(), 8u);
  const std::vector<std::tuple<double, std::size_t, std::string>> expected = {
      {0.2, 2, "bell"}, {0.2, 2, "uniform-rank:1"}, {0.2, 3, "bell"}, {0.2, 3, "uniform-rank:1"},
      {0.4, 2, "bell"}, {0.4, 2, "uniform-rank:1"}, {0.4, 3, "bell"}, {0.4, 3, "uniform-rank:1"}};
  for (std::size_t k = 0; k < records.size(); ++k) {
    EXPECT_EQ(records[k].eta, std::get<0>(expected[k]));
    EXPECT_EQ(records[k].d_s, std::get<1>(expected[k]));
    EXPECT_EQ(records[k].family, std::get<2>(expected[k]));
  }
}

TEST(RunSweep, InvalidGrids) {
  EXPECT_THROW(run_sweep({{}, {2}, {StateFamily::bell()}}), AnalysisError);
  EXPECT_THROW(run_sweep({{1.2}, {2}, {StateFamily::bell()}}), AnalysisError);
  EXPECT_THROW(run_sweep({{0.5}, {1}, {StateFamily::bell()}}), AnalysisError);
  EXPECT_THROW(run_sweep({{0.5}, {2}, {StateFamily::uniform_rank(3)}}), AnalysisError);
  EXPECT_THROW(run_sweep({{0.5}, {2}, {StateFamily::bell()}, 1.5}), AnalysisError);
}

TEST(RunSweep, ClosedAndDirectAgree) {
  const auto records =
      run_sweep({{0.0, 0.3, 0.6, 0.9}, {3, 4}, {StateFamily::spectrum({0.6, 0.3, 0.1}), StateFamily::bell()}});
  for (const auto& r : records) EXPECT_LT(std::abs(r.h01_closed - r.h01_direct), 1e-9);
}

TEST(VerifyMonotonicity, EtaAxisAtUnitRank) {
  std::vector<double> etas;
  for (int k = 0; k <= 10; ++k) etas.push_back(0.1 * k);
  const auto records = run_sweep({etas, {2}, {StateFamily::uniform_rank(1)}});
  for (std::size_t k = 1; k < records.size(); ++k) {
    EXPECT_LT(records[k].h01_direct, records[k - 1].h01_direct);
    EXPECT_NEAR(records[k].h01_closed, 1.0 / std::sqrt(1.0 + records[k].eta * records[k].eta), 1e-15);
  }
  const auto report = verify_monotonicity(records);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.comparisons, 11u * 10u / 2u);
}

TEST(VerifyMonotonicity, ZeroSignalIsConstantAcrossDimensions) {
  const auto records = run_sweep({{0.0}, {2, 3, 4}, {StateFamily::uniform_rank(1), StateFamily::uniform_rank(2)}});
  for (const auto& r : records) EXPECT_NEAR(r.h01_direct, 1.0, 1e-12);
  EXPECT_TRUE(verify_monotonicity(records).ok());
}

TEST(VerifyMonotonicity, BellFamilyDecreasesWithDimension) {
  const auto records = run_sweep({{0.5}, {2, 3, 4, 5}, {StateFamily::bell()}});
  for (std::size_t k = 1; k < records.size(); ++k) {
    EXPECT_LT(records[k].h01_direct, records[k - 1].h01_direct);
    EXPECT_LT(records[k].p_err, records[k - 1].p_err);
  }
  const auto report = verify_monotonicity(records);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.comparisons, 6u);
}

TEST(VerifyMonotonicity, UniformRankFamilyAlongK) {
  std::vector<StateFamily> families;
  for (std::size_t r = 1; r <= 4; ++r) families.push_back(StateFamily::uniform_rank(r));
  const auto records = run_sweep({{0.7}, {4}, families});
  for (std::size_t k = 1; k < records.size(); ++k) {
    EXPECT_NEAR(records[k].k_i, static_cast<double>(k + 1), 1e-12);
    EXPECT_LT(records[k].h01_direct, records[k - 1].h01_direct);
  }
  EXPECT_TRUE(verify_monotonicity(records).ok());
}

TEST(VerifyMonotonicity, DetectsViolations) {
  auto records = run_sweep({{0.2, 0.8}, {2}, {StateFamily::bell()}});
  std::swap(records[0].p_err, records[1].p_err);
  const auto report = verify_monotonicity(records);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations[0].axis, "eta");
  const bool saw_p_err = std::any_of(report.violations.begin(), report.violations.end(),
                                     [](const auto& v) { return v.metric == "p_err"; });
  const bool saw_order = std::any_of(report.violations.begin(), report.violations.end(),
                                     [](const auto& v) { return v.metric == "order"; });
  EXPECT_TRUE(saw_p_err);
  EXPECT_TRUE(saw_order);
}

TEST(VerifyMonotonicity, FlatButNotStrictIsAViolation) {
  auto records = run_sweep({{0.2, 0.8}, {2}, {StateFamily::bell()}});
  records[1].h01_direct = records[0].h01_direct;
  const auto report = verify_monotonicity(records);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].metric, "h01");
}

TEST(VerifyMonotonicity, IncompleteGrid) {
  auto records = run_sweep({{0.2, 0.8}, {2, 3}, {StateFamily::bell()}});
  records.pop_back();
  EXPECT_THROW(verify_monotonicity(records), AnalysisError);
}

TEST(BellOptimality, TwoByTwoSampling) {
  const auto report = verify_bell_optimality(2, 2, 1000, 7, 0.5);
  EXPECT_EQ(report.samples, 1000u);
  EXPECT_GE(report.margin_h01, -1e-9);
  EXPECT_GE(report.margin_p_err, -1e-9);
  EXPECT_NEAR(report.bell_h01, report.bell_h01_closed, 1e-9);
}

TEST(BellOptimality, SelfComparisonHasZeroMargin) {
  const std::vector<BipartiteState> samples = {bell_state(3)};
  const auto report = compare_with_bell(3, 3, samples, 0.6);
  EXPECT_EQ(report.margin_h01, 0.0);
  EXPECT_EQ(report.margin_p_err, 0.0);
  EXPECT_EQ(report.margin(), 0.0);
}

TEST(BellOptimality, RankCappedBySmallerFactor) {
  for (double eta : {0.3, 0.8}) {
    const auto report = verify_bell_optimality(2, 4, 500, 11, eta);
    EXPECT_GE(report.best_sampled_h01, h01_closed_form(eta, 2, 2.0) - 1e-9);
    EXPECT_NEAR(report.bell_h01, h01_closed_form(eta, 2, 2.0), 1e-12);
    EXPECT_GE(report.margin(), -1e-9);
  }
}

TEST(BellOptimality, DeterministicForSeed) {
  const auto a = verify_bell_optimality(3, 3, 200, 42, 0.5);
  const auto b = verify_bell_optimality(3, 3, 200, 42, 0.5);
  EXPECT_EQ(a.best_sampled_h01, b.best_sampled_h01);
  EXPECT_EQ(a.best_sampled_p_err, b.best_sampled_p_err);
  EXPECT_THROW(verify_bell_optimality(2, 2, 0, 1), AnalysisError);
}

TEST(BellOptimality, BellRealizesFullIdlerRank) {
  for (std::size_t d = 2; d <= 6; ++d) {
    EXPECT_NEAR(effective_rank_k(idler_reduction(bell_state(d))), static_cast<double>(d), 1e-10);
  }
}

TEST(InterpolatedSpectrum, HitsTargetRank) {
  for (double k : {1.0, 1.3, 2.0, 2.5, 3.99, 4.0}) {
    const auto w = interpolated_spectrum(4, k);
    ASSERT_EQ(w.size(), 4u);
    EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-14);
    EXPECT_NEAR(1.0 / purity_of(w), k, 1e-9);
  }
  EXPECT_THROW(interpolated_spectrum(4, 0.5), AnalysisError);
  EXPECT_THROW(interpolated_spectrum(4, 4.5), AnalysisError);
}

TEST(SpectrumProbe, UniqueMaximizerHasNoSpread) {
  const auto report = spectrum_dependence_probe(3, 0.6, 3.0, 10, 1);
  EXPECT_EQ(report.spectra.size(), 10u);
  EXPECT_LT(report.spread, 1e-12);
}

TEST(SpectrumProbe, UniqueMinimizerHasNoSpread) {
  const auto report = spectrum_dependence_probe(4, 0.6, 1.0, 10, 2);
  for (const auto& w : report.spectra) EXPECT_NEAR(1.0 / purity_of(w), 1.0, 1e-12);
  EXPECT_LT(report.spread, 1e-12);
}

TEST(SpectrumProbe, SpreadIsPermutationInvariant) {
  const auto report = spectrum_dependence_probe(4, 0.5, 2.0, 20, 3);
  ASSERT_EQ(report.spectra.size(), 20u);
  ASSERT_EQ(report.p_errors.size(), 20u);
  for (const auto& w : report.spectra) {
    EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-12);
    EXPECT_NEAR(1.0 / purity_of(w), 2.0, 1e-9);
  }
  std::mt19937_64 gen(9);
  auto permuted = report.spectra;
  for (auto& w : permuted) std::shuffle(w.begin(), w.end(), gen);
  EXPECT_NEAR(helstrom_spread(4, 0.5, permuted), report.spread, 1e-10);
  EXPECT_GE(report.spread, 0.0);
}

TEST(SpectrumProbe, InfeasibleTarget) {
  EXPECT_THROW(spectrum_dependence_probe(3, 0.5, 3.5, 5, 0), AnalysisError);
  EXPECT_THROW(spectrum_dependence_probe(3, 0.5, 0.9, 5, 0), AnalysisError);
  EXPECT_THROW(spectrum_dependence_probe(3, 0.5, 2.0, 0, 0), AnalysisError);
}

}  // namespace
}  // namespace qillum
