#include "qillum/discrimination.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace qillum {
namespace {

DensityMatrix pure(std::vector<Complex> psi) { return DensityMatrix(ComplexMatrix::projector(psi)); }

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

DensityMatrix ket0() { return pure({1.0, 0.0}); }
DensityMatrix ket1() { return pure({0.0, 1.0}); }
DensityMatrix ket_plus() { return pure({kInvSqrt2, kInvSqrt2}); }

Povm computational_povm() {
  const double p0[] = {1.0, 0.0};
  const double p1[] = {0.0, 1.0};
  return Povm({ComplexMatrix::diagonal(p0), ComplexMatrix::diagonal(p1)});
}

TEST(Povm, Validation) {
  EXPECT_NO_THROW(computational_povm());
  EXPECT_THROW(Povm({}), InvalidPovmError);
  EXPECT_THROW(Povm({ComplexMatrix::identity(2), ComplexMatrix::identity(2)}), InvalidPovmError);
  const double neg[] = {1.5, -0.5};
  const double comp[] = {-0.5, 1.5};
  EXPECT_THROW(Povm({ComplexMatrix::diagonal(neg), ComplexMatrix::diagonal(comp)}), InvalidPovmError);
  EXPECT_THROW(Povm({ComplexMatrix::identity(2), ComplexMatrix(3)}), DimensionError);
}

TEST(DiscriminationProblem, Validation) {
  EXPECT_THROW(DiscriminationProblem(ket0(), DensityMatrix(ComplexMatrix::identity(3) * Complex(1.0 / 3)), 0.5),
               DimensionError);
  EXPECT_THROW(DiscriminationProblem(ket0(), ket1(), 1.5), std::invalid_argument);
}

TEST(PovmError, AlwaysGuessZero) {
  const DiscriminationProblem problem(ket0(), ket_plus(), 0.3);
  const Povm guess_zero({ComplexMatrix::identity(2), ComplexMatrix(2)});
  EXPECT_NEAR(povm_error(problem, guess_zero), 0.7, 1e-15);
}

TEST(PovmError, OrthogonalStatesPerfectlyDiscriminated) {
  EXPECT_EQ(povm_error(DiscriminationProblem(ket0(), ket1()), computational_povm()), 0.0);
}

TEST(PovmError, ZeroVersusPlusComputationalBasis) {
  // 1/2 Tr[|0><0| Pi_1] + 1/2 Tr[|+><+| Pi_0] = 0 + 1/4
  EXPECT_NEAR(povm_error(DiscriminationProblem(ket0(), ket_plus()), computational_povm()), 0.25, 1e-15);
}

TEST(PovmError, RejectsNonBinaryAndMismatched) {
  const DiscriminationProblem problem(ket0(), ket1());
  const Povm three({ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0}),
                    ComplexMatrix::diagonal(std::vector<double>{0.0, 0.5}),
                    ComplexMatrix::diagonal(std::vector<double>{0.0, 0.5})});
  EXPECT_THROW(povm_error(problem, three), InvalidPovmError);
  EXPECT_THROW(povm_error(problem, Povm({ComplexMatrix::identity(3), ComplexMatrix(3)})), DimensionError);
}

TEST(Helstrom, IdenticalStates) {
  const DensityMatrix rho(ComplexMatrix::identity(2) * Complex(0.5));
  EXPECT_NEAR(helstrom_error(DiscriminationProblem(rho, rho, 0.3)), 0.3, 1e-15);
}

TEST(Helstrom, OrthogonalStates) {
  EXPECT_EQ(helstrom_error(DiscriminationProblem(ket0(), ket1())), 0.0);
}

TEST(Helstrom, ZeroVersusPlus) {
  EXPECT_NEAR(helstrom_error(DiscriminationProblem(ket0(), ket_plus())), (1.0 - kInvSqrt2) / 2.0, 1e-14);
  EXPECT_NEAR(helstrom_error(DiscriminationProblem(ket0(), ket_plus())), 0.146447, 1e-6);
}

TEST(OptimalPovm, OrthogonalStates) {
  const auto povm = optimal_povm(DiscriminationProblem(ket0(), ket1()));
  EXPECT_LT(povm[0].max_abs_diff(ket0().matrix()), 1e-15);
  EXPECT_LT(povm[1].max_abs_diff(ket1().matrix()), 1e-15);
}

TEST(OptimalPovm, IdenticalStatesFavorLargerPrior) {
  std::mt19937_64 gen(1);
  const DensityMatrix rho(testing::random_density(3, gen));
  const auto povm = optimal_povm(DiscriminationProblem(rho, rho, 0.7));
  EXPECT_LT(povm[0].max_abs_diff(ComplexMatrix::identity(3)), 1e-12);
}

TEST(OptimalPovm, AttainsHelstromOnRandomQutrits) {
  std::mt19937_64 gen(2);
  for (int trial = 0; trial < 50; ++trial) {
    const DiscriminationProblem problem(DensityMatrix(testing::random_density(3, gen)),
                                        DensityMatrix(testing::random_density(3, gen)),
                                        0.2 + 0.6 * (trial % 7) / 6.0);
    EXPECT_LT(std::abs(povm_error(problem, optimal_povm(problem)) - helstrom_error(problem)), 1e-10);
  }
}

TEST(Helstrom, LowerBoundsRandomPovms) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = 2 + trial % 5;
    const DiscriminationProblem problem(DensityMatrix(testing::random_density(dim, gen)),
                                        DensityMatrix(testing::random_density(dim, gen)), 0.5);
    const double bound = helstrom_error(problem);
    for (int k = 0; k < 20; ++k) {
      const Povm projective(testing::random_projective_povm(dim, gen));
      const Povm general(testing::random_general_povm(dim, gen));
      EXPECT_LE(bound, povm_error(problem, projective) + 1e-10);
      EXPECT_LE(bound, povm_error(problem, general) + 1e-10);
    }
  }
}

TEST(HsDistinguishability, Examples) {
  EXPECT_NEAR(hs_distinguishability(ket_plus(), ket_plus()), 1.0, 1e-15);
  EXPECT_EQ(hs_distinguishability(ket0(), ket1()), 0.0);
  const DensityMatrix mixed(ComplexMatrix::identity(2) * Complex(0.5));
  EXPECT_NEAR(hs_distinguishability(ket0(), mixed), kInvSqrt2, 1e-15);
  EXPECT_THROW(hs_distinguishability(ket0(), DensityMatrix(ComplexMatrix::identity(3) * Complex(1.0 / 3))),
               DimensionError);
}

TEST(HsDistinguishability, SymmetricAndUnitarilyInvariant) {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t dim = 2 + trial % 6;
    const DensityMatrix rho(testing::random_density(dim, gen));
    const DensityMatrix sigma(testing::random_density(dim, gen));
    const auto u = testing::random_unitary(dim, gen);
    const double h = hs_distinguishability(rho, sigma);
    EXPECT_GE(h, 0.0);
    EXPECT_LE(h, 1.0);
    EXPECT_NEAR(h, hs_distinguishability(sigma, rho), 1e-15);
    const DensityMatrix rho_u(u * rho.matrix() * u.adjoint());
    const DensityMatrix sigma_u(u * sigma.matrix() * u.adjoint());
    EXPECT_NEAR(hs_distinguishability(rho_u, sigma_u), h, 1e-10);
  }
}

TEST(HsDistinguishability, PureStatesReduceToOverlap) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto psi = testing::random_unit_vector(4, gen);
    const auto phi = testing::random_unit_vector(4, gen);
    Complex overlap = 0.0;
    for (std::size_t k = 0; k < 4; ++k) overlap += std::conj(psi[k]) * phi[k];
    EXPECT_NEAR(hs_distinguishability(pure(psi), pure(phi)), std::norm(overlap), 1e-12);
  }
}

TEST(H01ClosedForm, Examples) {
  for (std::size_t d_s : {2u, 3u, 7u}) {
    for (double k : {1.0, 1.5, 3.0}) EXPECT_EQ(h01_closed_form(0.0, d_s, k), 1.0);
  }
  EXPECT_NEAR(h01_closed_form(1.0, 2, 2.0), 0.5, 1e-15);
  EXPECT_NEAR(h01_closed_form(1.0, 2, 1.0), kInvSqrt2, 1e-15);
}

TEST(H01ClosedForm, MatchesDirectEvaluation) {
  // Bell d = 2 and a product input at full signal, evaluated on the matrices.
  EXPECT_NEAR(h01_direct(IlluminationScenario::post_selected(bell_state(2), 1.0)), 0.5, 1e-12);
  std::vector<Complex> product(4);
  product[0] = 1.0;
  EXPECT_NEAR(h01_direct(IlluminationScenario::post_selected(BipartiteState(2, 2, product), 1.0)),
              kInvSqrt2, 1e-12);
}

TEST(H01ClosedForm, RejectsOutOfRange) {
  EXPECT_THROW(h01_closed_form(1.1, 2, 1.0), std::invalid_argument);
  EXPECT_THROW(h01_closed_form(-0.1, 2, 1.0), std::invalid_argument);
  EXPECT_THROW(h01_closed_form(0.5, 1, 1.0), std::invalid_argument);
  EXPECT_THROW(h01_closed_form(0.5, 2, 0.5), std::invalid_argument);
  EXPECT_THROW(h01_closed_form(0.5, 2, std::nan("")), std::invalid_argument);
}

TEST(H01ClosedForm, MonotoneOnGrid) {
  for (int e = 1; e <= 10; ++e) {
    const double eta = 0.1 * e;
    for (std::size_t d_s = 2; d_s <= 6; ++d_s) {
      for (double k = 1.0; k <= 6.0; k += 0.5) {
        const double h = h01_closed_form(eta, d_s, k);
        EXPECT_LT(h, h01_closed_form(eta - 0.1, d_s, k));
        EXPECT_LT(h01_closed_form(eta, d_s + 1, k), h);
        EXPECT_LT(h01_closed_form(eta, d_s, k + 0.25), h);
      }
    }
  }
}

TEST(H01ClosedForm, AgreesWithMatricesForRandomInputs) {
  std::mt19937_64 gen(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto psi = haar_random_state(2 + trial % 4, 1 + (trial / 4) % 5, gen);
    const double eta = 0.1 * (trial % 11);
    const auto scenario = IlluminationScenario::post_selected(psi, eta);
    const double k = effective_rank_k(idler_reduction(psi));
    EXPECT_NEAR(h01_direct(scenario), h01_closed_form(eta, psi.d_s(), k), 1e-10);
  }
}

TEST(Advantage, ProductInputHasNone) {
  std::vector<Complex> product(6);
  product[0] = 1.0;
  EXPECT_NEAR(advantage(IlluminationScenario::post_selected(BipartiteState(3, 2, product), 0.8)), 0.0, 1e-12);
}

TEST(Advantage, BellAtFullSignal) {
  EXPECT_NEAR(advantage(IlluminationScenario::post_selected(bell_state(2), 1.0)), kInvSqrt2 - 0.5, 1e-12);
  EXPECT_NEAR(advantage(IlluminationScenario::post_selected(bell_state(2), 1.0)), 0.207107, 1e-6);
}

double tabulated_bell_advantage(double eta, double d) {
  return 1.0 / std::sqrt(1.0 + eta * eta * (d - 1.0)) - 1.0 / std::sqrt(1.0 + eta * eta * (d * d - 1.0));
}

TEST(Advantage, BellFamilyMatchesTabulation) {
  for (double eta : {0.25, 0.5, 0.75, 1.0}) {
    for (std::size_t d = 2; d <= 6; ++d) {
      EXPECT_NEAR(advantage(IlluminationScenario::post_selected(bell_state(d), eta)),
                  tabulated_bell_advantage(eta, static_cast<double>(d)), 1e-10);
    }
  }
}

TEST(Advantage, BellFamilyIncreasesWithDimensionAtModerateSignal) {
  double prev = -1.0;
  for (std::size_t d = 2; d <= 6; ++d) {
    const double a = advantage(IlluminationScenario::post_selected(bell_state(d), 0.5));
    EXPECT_GT(a, prev) << "d = " << d;
    prev = a;
  }
}

TEST(Advantage, BellFamilyPeaksAtFourForFullSignal) {
  // At eta = 1 the tabulated advantage is 0.2071, 0.2440, 0.2500, 0.2472, 0.2415.
  const double a4 = advantage(IlluminationScenario::post_selected(bell_state(4), 1.0));
  EXPECT_GT(a4, advantage(IlluminationScenario::post_selected(bell_state(3), 1.0)));
  EXPECT_GT(a4, advantage(IlluminationScenario::post_selected(bell_state(5), 1.0)));
  EXPECT_NEAR(a4, 0.25, 1e-12);
}

TEST(Advantage, NonNegativeForRandomInputs) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto psi = haar_random_state(2 + trial % 3, 2 + trial % 4, gen);
    EXPECT_GE(advantage(IlluminationScenario::post_selected(psi, 0.1 * (trial % 11))), -1e-12);
  }
}

}  // namespace
}  // namespace qillum
