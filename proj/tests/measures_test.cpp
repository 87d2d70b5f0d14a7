// Copyright 2026 The unruhcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unruh/measures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "test_support.hpp"
#include "unruh/error.hpp"
#include "unruh/rindler.hpp"

namespace unruh {
namespace {

using testing::kPi;

DensityMatrix local_rotation(const DensityMatrix& rho, const ComplexMatrix& ua,
                             const ComplexMatrix& ub) {
  const auto u = kron(ua, ub);
  ComplexMatrix m = u * rho.matrix() * u.adjoint();
  return DensityMatrix(0.5 * (m + m.adjoint()), {2, 2});
}

TEST(MutualInformation, ReferenceStates) {
  EXPECT_NEAR(mutual_information(testing::bell_state()), 2.0, 1e-12);
  EXPECT_NEAR(mutual_information(testing::product_state()), 0.0, 1e-12);
  EXPECT_NEAR(mutual_information(reduced_state(UnruhParameter(kPi / 4), RindlerPair::AI)), 1.0,
              1e-12);
}

TEST(MutualInformation, RequiresTwoQubits) {
  EXPECT_THROW(mutual_information(tripartite_density(UnruhParameter(0.2))), BadSubsystemSpec);
}

TEST(Projectors, Poles) {
  const auto id = ComplexMatrix::identity(2);
  const double up[] = {1.0, 0.0}, down[] = {0.0, 1.0};
  EXPECT_LE(projectors({0.0, 0.3}).first.max_abs_diff(kron(ComplexMatrix::diagonal(up), id)),
            1e-15);
  for (double phi : {0.0, 1.0, 4.0})
    EXPECT_LE(projectors({kPi, phi}).first.max_abs_diff(kron(ComplexMatrix::diagonal(down), id)),
              1e-15);
  ComplexMatrix plus_x(2, {0.5, 0.5, 0.5, 0.5});
  EXPECT_LE(projectors({kPi / 2, 0.0}).first.max_abs_diff(kron(plus_x, id)), 1e-15);
}

TEST(Projectors, CompleteOrthogonalIdempotent) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> theta(0.0, kPi), phi(0.0, 2 * kPi);
  const auto rho = reduced_state(UnruhParameter(0.5), RindlerPair::III);
  for (int trial = 0; trial < 1000; ++trial) {
    const MeasurementAngles a{theta(rng), phi(rng)};
    const auto [plus, minus] = projectors(a);
    ASSERT_LE((plus + minus).max_abs_diff(ComplexMatrix::identity(4)), 1e-12);
    ASSERT_LE((plus * plus).max_abs_diff(plus), 1e-12);
    ASSERT_LE((minus * minus).max_abs_diff(minus), 1e-12);
    ASSERT_LE((plus * minus).max_abs_diff(ComplexMatrix(4)), 1e-12);
    const auto outcomes = measure_first(rho, a);
    ASSERT_NEAR(outcomes[0].probability + outcomes[1].probability, 1.0, 1e-12);
  }
}

TEST(MeasureFirst, RindlerAiAtThetaZero) {
  for (double r : {0.0, 0.3, 0.7, kPi / 4}) {
    const auto outcomes = measure_first(reduced_state(UnruhParameter(r), RindlerPair::AI), {0, 0});
    EXPECT_NEAR(outcomes[0].probability, 0.5, 1e-12);
    ASSERT_TRUE(outcomes[0].post_state);
    const double d[] = {std::cos(r) * std::cos(r), std::sin(r) * std::sin(r)};
    EXPECT_LE(outcomes[0].post_state->matrix().max_abs_diff(ComplexMatrix::diagonal(d)), 1e-14);
  }
}

TEST(MeasureFirst, MatchesClosedFormConditionalStates) {
  for (double r : {0.1, 0.5, kPi / 4})
    for (double theta : {0.2, 1.1, 2.9})
      for (double phi : {0.0, 2.0}) {
        const auto outcomes =
            measure_first(reduced_state(UnruhParameter(r), RindlerPair::AI), {theta, phi});
        const UnruhParameter ur(r);
        EXPECT_LE(outcomes[0].post_state->matrix().max_abs_diff(
                      closed_form_conditional_state(ur, {theta, phi}, true)),
                  1e-14);
        EXPECT_LE(outcomes[1].post_state->matrix().max_abs_diff(
                      closed_form_conditional_state(ur, {theta, phi}, false)),
                  1e-14);
      }
}

TEST(MeasureFirst, NegligibleOutcomeHasNoState) {
  const auto outcomes = measure_first(testing::product_state(), {0.0, 0.0});
  EXPECT_NEAR(outcomes[0].probability, 1.0, 1e-15);
  EXPECT_EQ(outcomes[1].probability, 0.0);
  EXPECT_FALSE(outcomes[1].post_state);
  EXPECT_NEAR(measured_conditional_entropy(testing::product_state(), {0.0, 0.0}), 0.0, 1e-15);
}

TEST(MeasureFirst, LowProbabilityOutcomeStaysValid) {
  // p_- ~ sin^2(theta/2) ~ 2.5e-9: conditional state must still validate.
  const auto outcomes = measure_first(testing::product_state(), {1e-4, 0.3});
  EXPECT_GT(outcomes[1].probability, 1e-12);
  ASSERT_TRUE(outcomes[1].post_state);
}

TEST(MeasuredConditionalEntropy, ReferenceStates) {
  EXPECT_NEAR(measured_conditional_entropy(testing::bell_state(), {0.0, 0.0}), 0.0, 1e-14);
  std::mt19937_64 rng(8);
  const auto ra = testing::random_density(rng, {2});
  const auto rb = testing::random_density(rng, {2});
  const DensityMatrix product(kron(ra.matrix(), rb.matrix()), {2, 2});
  for (double theta : {0.0, 0.7, 2.0})
    EXPECT_NEAR(measured_conditional_entropy(product, {theta, 1.3}), von_neumann_entropy(rb),
                1e-12);
}

TEST(MeasuredConditionalEntropy, RindlerAiQuarterPiHalfPi) {
  const double lambda = 0.5 * (1.0 + std::sqrt(3.0) / 2.0);
  const double expected = testing::h(lambda) + testing::h(1.0 - lambda);
  const auto rho = reduced_state(UnruhParameter(kPi / 4), RindlerPair::AI);
  EXPECT_NEAR(measured_conditional_entropy(rho, {kPi / 2, 0.0}), expected, 1e-14);
  EXPECT_NEAR(expected, 0.3546, 5e-5);
  const auto oracle = testing::conditional_entropy_oracle(testing::to_mat4(rho.matrix()), kPi / 2, 0);
  EXPECT_NEAR(oracle, expected, 1e-14);
}

TEST(MeasuredConditionalEntropy, FastPathMatchesGeneralRoute) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> theta(0.0, kPi), phi(0.0, 2 * kPi);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rho = testing::random_density(rng, {2, 2});
    const MeasurementAngles a{theta(rng), phi(rng)};
    double general = 0.0;
    for (const auto& o : measure_first(rho, a))
      if (o.post_state) general += o.probability * von_neumann_entropy(*o.post_state);
    ASSERT_NEAR(measured_conditional_entropy(rho, a), general, 1e-12);
    ASSERT_NEAR(measured_conditional_entropy(rho, a),
                testing::conditional_entropy_oracle(testing::to_mat4(rho.matrix()), a.theta, a.phi),
                1e-12);
  }
}

TEST(MeasuredConditionalEntropy, Bounds) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rho = testing::random_density(rng, {2, 2});
    const double s = measured_conditional_entropy(rho, {0.4 * trial / 200.0 * kPi, 0.1 * trial});
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, von_neumann_entropy(partial_trace(rho, {0})) +
                     von_neumann_entropy(partial_trace(rho, {1})) + 1e-12);
  }
}

TEST(MeasuredConditionalEntropy, PhiIndependentForRindlerAi) {
  for (double r : {0.1, 0.4, 0.7, kPi / 4}) {
    const auto rho = reduced_state(UnruhParameter(r), RindlerPair::AI);
    for (double theta : {0.3, 1.2, 2.5}) {
      std::vector<double> s(64);
      for (int j = 0; j < 64; ++j)
        s[j] = measured_conditional_entropy(rho, {theta, 2 * kPi * j / 64});
      const double mean = std::accumulate(s.begin(), s.end(), 0.0) / 64;
      double var = 0.0;
      for (double x : s) var += (x - mean) * (x - mean);
      EXPECT_LE(std::sqrt(var / 64), 1e-10);
    }
  }
}

TEST(ClassicalCorrelation, ReferenceStates) {
  EXPECT_NEAR(classical_correlation(testing::product_state()).value, 0.0, 1e-12);

  // Brute-force 1-degree grid oracle.
  auto grid_min = [](const DensityMatrix& rho) {
    return testing::dense_grid_minimum(testing::to_mat4(rho.matrix()), 181, 360);
  };
  const auto cc = testing::classical_correlated_state();
  const auto res = classical_correlation(cc);
  const auto oracle = grid_min(cc);
  EXPECT_NEAR(1.0 - oracle.value, 1.0, 1e-12);
  EXPECT_NEAR(res.value, 1.0, 1e-9);
  EXPECT_TRUE(std::abs(res.angles.theta) < 1e-6 || std::abs(res.angles.theta - kPi) < 1e-6)
      << res.angles.theta;

  const auto bell = classical_correlation(testing::bell_state());
  EXPECT_NEAR(1.0 - grid_min(testing::bell_state()).value, 1.0, 1e-12);
  EXPECT_NEAR(bell.value, 1.0, 1e-9);
}

TEST(QuantumDiscord, ReferenceStates) {
  EXPECT_NEAR(quantum_discord(testing::bell_state()), 1.0, 1e-9);
  EXPECT_NEAR(quantum_discord(testing::classical_correlated_state()), 0.0, 1e-9);
  EXPECT_NEAR(quantum_discord(testing::product_state()), 0.0, 1e-9);
}

TEST(LogNegativity, ReferenceStates) {
  EXPECT_NEAR(log_negativity(testing::bell_state()), 1.0, 1e-14);
  EXPECT_NEAR(log_negativity(testing::product_state()), 0.0, 1e-14);
  EXPECT_NEAR(log_negativity(testing::classical_correlated_state()), 0.0, 1e-14);
  EXPECT_NEAR(log_negativity(reduced_state(UnruhParameter(kPi / 4), RindlerPair::AI)),
              std::log2(1.5), 1e-12);
}

TEST(Correlations, AdditivityAndNonNegativityOnRandomStates) {
  std::mt19937_64 rng(41);
  OptimizerConfig cfg;
  cfg.theta_grid = 16;
  cfg.phi_grid = 16;
  for (int trial = 0; trial < 40; ++trial) {
    const auto rho = testing::random_density(rng, {2, 2});
    const auto res = correlations(rho, cfg);
    const double info = von_neumann_entropy(partial_trace(rho, {0})) +
                        von_neumann_entropy(partial_trace(rho, {1})) - von_neumann_entropy(rho);
    EXPECT_NEAR(res.mutual_information, info, 1e-12);
    EXPECT_NEAR(res.mutual_information, res.classical_correlation + res.quantum_discord, 1e-9);
    EXPECT_GE(res.classical_correlation, -1e-9);
    EXPECT_GE(res.quantum_discord, -1e-9);
    EXPECT_GE(res.log_negativity, -1e-9);
  }
}

TEST(Correlations, LocalUnitaryInvariance) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    const auto rho = testing::random_density(rng, {2, 2});
    const auto rotated = local_rotation(rho, testing::random_unitary2(rng), testing::random_unitary2(rng));
    const auto a = correlations(rho), b = correlations(rotated);
    // Each run is within 1e-6 of the true minimum, so the two may differ by twice that.
    EXPECT_NEAR(a.classical_correlation, b.classical_correlation, 2e-6);
    EXPECT_NEAR(a.quantum_discord, b.quantum_discord, 2e-6);
  }
}

TEST(Correlations, PureStatesHaveDiscordEqualToEntanglementEntropy) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 15; ++trial) {
    const auto rho =
        DensityMatrix::from_pure(StateVector(testing::random_amplitudes(rng, 4)), {2, 2});
    const double s_b = von_neumann_entropy(partial_trace(rho, {1}));
    const auto res = correlations(rho);
    EXPECT_NEAR(res.classical_correlation, s_b, 5e-7);
    EXPECT_NEAR(res.quantum_discord, s_b, 5e-7);
  }
}

}  // namespace
}  // namespace unruh
