// Copyright 2026 The entpow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "entpow/entangling_power.hpp"
#include "entpow/errors.hpp"
#include "entpow/heisenberg.hpp"
#include "entpow/ising.hpp"
#include "entpow/monte_carlo.hpp"
#include "test_util.hpp"

using namespace entpow;
using namespace entpow::testing;

TEST(HaarProductState, TrivialDimensions) {
  std::mt19937_64 rng(41);
  const std::vector<cplx> psi = haar_product_state(1, 1, rng);
  ASSERT_EQ(psi.size(), 1u);
  EXPECT_NEAR(std::abs(psi[0]), 1.0, 1e-15);
}

TEST(HaarProductState, NormalizedAndUnentangled) {
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 500; ++rep) {
    const std::vector<cplx> psi = haar_product_state(3, 4, rng);
    double n = 0.0;
    for (const cplx& z : psi) n += std::norm(z);
    EXPECT_NEAR(std::sqrt(n), 1.0, 1e-12);
    EXPECT_NEAR(linear_entropy(psi, 3, 4), 0.0, 1e-12);
  }
}

TEST(HaarProductState, FirstMomentOfQubitFactor) {
  // E|<0|psi1>|^2 = 1/d for Haar-random psi1.
  std::mt19937_64 rng(43);
  const int n = 100000;
  double sum = 0.0, sum_sq = 0.0;
  for (int k = 0; k < n; ++k) {
    const std::vector<cplx> psi = haar_product_state(2, 1, rng);
    const double p = std::norm(psi[0]);
    sum += p;
    sum_sq += p * p;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum_sq / n - mean * mean) / n);
  EXPECT_NEAR(mean, 0.5, 5.0 * se);
}

TEST(StreamSeed, DistinctStreams) {
  EXPECT_NE(stream_seed(0, 0), stream_seed(0, 1));
  EXPECT_NE(stream_seed(0, 0), stream_seed(1, 0));
  EXPECT_EQ(stream_seed(5, 9), stream_seed(5, 9));
}

TEST(MonteCarlo, IdentityGivesZero) {
  const MonteCarloEstimate est = monte_carlo_ep(BipartiteOperator::identity(2, 3), 1000, 99);
  EXPECT_NEAR(est.mean, 0.0, 1e-12);
  EXPECT_NEAR(est.std_error, 0.0, 1e-12);
  EXPECT_EQ(est.samples, 1000u);
  EXPECT_EQ(est.seed, 99u);
}

TEST(MonteCarlo, RejectsBadArguments) {
  EXPECT_THROW(monte_carlo_ep(BipartiteOperator::identity(2, 2), 1, 0), DomainError);
  EXPECT_THROW(monte_carlo_ep(BipartiteOperator(2, 2, 2.0 * ComplexMatrix::identity(4)), 100, 0),
               DomainError);
}

TEST(MonteCarlo, DeterministicAcrossThreadCounts) {
  std::mt19937_64 rng(44);
  const BipartiteOperator u = random_unitary(2, 3, rng);
  const MonteCarloEstimate a = monte_carlo_ep(u, 5000, 1234, 1);
  const MonteCarloEstimate b = monte_carlo_ep(u, 5000, 1234, 3);
  const MonteCarloEstimate c = monte_carlo_ep(u, 5000, 1234, 8);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.mean, c.mean);
  EXPECT_EQ(a.std_error, c.std_error);
  EXPECT_NE(a.mean, monte_carlo_ep(u, 5000, 1235, 1).mean);
}

TEST(MonteCarlo, TwoQubitIsingAtPi) {
  const BipartiteOperator u = ising_evolution({SpinSystem(1), SpinSystem(1), std::numbers::pi});
  const MonteCarloEstimate est = monte_carlo_ep(u, 100000, 7);
  EXPECT_GT(est.std_error, 0.0);
  EXPECT_NEAR(est.mean, 2.0 / 9.0, 5.0 * est.std_error);
}

TEST(MonteCarlo, QubitQutritHeisenberg) {
  const BipartiteOperator u = su2_evolution(HeisenbergSpectrum::isotropic(SpinSystem(1), SpinSystem(2), 1.0));
  const MonteCarloEstimate est = monte_carlo_ep(u, 100000, 8);
  EXPECT_NEAR(est.mean, entangling_power(u), 5.0 * est.std_error);
}

TEST(MonteCarlo, ThreeWayAgreementOnRandomUnitaries) {
  std::mt19937_64 rng(45);
  for (auto [d1, d2] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
    for (int rep = 0; rep < 25; ++rep) {
      const BipartiteOperator u = random_unitary(d1, d2, rng);
      const double ep = entangling_power(u);
      EXPECT_NEAR(ep, entangling_power_permutation_oracle(u), 1e-9);
      const MonteCarloEstimate est = monte_carlo_ep(u, 100000, 1000 + rep);
      EXPECT_NEAR(est.mean, ep, 5.0 * est.std_error) << d1 << "x" << d2 << " rep " << rep;
    }
  }
}
