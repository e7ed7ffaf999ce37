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

#include <cmath>
#include <numbers>
#include <random>

#include "entpow/entangling_power.hpp"
#include "entpow/errors.hpp"
#include "entpow/heisenberg.hpp"
#include "entpow/rearrange.hpp"
#include "entpow/time_average.hpp"
#include "test_util.hpp"

using namespace entpow;
using namespace entpow::testing;

namespace {

constexpr double kPi = std::numbers::pi;
const SpinSystem kHalf(1);

const std::pair<int, int> kSpinPairs[] = {{1, 1}, {1, 2}, {2, 2}, {1, 5}, {2, 3}, {3, 4}, {2, 6}};

BipartiteOperator qubit_qudit(std::size_t d, double t) {
  return su2_evolution(HeisenbergSpectrum::isotropic(kHalf, SpinSystem::from_dimension(d), t));
}

std::vector<SpinSystem> total_spins(SpinSystem s1, SpinSystem s2) {
  std::vector<SpinSystem> out;
  for (int n = s2.two_s() - s1.two_s(); n <= s2.two_s() + s1.two_s(); n += 2) out.emplace_back(n);
  return out;
}

}  // namespace

TEST(SpinDotEigenvalue, TwoQubits) {
  EXPECT_DOUBLE_EQ(spin_dot_eigenvalue(SpinSystem(0), kHalf, kHalf), -0.75);
  EXPECT_DOUBLE_EQ(spin_dot_eigenvalue(SpinSystem(2), kHalf, kHalf), 0.25);
}

TEST(Su2Projector, TripletProjector) {
  const ComplexMatrix p = su2_projector(SpinSystem(2), kHalf, kHalf);
  const ComplexMatrix expected = spin_dot(kHalf, kHalf) + 0.75 * ComplexMatrix::identity(4);
  EXPECT_LT(max_abs_diff(p, expected), 1e-15);
  EXPECT_NEAR(p.trace().real(), 3.0, 1e-14);
}

TEST(Su2Projector, QubitQuditClosedForms) {
  for (std::size_t d = 2; d <= 8; ++d) {
    const SpinSystem s2 = SpinSystem::from_dimension(d);
    const double dd = static_cast<double>(d);
    const ComplexMatrix dot = spin_dot(kHalf, s2);
    const ComplexMatrix id = ComplexMatrix::identity(2 * d);
    const ComplexMatrix low = (1.0 / (2.0 * dd)) * ((dd - 1.0) * id - 4.0 * dot);
    const ComplexMatrix high = (1.0 / (2.0 * dd)) * ((dd + 1.0) * id + 4.0 * dot);
    EXPECT_LT(max_abs_diff(su2_projector(SpinSystem(s2.two_s() - 1), kHalf, s2), low), 1e-13);
    EXPECT_LT(max_abs_diff(su2_projector(SpinSystem(s2.two_s() + 1), kHalf, s2), high), 1e-13);
  }
}

TEST(Su2Projector, Algebra) {
  for (auto [a, b] : kSpinPairs) {
    const SpinSystem s1(a), s2(b);
    const std::size_t dim = s1.dim() * s2.dim();
    const ComplexMatrix dot = spin_dot(s1, s2);
    const SpinOperators o1 = spin_operators(s1), o2 = spin_operators(s2);
    const ComplexMatrix i1 = ComplexMatrix::identity(s1.dim()), i2 = ComplexMatrix::identity(s2.dim());
    const ComplexMatrix total_z = kron(o1.z, i2) + kron(i1, o2.z);
    const ComplexMatrix total_x = kron(o1.x, i2) + kron(i1, o2.x);
    ComplexMatrix sum(dim, dim);
    const auto spins = total_spins(s1, s2);
    for (const SpinSystem& n : spins) {
      const ComplexMatrix p = su2_projector(n, s1, s2);
      sum += p;
      EXPECT_LT(max_abs_diff(p, p.adjoint()), 1e-10);
      EXPECT_NEAR(p.trace().real(), static_cast<double>(n.two_s() + 1), 1e-10);
      EXPECT_LT(max_abs_diff(p * dot, dot * p), 1e-10);
      EXPECT_LT(max_abs_diff(p * total_z, total_z * p), 1e-10);
      EXPECT_LT(max_abs_diff(p * total_x, total_x * p), 1e-10);
      for (const SpinSystem& m : spins) {
        const ComplexMatrix expected = (n == m) ? p : ComplexMatrix(dim, dim);
        EXPECT_LT(max_abs_diff(p * su2_projector(m, s1, s2), expected), 1e-10)
            << a << "/2 " << b << "/2 n=" << n.two_s() << " m=" << m.two_s();
      }
    }
    EXPECT_LT(max_abs_diff(sum, ComplexMatrix::identity(dim)), 1e-10);
  }
}

TEST(Su2Projector, DomainErrors) {
  EXPECT_THROW(su2_projector(SpinSystem(5), kHalf, SpinSystem(2)), DomainError);
  EXPECT_THROW(su2_projector(SpinSystem(2), kHalf, SpinSystem(2)), DomainError);  // parity
  EXPECT_THROW(su2_projector(SpinSystem(1), SpinSystem(2), kHalf), DomainError);  // s1 > s2
  EXPECT_THROW(HeisenbergSpectrum(kHalf, SpinSystem(2), {1.0}, 0.0), DomainError);
}

TEST(Su2Evolution, IdentityAtTimeZero) {
  for (auto [a, b] : kSpinPairs) {
    const BipartiteOperator u = su2_evolution(HeisenbergSpectrum::isotropic(SpinSystem(a), SpinSystem(b), 0.0));
    EXPECT_LT(max_abs_diff(u.matrix(), ComplexMatrix::identity(u.dim())), 1e-10);
  }
}

TEST(Su2Evolution, IsotropicMatchesSpectralExponential) {
  for (auto [a, b] : kSpinPairs) {
    const SpinSystem s1(a), s2(b);
    for (double t : {0.7, 2.3}) {
      const BipartiteOperator u = su2_evolution(HeisenbergSpectrum::isotropic(s1, s2, t));
      EXPECT_LT(unitarity_residual(u.matrix()), 1e-10);
      EXPECT_LT(max_abs_diff(u.matrix(), expm_hermitian(spin_dot(s1, s2), t)), 1e-10) << a << "/2 " << b << "/2";
    }
  }
}

TEST(Su2Evolution, GeneralSpectrumMatchesSpectralExponential) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> e(-3.0, 3.0);
  const SpinSystem s1(2), s2(3);
  std::vector<double> energies(s1.dim());
  for (double& x : energies) x = e(rng);
  const HeisenbergSpectrum spectrum(s1, s2, energies, 0.9);
  ComplexMatrix h(s1.dim() * s2.dim(), s1.dim() * s2.dim());
  for (std::size_t k = 0; k < energies.size(); ++k) h += energies[k] * su2_projector(spectrum.total_spin(k), s1, s2);
  EXPECT_LT(max_abs_diff(su2_evolution(spectrum).matrix(), expm_hermitian(h, 0.9)), 1e-10);
}

TEST(Su2Evolution, QubitQuditBetaForm) {
  for (std::size_t d = 2; d <= 6; ++d) {
    const SpinSystem s2 = SpinSystem::from_dimension(d);
    const HeisenbergCoefficients c = heisenberg_coefficients(s2, 1.3);
    EXPECT_DOUBLE_EQ(c.e0, -(static_cast<double>(d) + 1.0) / 4.0);
    EXPECT_DOUBLE_EQ(c.e1, (static_cast<double>(d) - 1.0) / 4.0);
    const ComplexMatrix expected = c.beta0 * ComplexMatrix::identity(2 * d) + c.beta1 * spin_dot(kHalf, s2);
    EXPECT_LT(max_abs_diff(qubit_qudit(d, 1.3).matrix(), expected), 1e-13);
    // The partial time reversal is diagonal in the same projectors with gamma weights.
    const ComplexMatrix tau = partial_time_reversal(qubit_qudit(d, 1.3), kHalf).matrix();
    const ComplexMatrix via_gamma = c.gamma0 * su2_projector(SpinSystem(s2.two_s() - 1), kHalf, s2) +
                                    c.gamma1 * su2_projector(SpinSystem(s2.two_s() + 1), kHalf, s2);
    EXPECT_LT(max_abs_diff(tau, via_gamma), 1e-13);
  }
}

TEST(HeisenbergAnalytic, TwoQubits) {
  for (int k = 0; k <= 40; ++k) {
    const double t = 0.157 * k;
    EXPECT_NEAR(heisenberg_qubit_qudit_ep_analytic(kHalf, t), std::pow(std::sin(t), 2) / 6.0, 1e-12);
  }
}

TEST(HeisenbergAnalytic, ZeroAtTimeZero) {
  for (std::size_t d = 2; d <= 10; ++d)
    EXPECT_EQ(heisenberg_qubit_qudit_ep_analytic(SpinSystem::from_dimension(d), 0.0), 0.0);
}

TEST(HeisenbergAnalytic, MatchesMatrixFormula) {
  EXPECT_NEAR(heisenberg_qubit_qudit_ep_analytic(SpinSystem(2), 1.0), entangling_power(qubit_qudit(3, 1.0)), 1e-12);
  for (std::size_t d = 2; d <= 8; ++d)
    for (int k = 0; k < 32; ++k) {
      const double t = 4.0 * kPi * k / 31.0;
      EXPECT_NEAR(heisenberg_qubit_qudit_ep_analytic(SpinSystem::from_dimension(d), t),
                  entangling_power(qubit_qudit(d, t)), 1e-10)
          << "d=" << d << " t=" << t;
    }
}

TEST(HeisenbergAnalytic, PeriodShrinksWithDimension) {
  for (std::size_t d = 2; d <= 8; ++d) {
    const SpinSystem s2 = SpinSystem::from_dimension(d);
    const double period = heisenberg_period(s2);
    EXPECT_NEAR(period, 4.0 * kPi / static_cast<double>(d), 1e-15);
    for (int k = 0; k < 32; ++k) {
      const double t = 0.05 + 0.2 * k;
      EXPECT_NEAR(heisenberg_qubit_qudit_ep_analytic(s2, t + period), heisenberg_qubit_qudit_ep_analytic(s2, t),
                  1e-12);
    }
  }
}

TEST(HeisenbergTimeAverage, ClosedForm) {
  EXPECT_NEAR(heisenberg_ep_time_average(kHalf), 1.0 / 12.0, 1e-16);
  EXPECT_NEAR(heisenberg_ep_time_average(SpinSystem(2)), 48.0 / 243.0, 1e-16);
  for (std::size_t d = 2; d < 12; ++d)
    EXPECT_LT(heisenberg_ep_time_average(SpinSystem::from_dimension(d)),
              heisenberg_ep_time_average(SpinSystem::from_dimension(d + 1)));
}

TEST(HeisenbergTimeAverage, MatchesQuadrature) {
  for (std::size_t d = 2; d <= 12; ++d) {
    const SpinSystem s2 = SpinSystem::from_dimension(d);
    const double numeric = time_average_ep([&](double t) { return heisenberg_qubit_qudit_ep_analytic(s2, t); },
                                           heisenberg_period(s2), 0.0, 4096);
    EXPECT_NEAR(numeric, heisenberg_ep_time_average(s2), 1e-8) << "d=" << d;
  }
}

TEST(HeisenbergTraceTerms, IdentityAtTimeZero) {
  for (std::size_t d = 2; d <= 8; ++d) {
    const RearrangementTraces t = heisenberg_trace_terms(SpinSystem::from_dimension(d), 0.0);
    const double dd = static_cast<double>(d);
    EXPECT_NEAR(t.realigned, 4.0 * dd * dd, 1e-12);
    EXPECT_NEAR(t.partial_transposed, 2.0 * dd, 1e-12);
  }
}

TEST(HeisenbergTraceTerms, MatchBruteForce) {
  for (std::size_t d = 2; d <= 8; ++d)
    for (int k = 0; k < 16; ++k) {
      const double t = 0.37 * k;
      const RearrangementTraces closed = heisenberg_trace_terms(SpinSystem::from_dimension(d), t);
      const RearrangementTraces brute = rearrangement_traces(qubit_qudit(d, t));
      EXPECT_NEAR(closed.realigned, brute.realigned, 1e-9);
      EXPECT_NEAR(closed.partial_transposed, brute.partial_transposed, 1e-9);
    }
}

TEST(HeisenbergTraceTerms, GammasAreNotUnimodular) {
  // gamma0 = ((d+1) a1 - a0) / d, gamma1 = ((d-1) a0 + a1) / d with unimodular a0, a1.
  const HeisenbergCoefficients c = heisenberg_coefficients(SpinSystem(2), 1.0);
  EXPECT_GT(std::abs(std::abs(c.gamma0) - 1.0), 0.1);
  EXPECT_GT(std::abs(std::abs(c.gamma1) - 1.0), 0.1);
  const RearrangementTraces t = heisenberg_trace_terms(SpinSystem(2), 1.0);
  EXPECT_GT(std::abs(t.partial_transposed - 6.0), 0.1);
}

TEST(HeisenbergGeneralSpins, MatrixPathAgreesWithOracle) {
  // s1 > 1/2 has no closed form; the matrix formula is checked against the oracle.
  for (auto [a, b] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    const BipartiteOperator u = su2_evolution(HeisenbergSpectrum::isotropic(SpinSystem(a), SpinSystem(b), 0.8));
    EXPECT_NEAR(entangling_power(u), entangling_power_permutation_oracle(u), 1e-9);
  }
}
