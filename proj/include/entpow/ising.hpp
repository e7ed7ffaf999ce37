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

#pragma once

#include "entpow/matrix.hpp"
#include "entpow/spin.hpp"

namespace entpow {

/// Evolution under H = g S1^z S2^z with phase theta = -g t (hbar = 1).
struct IsingParams {
  SpinSystem s1;
  SpinSystem s2;
  double theta;
};

/// Diagonal U = sum_{m1, m2} exp(i theta m1 m2) |m1 m2><m1 m2|.
BipartiteOperator ising_evolution(const IsingParams& p);

/// sin^2(n x) / sin^2(x), taking the limit n^2 where |sin x| < 1e-8.
double sin_ratio_sq(double n, double x);

/// Closed form of Tr[(U^R U^R+)^2] for the Ising evolution:
/// d1 d2^2 + sum_{M=1}^{d1-1} 2 (d1 - M) sin^2(d2 M theta / 2) / sin^2(M theta / 2).
double ising_trace_term(const IsingParams& p);

/// Closed-form entangling power of the Ising evolution, any d1, d2.
double ising_ep_analytic(const IsingParams& p);

/// Qubit-qudit specialization (d1 = 2):
/// d2 / (3 (d2 + 1)) - (1 - cos d2 theta) / (3 d2 (d2 + 1) (1 - cos theta)).
double ising_qubit_qudit_ep_analytic(SpinSystem s2, double theta);

/// Average over theta of the Ising entangling power: (1 - 2/(d1+1)) (1 - 2/(d2+1)).
double ising_ep_time_average(SpinSystem s1, SpinSystem s2);

/// The Ising entangling power is 2 pi periodic in theta.
inline constexpr double kIsingPeriod = 6.283185307179586476925286766559;

}  // namespace entpow
