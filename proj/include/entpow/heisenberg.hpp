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

#include <cstddef>
#include <vector>

#include "entpow/entangling_power.hpp"
#include "entpow/matrix.hpp"
#include "entpow/spin.hpp"

namespace entpow {

/// Eigenvalue of S1 . S2 on the total-spin-n subspace:
/// (n(n+1) - s1(s1+1) - s2(s2+1)) / 2.
double spin_dot_eigenvalue(SpinSystem n, SpinSystem s1, SpinSystem s2);

/// Projector onto total spin n in s1 (x) s2 (s1 <= s2), built as the
/// polynomial prod_{k != n} (S1.S2 - lambda_k) / (lambda_n - lambda_k).
ComplexMatrix su2_projector(SpinSystem n, SpinSystem s1, SpinSystem s2);

/// SU(2)-invariant Hamiltonian H = sum_n E_n P_n and an evolution time t.
/// energies[k] belongs to total spin n = s2 - s1 + k.
class HeisenbergSpectrum {
 public:
  HeisenbergSpectrum(SpinSystem s1, SpinSystem s2, std::vector<double> energies, double t);

  /// H = S1 . S2, i.e. E_n = lambda_n.
  static HeisenbergSpectrum isotropic(SpinSystem s1, SpinSystem s2, double t);

  SpinSystem s1() const noexcept { return s1_; }
  SpinSystem s2() const noexcept { return s2_; }
  double t() const noexcept { return t_; }
  const std::vector<double>& energies() const noexcept { return energies_; }
  /// Total spin of energies()[k].
  SpinSystem total_spin(std::size_t k) const;

 private:
  SpinSystem s1_;
  SpinSystem s2_;
  std::vector<double> energies_;
  double t_;
};

/// U = sum_n exp(-i t E_n) P_n.
BipartiteOperator su2_evolution(const HeisenbergSpectrum& spectrum);

/// Qubit-qudit isotropic Heisenberg quantities for s1 = 1/2 and d = 2 s2 + 1.
/// U = beta0 I + beta1 S1.S2 and its partial time reversal
/// beta0 I - beta1 S1.S2 = gamma0 P_{s2-1/2} + gamma1 P_{s2+1/2}.
struct HeisenbergCoefficients {
  double e0;  ///< -(d+1)/4, energy of total spin s2 - 1/2
  double e1;  ///< (d-1)/4, energy of total spin s2 + 1/2
  cplx beta0;
  cplx beta1;
  cplx gamma0;
  cplx gamma1;
};

HeisenbergCoefficients heisenberg_coefficients(SpinSystem s2, double t);

/// Closed-form rearrangement traces:
/// Tr[(U^R U^R+)^2]   = 4 d^2 |beta0|^4 + (d^2-1)^2 d^2 |beta1|^4 / 192,
/// Tr[(U^T1 U^T1+)^2] = (d-1) |gamma0|^4 + (d+1) |gamma1|^4.
RearrangementTraces heisenberg_trace_terms(SpinSystem s2, double t);

/// U = beta0 I (x) I + beta1 sum_i S1^i (x) S2^i as a product-term sum.
ProductTermSum heisenberg_decomposition(SpinSystem s2, double t);

/// 4 (d-1) / (9 d^4) [3 d^3 - f(d) sin^2(d t / 4)] sin^2(d t / 4),
/// f(d) = 2 (6 - d + d^3).
double heisenberg_qubit_qudit_ep_analytic(SpinSystem s2, double t);

/// (d-1)(d^3+d-6) / (3 d^4).
double heisenberg_ep_time_average(SpinSystem s2);

/// Period 4 pi / d of the qubit-qudit Heisenberg entangling power.
double heisenberg_period(SpinSystem s2);

}  // namespace entpow
