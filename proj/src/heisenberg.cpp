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

#include "entpow/heisenberg.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "entpow/errors.hpp"

namespace entpow {

namespace {

void require_qubit_partner(SpinSystem s2) {
  if (s2.two_s() < 1) throw DomainError("qubit-qudit Heisenberg formulas need s2 >= 1/2");
}

void require_ordered(SpinSystem s1, SpinSystem s2) {
  if (s1 > s2) {
    throw DomainError("SU(2) decomposition expects s1 <= s2, got 2s1 = " + std::to_string(s1.two_s()) +
                      ", 2s2 = " + std::to_string(s2.two_s()));
  }
}

}  // namespace

double spin_dot_eigenvalue(SpinSystem n, SpinSystem s1, SpinSystem s2) {
  return 0.5 * (n.s() * (n.s() + 1.0) - s1.s() * (s1.s() + 1.0) - s2.s() * (s2.s() + 1.0));
}

ComplexMatrix su2_projector(SpinSystem n, SpinSystem s1, SpinSystem s2) {
  require_ordered(s1, s2);
  const int lo = s2.two_s() - s1.two_s();
  const int hi = s2.two_s() + s1.two_s();
  if (n.two_s() < lo || n.two_s() > hi || (n.two_s() - lo) % 2 != 0) {
    throw DomainError("total spin " + std::to_string(n.two_s()) + "/2 is not in the coupling range [" +
                      std::to_string(lo) + "/2, " + std::to_string(hi) + "/2]");
  }
  const std::size_t dim = s1.dim() * s2.dim();
  const ComplexMatrix dot = spin_dot(s1, s2);
  const ComplexMatrix id = ComplexMatrix::identity(dim);
  const double lambda_n = spin_dot_eigenvalue(n, s1, s2);
  ComplexMatrix p = id;
  for (int two_k = lo; two_k <= hi; two_k += 2) {
    if (two_k == n.two_s()) continue;
    const double lambda_k = spin_dot_eigenvalue(SpinSystem(two_k), s1, s2);
    p = (1.0 / (lambda_n - lambda_k)) * (p * (dot - lambda_k * id));
  }
  return p;
}

HeisenbergSpectrum::HeisenbergSpectrum(SpinSystem s1, SpinSystem s2, std::vector<double> energies,
                                       double t)
    : s1_(s1), s2_(s2), energies_(std::move(energies)), t_(t) {
  require_ordered(s1, s2);
  if (energies_.size() != s1.dim()) {
    throw DomainError("HeisenbergSpectrum: expected " + std::to_string(s1.dim()) +
                      " energies, got " + std::to_string(energies_.size()));
  }
}

HeisenbergSpectrum HeisenbergSpectrum::isotropic(SpinSystem s1, SpinSystem s2, double t) {
  require_ordered(s1, s2);
  std::vector<double> e;
  for (int two_n = s2.two_s() - s1.two_s(); two_n <= s2.two_s() + s1.two_s(); two_n += 2)
    e.push_back(spin_dot_eigenvalue(SpinSystem(two_n), s1, s2));
  return {s1, s2, std::move(e), t};
}

SpinSystem HeisenbergSpectrum::total_spin(std::size_t k) const {
  return SpinSystem(s2_.two_s() - s1_.two_s() + 2 * static_cast<int>(k));
}

BipartiteOperator su2_evolution(const HeisenbergSpectrum& spectrum) {
  const std::size_t dim = spectrum.s1().dim() * spectrum.s2().dim();
  ComplexMatrix u(dim, dim);
  for (std::size_t k = 0; k < spectrum.energies().size(); ++k) {
    const cplx phase = std::polar(1.0, -spectrum.t() * spectrum.energies()[k]);
    u += phase * su2_projector(spectrum.total_spin(k), spectrum.s1(), spectrum.s2());
  }
  return {spectrum.s1().dim(), spectrum.s2().dim(), std::move(u)};
}

HeisenbergCoefficients heisenberg_coefficients(SpinSystem s2, double t) {
  require_qubit_partner(s2);
  const double d = static_cast<double>(s2.dim());
  const double e0 = -(d + 1.0) / 4.0;
  const double e1 = (d - 1.0) / 4.0;
  const cplx a0 = std::polar(1.0, -t * e0);
  const cplx a1 = std::polar(1.0, -t * e1);
  const cplx beta0 = ((d - 1.0) * a0 + (d + 1.0) * a1) / (2.0 * d);
  const cplx beta1 = 2.0 * (a1 - a0) / d;
  return {e0, e1, beta0, beta1, beta0 - e0 * beta1, beta0 - e1 * beta1};
}

RearrangementTraces heisenberg_trace_terms(SpinSystem s2, double t) {
  const HeisenbergCoefficients c = heisenberg_coefficients(s2, t);
  const double d = static_cast<double>(s2.dim());
  auto pow4 = [](cplx z) { return std::norm(z) * std::norm(z); };
  const double realigned =
      4.0 * d * d * pow4(c.beta0) + (d * d - 1.0) * (d * d - 1.0) * d * d * pow4(c.beta1) / 192.0;
  const double transposed = (d - 1.0) * pow4(c.gamma0) + (d + 1.0) * pow4(c.gamma1);
  return {realigned, transposed};
}

ProductTermSum heisenberg_decomposition(SpinSystem s2, double t) {
  const HeisenbergCoefficients c = heisenberg_coefficients(s2, t);
  const SpinSystem qubit(1);
  const SpinOperators a = spin_operators(qubit);
  const SpinOperators b = spin_operators(s2);
  ProductTermSum sum(qubit.dim(), s2.dim());
  sum.add(c.beta0, ComplexMatrix::identity(qubit.dim()), ComplexMatrix::identity(s2.dim()));
  sum.add(c.beta1, a.x, b.x);
  sum.add(c.beta1, a.y, b.y);
  sum.add(c.beta1, a.z, b.z);
  return sum;
}

double heisenberg_qubit_qudit_ep_analytic(SpinSystem s2, double t) {
  require_qubit_partner(s2);
  const double d = static_cast<double>(s2.dim());
  const double f = 2.0 * (6.0 - d + d * d * d);
  const double s = std::sin(d * t / 4.0);
  const double s2q = s * s;
  return 4.0 * (d - 1.0) / (9.0 * d * d * d * d) * (3.0 * d * d * d - f * s2q) * s2q;
}

double heisenberg_ep_time_average(SpinSystem s2) {
  require_qubit_partner(s2);
  const double d = static_cast<double>(s2.dim());
  return (d - 1.0) * (d * d * d + d - 6.0) / (3.0 * d * d * d * d);
}

double heisenberg_period(SpinSystem s2) {
  require_qubit_partner(s2);
  return 4.0 * std::numbers::pi / static_cast<double>(s2.dim());
}

}  // namespace entpow
