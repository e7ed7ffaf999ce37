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

#include "entpow/ising.hpp"

#include <cmath>
#include <vector>

#include "entpow/entangling_power.hpp"

namespace entpow {

BipartiteOperator ising_evolution(const IsingParams& p) {
  const std::size_t d1 = p.s1.dim();
  const std::size_t d2 = p.s2.dim();
  std::vector<cplx> diag(d1 * d2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t a = 0; a < d2; ++a)
      diag[i * d2 + a] = std::polar(1.0, p.theta * p.s1.m(i) * p.s2.m(a));
  return {d1, d2, ComplexMatrix::diagonal(diag)};
}

double sin_ratio_sq(double n, double x) {
  const double den = std::sin(x);
  if (std::abs(den) < 1e-8) return n * n;
  const double num = std::sin(n * x);
  return (num * num) / (den * den);
}

double ising_trace_term(const IsingParams& p) {
  const double d1 = static_cast<double>(p.s1.dim());
  const double d2 = static_cast<double>(p.s2.dim());
  double sum = d1 * d2 * d2;
  for (std::size_t m = 1; m < p.s1.dim(); ++m) {
    const double mm = static_cast<double>(m);
    sum += 2.0 * (d1 - mm) * sin_ratio_sq(d2, 0.5 * mm * p.theta);
  }
  return sum;
}

double ising_ep_analytic(const IsingParams& p) {
  const double d1 = static_cast<double>(p.s1.dim());
  const double d2 = static_cast<double>(p.s2.dim());
  const EpConstants c = EpConstants::for_dims(p.s1.dim(), p.s2.dim());
  // U^T1 = U for a diagonal operator, so the partial-transpose trace is d1 d2.
  const double lead = (d1 - 1.0) * d2 / ((d1 + 1.0) * (d2 + 1.0));
  return lead - c.g * (ising_trace_term(p) - d1 * d2 * d2);
}

double ising_qubit_qudit_ep_analytic(SpinSystem s2, double theta) {
  const double d = static_cast<double>(s2.dim());
  return d / (3.0 * (d + 1.0)) - sin_ratio_sq(d, 0.5 * theta) / (3.0 * d * (d + 1.0));
}

double ising_ep_time_average(SpinSystem s1, SpinSystem s2) {
  const double d1 = static_cast<double>(s1.dim());
  const double d2 = static_cast<double>(s2.dim());
  return (1.0 - 2.0 / (d1 + 1.0)) * (1.0 - 2.0 / (d2 + 1.0));
}

}  // namespace entpow
