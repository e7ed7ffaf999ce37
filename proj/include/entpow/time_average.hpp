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

#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <sstream>

#include "entpow/errors.hpp"

namespace entpow {

/// Long-time average of e_p(t).
///
/// With a period hint P the trapezoid rule over exactly one period with
/// `steps` panels is used; for a smooth periodic integrand this is the plain
/// mean of f(kP/steps) and converges spectrally. Without a hint the
/// trapezoid average over [0, t_max] is returned.
template <std::invocable<double> F>
double time_average_ep(F&& ep_of_t, std::optional<double> period_hint, double t_max,
                       std::size_t steps) {
  if (steps < 2) throw DomainError("time_average_ep: need at least 2 panels");
  const bool periodic = period_hint.has_value();
  const double span = periodic ? *period_hint : t_max;
  if (!(span > 0.0) || !std::isfinite(span)) {
    throw DomainError(periodic ? "time_average_ep: period must be positive"
                               : "time_average_ep: t_max must be positive");
  }
  const double h = span / static_cast<double>(steps);
  auto sample = [&](std::size_t k) {
    const double t = static_cast<double>(k) * h;
    const double v = static_cast<double>(ep_of_t(t));
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "time_average_ep: non-finite sample at t = " << t;
      throw NumericError(msg.str());
    }
    return v;
  };
  double sum = 0.0;
  if (periodic) {
    for (std::size_t k = 0; k < steps; ++k) sum += sample(k);
    return sum / static_cast<double>(steps);
  }
  sum = 0.5 * (sample(0) + sample(steps));
  for (std::size_t k = 1; k < steps; ++k) sum += sample(k);
  return sum / static_cast<double>(steps);
}

}  // namespace entpow
