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

#include <compare>
#include <cstddef>

#include "entpow/matrix.hpp"

namespace entpow {

/// Spin s = two_s / 2 with Hilbert-space dimension d = 2s + 1.
/// Basis vectors are ordered by magnetic quantum number m = s, s-1, ..., -s.
class SpinSystem {
 public:
  explicit SpinSystem(int two_s);
  static SpinSystem from_dimension(std::size_t d);

  int two_s() const noexcept { return two_s_; }
  double s() const noexcept { return 0.5 * two_s_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(two_s_) + 1; }
  /// Magnetic quantum number of basis index k.
  double m(std::size_t k) const noexcept { return s() - static_cast<double>(k); }

  auto operator<=>(const SpinSystem&) const = default;

 private:
  int two_s_;
};

struct SpinOperators {
  ComplexMatrix x;
  ComplexMatrix y;
  ComplexMatrix z;
};

SpinOperators spin_operators(SpinSystem s);

/// exp(-i pi S^y). Rotation by pi about y maps |m> to (-1)^(s-m) |-m>.
ComplexMatrix spin_rotation_pi_y(SpinSystem s);

/// S1 . S2 = sum_i S1^i (x) S2^i on the d1 d2 dimensional product space.
ComplexMatrix spin_dot(SpinSystem s1, SpinSystem s2);

}  // namespace entpow
