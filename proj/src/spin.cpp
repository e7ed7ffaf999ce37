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

#include "entpow/spin.hpp"

#include <cmath>
#include <string>

#include "entpow/errors.hpp"

namespace entpow {

SpinSystem::SpinSystem(int two_s) : two_s_(two_s) {
  if (two_s < 0) throw DomainError("SpinSystem: 2s must be nonnegative, got " + std::to_string(two_s));
}

SpinSystem SpinSystem::from_dimension(std::size_t d) {
  if (d == 0) throw DomainError("SpinSystem: dimension must be positive");
  return SpinSystem(static_cast<int>(d) - 1);
}

SpinOperators spin_operators(SpinSystem s) {
  const std::size_t d = s.dim();
  const double ss1 = s.s() * (s.s() + 1.0);
  ComplexMatrix raise(d, d);
  ComplexMatrix sz(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const double m = s.m(k);
    sz(k, k) = m;
    // S+ |m> = sqrt(s(s+1) - m(m+1)) |m+1>, and m+1 sits at index k-1.
    if (k > 0) raise(k - 1, k) = std::sqrt(ss1 - m * (m + 1.0));
  }
  const ComplexMatrix lower = raise.adjoint();
  ComplexMatrix sx = 0.5 * (raise + lower);
  ComplexMatrix sy = cplx(0.0, -0.5) * (raise - lower);
  return {std::move(sx), std::move(sy), std::move(sz)};
}

ComplexMatrix spin_rotation_pi_y(SpinSystem s) {
  const std::size_t d = s.dim();
  ComplexMatrix r(d, d);
  for (std::size_t k = 0; k < d; ++k) r(d - 1 - k, k) = (k % 2 == 0) ? 1.0 : -1.0;
  return r;
}

ComplexMatrix spin_dot(SpinSystem s1, SpinSystem s2) {
  const SpinOperators a = spin_operators(s1);
  const SpinOperators b = spin_operators(s2);
  return kron(a.x, b.x) + kron(a.y, b.y) + kron(a.z, b.z);
}

}  // namespace entpow
