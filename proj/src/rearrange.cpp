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

#include "entpow/rearrange.hpp"

#include <string>

#include "entpow/errors.hpp"

namespace entpow {

ComplexMatrix realign(const BipartiteOperator& u) {
  const std::size_t d1 = u.d1();
  const std::size_t d2 = u.d2();
  ComplexMatrix out(d1 * d1, d2 * d2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t k = 0; k < d2; ++k)
        for (std::size_t l = 0; l < d2; ++l) out(i * d1 + j, k * d2 + l) = u(i, k, j, l);
  return out;
}

BipartiteOperator partial_transpose(const BipartiteOperator& u) {
  const std::size_t d1 = u.d1();
  const std::size_t d2 = u.d2();
  ComplexMatrix out(d1 * d2, d1 * d2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d2; ++j)
      for (std::size_t k = 0; k < d1; ++k)
        for (std::size_t l = 0; l < d2; ++l) out(i * d2 + j, k * d2 + l) = u(k, j, i, l);
  return {d1, d2, std::move(out)};
}

BipartiteOperator partial_time_reversal(const BipartiteOperator& u, SpinSystem s1) {
  if (s1.dim() != u.d1()) {
    throw ShapeError("partial_time_reversal: spin " + std::to_string(s1.two_s()) +
                     "/2 has dimension " + std::to_string(s1.dim()) + " but d1 = " +
                     std::to_string(u.d1()));
  }
  const ComplexMatrix rot = kron(spin_rotation_pi_y(s1), ComplexMatrix::identity(u.d2()));
  const BipartiteOperator pt = partial_transpose(u);
  return {u.d1(), u.d2(), rot * pt.matrix() * rot.adjoint()};
}

double trace_power4(const ComplexMatrix& m) {
  if (!m.all_finite()) throw NumericError("trace_power4: non-finite matrix entries");
  return (m * m.adjoint()).frobenius_norm_sq();
}

}  // namespace entpow
