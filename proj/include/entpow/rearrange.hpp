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

/// Realignment: (U^R)_{ij,kl} = U_{ik,jl}. The result is d1^2 x d2^2 with
/// row i * d1 + j and column k * d2 + l.
ComplexMatrix realign(const BipartiteOperator& u);

/// Partial transpose on the first factor: (U^T1)_{ij,kl} = U_{kj,il}.
BipartiteOperator partial_transpose(const BipartiteOperator& u);

/// Partial time reversal exp(-i pi S1^y) U^T1 exp(i pi S1^y), where the
/// rotation acts on the first factor. Requires d1 = 2 s1 + 1.
BipartiteOperator partial_time_reversal(const BipartiteOperator& u, SpinSystem s1);

/// Tr[(M M^dagger)^2], evaluated as the squared Frobenius norm of the Gram
/// matrix M M^dagger. Throws NumericError on non-finite input.
double trace_power4(const ComplexMatrix& m);

}  // namespace entpow
