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
#include <span>
#include <vector>

#include "entpow/matrix.hpp"

namespace entpow {

/// Dimension-dependent constants of the entangling-power formula:
///   e_p(U) = F - G * (Tr[(U^R U^R+)^2] + Tr[(U^T1 U^T1+)^2]).
struct EpConstants {
  double f;
  double g;

  static EpConstants for_dims(std::size_t d1, std::size_t d2);
};

/// Largest linear entropy a pure state on d1 x d2 can have, 1 - 1/min(d1, d2).
double max_linear_entropy(std::size_t d1, std::size_t d2);

/// 1 - Tr(rho1^2) for the pure state psi, rho1 = Tr_2 |psi><psi|.
/// psi must be normalized to within `norm_tol` (DomainError otherwise).
double linear_entropy(std::span<const cplx> psi, std::size_t d1, std::size_t d2,
                      double norm_tol = 1e-10);

/// Entangling power from the realigned and partially transposed operator.
/// Throws DomainError for non-unitary input and NumericError when the result
/// falls outside [0, 1 - 1/min(d1, d2)] by more than round-off.
double entangling_power(const BipartiteOperator& u, double unitarity_tol = kUnitarityTol);

/// Largest d1 * d2 accepted by the permutation-operator oracle.
inline constexpr std::size_t kPermutationOracleMaxDim = 16;

/// Entangling power from the permutation-operator average over the doubled
/// space H (x) H: builds T13, T24 and U (x) U explicitly and evaluates the
/// Hilbert-Schmidt products. Validation oracle only; CapacityError if
/// d1 * d2 > kPermutationOracleMaxDim.
double entangling_power_permutation_oracle(const BipartiteOperator& u,
                                           double unitarity_tol = kUnitarityTol);

/// Permutation matrix exchanging tensor factors `a` and `b` (1-based) of
/// (C^d1 (x) C^d2) (x) (C^d1 (x) C^d2). Only (1,3) and (2,4) are meaningful.
ComplexMatrix doubled_space_swap(std::size_t d1, std::size_t d2, int a, int b);

struct ProductTerm {
  cplx coeff;
  ComplexMatrix a;
  ComplexMatrix b;
};

/// U = sum_i c_i A_i (x) B_i.
class ProductTermSum {
 public:
  ProductTermSum(std::size_t d1, std::size_t d2);

  void add(cplx coeff, ComplexMatrix a, ComplexMatrix b);

  std::size_t d1() const noexcept { return d1_; }
  std::size_t d2() const noexcept { return d2_; }
  const std::vector<ProductTerm>& terms() const noexcept { return terms_; }

  BipartiteOperator materialize() const;

 private:
  std::size_t d1_;
  std::size_t d2_;
  std::vector<ProductTerm> terms_;
};

/// The two trace terms of the entangling-power formula.
struct RearrangementTraces {
  double realigned;           ///< Tr[(U^R U^R+)^2]
  double partial_transposed;  ///< Tr[(U^T1 U^T1+)^2]
};

RearrangementTraces rearrangement_traces(const BipartiteOperator& u);

/// Trace terms evaluated from a product decomposition using only traces of
/// products of the small factors.
RearrangementTraces rearrangement_traces(const ProductTermSum& sum);

/// Largest d1 * d2 for which the decomposition is materialized to check unitarity.
inline constexpr std::size_t kDecompositionCheckMaxDim = 64;

double entangling_power_from_decomposition(const ProductTermSum& sum,
                                           double unitarity_tol = kUnitarityTol);

}  // namespace entpow
