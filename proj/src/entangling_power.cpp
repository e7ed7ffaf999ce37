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

#include "entpow/entangling_power.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "entpow/errors.hpp"
#include "entpow/rearrange.hpp"

namespace entpow {

namespace {

constexpr double kRangeSlack = 1e-10;
constexpr double kImagResidueTol = 1e-10;

// Loose unitarity tolerances (operator files) widen the slack proportionally.
double checked_range(std::size_t d1, std::size_t d2, double ep, double unitarity_tol) {
  const double dim = static_cast<double>(d1 * d2);
  const double slack =
      unitarity_tol <= kUnitarityTol ? kRangeSlack : std::max(kRangeSlack, unitarity_tol * dim * dim);
  if (!std::isfinite(ep) || ep < -slack || ep > max_linear_entropy(d1, d2) + slack) {
    std::ostringstream msg;
    msg << "entangling power " << ep << " outside [0, " << max_linear_entropy(d1, d2) << "]";
    throw NumericError(msg.str());
  }
  return ep;
}

double combine(std::size_t d1, std::size_t d2, double trace_sum, double unitarity_tol) {
  const EpConstants c = EpConstants::for_dims(d1, d2);
  return checked_range(d1, d2, c.f - c.g * trace_sum, unitarity_tol);
}

double real_part_checked(cplx z, const char* what) {
  if (std::abs(z.imag()) > kImagResidueTol * std::max(1.0, std::abs(z.real()))) {
    std::ostringstream msg;
    msg << what << ": imaginary residue " << z.imag();
    throw NumericError(msg.str());
  }
  return z.real();
}

}  // namespace

EpConstants EpConstants::for_dims(std::size_t d1, std::size_t d2) {
  if (d1 == 0 || d2 == 0) throw ShapeError("EpConstants: dimensions must be positive");
  const double a = static_cast<double>(d1);
  const double b = static_cast<double>(d2);
  return {(a * b + 1.0) / ((a + 1.0) * (b + 1.0)), 1.0 / (a * b * (a + 1.0) * (b + 1.0))};
}

double max_linear_entropy(std::size_t d1, std::size_t d2) {
  return 1.0 - 1.0 / static_cast<double>(std::min(d1, d2));
}

double linear_entropy(std::span<const cplx> psi, std::size_t d1, std::size_t d2,
                      double norm_tol) {
  if (d1 == 0 || d2 == 0 || psi.size() != d1 * d2) {
    throw ShapeError("linear_entropy: state of length " + std::to_string(psi.size()) +
                     " does not match " + std::to_string(d1) + "x" + std::to_string(d2));
  }
  double norm_sq = 0.0;
  for (const cplx& z : psi) norm_sq += std::norm(z);
  if (!std::isfinite(norm_sq)) throw NumericError("linear_entropy: non-finite state");
  if (std::abs(std::sqrt(norm_sq) - 1.0) > norm_tol) {
    std::ostringstream msg;
    msg << "linear_entropy: state norm " << std::sqrt(norm_sq) << " is not 1";
    throw DomainError(msg.str());
  }
  // rho1(i, j) = sum_alpha psi(i, alpha) conj(psi(j, alpha)); Tr rho1^2 = sum |rho1(i, j)|^2.
  double purity = 0.0;
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d1; ++j) {
      cplx r = 0.0;
      for (std::size_t a = 0; a < d2; ++a) r += psi[i * d2 + a] * std::conj(psi[j * d2 + a]);
      purity += std::norm(r);
    }
  }
  return std::max(0.0, 1.0 - purity);
}

RearrangementTraces rearrangement_traces(const BipartiteOperator& u) {
  return {trace_power4(realign(u)), trace_power4(partial_transpose(u).matrix())};
}

double entangling_power(const BipartiteOperator& u, double unitarity_tol) {
  u.require_unitary(unitarity_tol);
  const RearrangementTraces t = rearrangement_traces(u);
  return combine(u.d1(), u.d2(), t.realigned + t.partial_transposed, unitarity_tol);
}

ComplexMatrix doubled_space_swap(std::size_t d1, std::size_t d2, int a, int b) {
  if (a > b) std::swap(a, b);
  if (!((a == 1 && b == 3) || (a == 2 && b == 4))) {
    throw DomainError("doubled_space_swap: only factor pairs (1,3) and (2,4) have equal dimensions");
  }
  const std::size_t n = d1 * d2 * d1 * d2;
  ComplexMatrix t(n, n);
  // |i j k l> has index ((i d2 + j) d1 + k) d2 + l, matching kron(U, U).
  auto index = [d1, d2](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return ((i * d2 + j) * d1 + k) * d2 + l;
  };
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d2; ++j)
      for (std::size_t k = 0; k < d1; ++k)
        for (std::size_t l = 0; l < d2; ++l) {
          const std::size_t from = index(i, j, k, l);
          const std::size_t to = (a == 1) ? index(k, j, i, l) : index(i, l, k, j);
          t(to, from) = 1.0;
        }
  return t;
}

double entangling_power_permutation_oracle(const BipartiteOperator& u, double unitarity_tol) {
  const std::size_t d1 = u.d1();
  const std::size_t d2 = u.d2();
  if (u.dim() > kPermutationOracleMaxDim) {
    throw CapacityError("permutation oracle: d1*d2 = " + std::to_string(u.dim()) +
                        " exceeds the limit " + std::to_string(kPermutationOracleMaxDim));
  }
  u.require_unitary(unitarity_tol);

  const ComplexMatrix t13 = doubled_space_swap(d1, d2, 1, 3);
  const ComplexMatrix t24 = doubled_space_swap(d1, d2, 2, 4);
  const double tr13 = t13.trace().real();
  const double tr24 = t24.trace().real();
  if (tr13 != static_cast<double>(d1 * d2 * d2) || tr24 != static_cast<double>(d1 * d1 * d2)) {
    throw NumericError("permutation oracle: swap traces inconsistent with dimensions");
  }

  const ComplexMatrix uu = kron(u.matrix(), u.matrix());
  const ComplexMatrix uu_t13 = uu * t13;
  double sum_i = 0.0;
  for (const auto& [t, tr] : {std::pair{&t13, tr13}, std::pair{&t24, tr24}}) {
    sum_i += tr + real_part_checked(hilbert_schmidt(uu, *t * uu_t13), "permutation oracle");
  }
  const double a = static_cast<double>(d1);
  const double b = static_cast<double>(d2);
  const double c1c2 = 1.0 / (a * (a + 1.0) * b * (b + 1.0));
  return checked_range(d1, d2, 1.0 - c1c2 * sum_i, unitarity_tol);
}

ProductTermSum::ProductTermSum(std::size_t d1, std::size_t d2) : d1_(d1), d2_(d2) {
  if (d1 == 0 || d2 == 0) throw ShapeError("ProductTermSum: dimensions must be positive");
}

void ProductTermSum::add(cplx coeff, ComplexMatrix a, ComplexMatrix b) {
  if (a.rows() != d1_ || a.cols() != d1_ || b.rows() != d2_ || b.cols() != d2_) {
    throw ShapeError("ProductTermSum: term factors must be " + std::to_string(d1_) + "x" +
                     std::to_string(d1_) + " and " + std::to_string(d2_) + "x" +
                     std::to_string(d2_));
  }
  terms_.push_back({coeff, std::move(a), std::move(b)});
}

BipartiteOperator ProductTermSum::materialize() const {
  ComplexMatrix m(d1_ * d2_, d1_ * d2_);
  for (const ProductTerm& t : terms_) m += t.coeff * kron(t.a, t.b);
  return {d1_, d2_, std::move(m)};
}

namespace {

// tr2[i][j] = Tr[X_i X_j^+], tr4[((i n + j) n + k) n + l] = Tr[X_i X_j^+ X_k X_l^+].
struct FactorTraces {
  std::size_t n;
  std::vector<cplx> tr2;
  std::vector<cplx> tr4;

  cplx two(std::size_t i, std::size_t j) const { return tr2[i * n + j]; }
  cplx four(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return tr4[((i * n + j) * n + k) * n + l];
  }
};

template <typename Get>
FactorTraces factor_traces(const std::vector<ProductTerm>& terms, Get get) {
  const std::size_t n = terms.size();
  FactorTraces ft{n, std::vector<cplx>(n * n), std::vector<cplx>(n * n * n * n)};
  std::vector<ComplexMatrix> pair(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      pair[i * n + j] = get(terms[i]) * get(terms[j]).adjoint();
      ft.tr2[i * n + j] = pair[i * n + j].trace();
    }
  for (std::size_t p = 0; p < n * n; ++p)
    for (std::size_t q = 0; q < n * n; ++q) {
      // Tr(P Q) without forming the product.
      const ComplexMatrix& a = pair[p];
      const ComplexMatrix& b = pair[q];
      cplx s = 0.0;
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) s += a(r, c) * b(c, r);
      ft.tr4[p * n * n + q] = s;
    }
  return ft;
}

}  // namespace

RearrangementTraces rearrangement_traces(const ProductTermSum& sum) {
  const auto& terms = sum.terms();
  const std::size_t n = terms.size();
  const FactorTraces a = factor_traces(terms, [](const ProductTerm& t) -> const ComplexMatrix& { return t.a; });
  const FactorTraces b = factor_traces(terms, [](const ProductTerm& t) -> const ComplexMatrix& { return t.b; });

  cplx realigned = 0.0;
  cplx transposed = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const cplx c = terms[i].coeff * std::conj(terms[j].coeff) * terms[k].coeff *
                         std::conj(terms[l].coeff);
          realigned += c * a.two(i, j) * a.two(k, l) * b.two(i, l) * b.two(k, j);
          transposed += c * a.four(i, j, k, l) * b.four(i, l, k, j);
        }
  return {real_part_checked(realigned, "decomposition realigned trace"),
          real_part_checked(transposed, "decomposition partial-transpose trace")};
}

double entangling_power_from_decomposition(const ProductTermSum& sum, double unitarity_tol) {
  if (sum.terms().empty()) throw DomainError("decomposition has no terms");
  if (sum.d1() * sum.d2() <= kDecompositionCheckMaxDim) sum.materialize().require_unitary(unitarity_tol);
  const RearrangementTraces t = rearrangement_traces(sum);
  return combine(sum.d1(), sum.d2(), t.realigned + t.partial_transposed, unitarity_tol);
}

}  // namespace entpow
