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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace entpow {

using cplx = std::complex<double>;

/// Max-entry tolerance for U^dagger U = I.
inline constexpr double kUnitarityTol = 1e-10;

/// Dense complex matrix, row-major: entry (r, c) lives at r * cols + c.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix. Both dimensions must be positive.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const cplx> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  cplx& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept {
    return entries_[r * cols_ + c];
  }

  std::span<const cplx> entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  cplx trace() const;
  bool all_finite() const noexcept;
  /// Sum of |a_ij|^2.
  double frobenius_norm_sq() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scale) noexcept;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<cplx> operator*(const ComplexMatrix& a, std::span<const cplx> v);

/// Largest |a_ij - b_ij|. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |(M^dagger M - I)_ij|; M must be square.
double unitarity_residual(const ComplexMatrix& m);

/// Hilbert-Schmidt product Tr(A^dagger B).
cplx hilbert_schmidt(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product of square matrices. Entry ((i,alpha),(j,beta)) of the
/// result, with composite index i * dim(B) + alpha, is A(i,j) * B(alpha,beta).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Operator on C^d1 (x) C^d2 stored as a (d1 d2) x (d1 d2) matrix.
/// Composite index (i, alpha) -> i * d2 + alpha; Latin indices belong to the
/// first factor and Greek indices to the second.
class BipartiteOperator {
 public:
  BipartiteOperator(std::size_t d1, std::size_t d2, ComplexMatrix matrix);

  /// Same as the constructor, plus a unitarity check at `tol` (DomainError).
  static BipartiteOperator unitary(std::size_t d1, std::size_t d2, ComplexMatrix matrix,
                                   double tol = kUnitarityTol);
  static BipartiteOperator identity(std::size_t d1, std::size_t d2);
  /// A (x) B with d1 = dim(A), d2 = dim(B).
  static BipartiteOperator product(const ComplexMatrix& a, const ComplexMatrix& b);

  std::size_t d1() const noexcept { return d1_; }
  std::size_t d2() const noexcept { return d2_; }
  std::size_t dim() const noexcept { return d1_ * d2_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

  /// Entry <i alpha| U |j beta>.
  cplx operator()(std::size_t i, std::size_t alpha, std::size_t j, std::size_t beta) const noexcept {
    return matrix_(i * d2_ + alpha, j * d2_ + beta);
  }

  void require_unitary(double tol = kUnitarityTol) const;

 private:
  std::size_t d1_;
  std::size_t d2_;
  ComplexMatrix matrix_;
};

BipartiteOperator operator*(const BipartiteOperator& a, const BipartiteOperator& b);

}  // namespace entpow
