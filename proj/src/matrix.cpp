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

#include "entpow/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "entpow/errors.hpp"

namespace entpow {

namespace {

std::string shape_str(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": shape mismatch " + shape_str(a) + " vs " +
                     shape_str(b));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw ShapeError("ComplexMatrix: dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw ShapeError("ComplexMatrix: dimensions must be positive");
  if (entries_.size() != rows * cols) {
    throw ShapeError("ComplexMatrix: expected " + std::to_string(rows * cols) + " entries, got " +
                     std::to_string(entries_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

cplx ComplexMatrix::trace() const {
  if (!is_square()) throw ShapeError("trace: matrix is " + shape_str(*this));
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

double ComplexMatrix::frobenius_norm_sq() const noexcept {
  double s = 0.0;
  for (const cplx& z : entries_) s += std::norm(z);
  return s;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) noexcept {
  for (cplx& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx scale, ComplexMatrix a) { return a *= scale; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: " + shape_str(a) + " * " + shape_str(b));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::vector<cplx> operator*(const ComplexMatrix& a, std::span<const cplx> v) {
  if (a.cols() != v.size()) {
    throw ShapeError("matvec: " + shape_str(a) + " * vector of length " +
                     std::to_string(v.size()));
  }
  std::vector<cplx> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * v[k];
    out[i] = s;
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  return m;
}

double unitarity_residual(const ComplexMatrix& m) {
  if (!m.is_square()) throw ShapeError("unitarity_residual: matrix is " + shape_str(m));
  return max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(m.rows()));
}

cplx hilbert_schmidt(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "hilbert_schmidt");
  cplx s = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    s += std::conj(a.entries()[k]) * b.entries()[k];
  return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square() || !b.is_square()) {
    throw ShapeError("kron: factors must be square, got " + shape_str(a) + " and " +
                     shape_str(b));
  }
  const std::size_t n1 = a.rows();
  const std::size_t n2 = b.rows();
  ComplexMatrix out(n1 * n2, n1 * n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      const cplx aij = a(i, j);
      for (std::size_t al = 0; al < n2; ++al)
        for (std::size_t be = 0; be < n2; ++be) out(i * n2 + al, j * n2 + be) = aij * b(al, be);
    }
  return out;
}

BipartiteOperator::BipartiteOperator(std::size_t d1, std::size_t d2, ComplexMatrix matrix)
    : d1_(d1), d2_(d2), matrix_(std::move(matrix)) {
  if (d1 == 0 || d2 == 0) throw ShapeError("BipartiteOperator: factor dimensions must be positive");
  if (matrix_.rows() != d1 * d2 || matrix_.cols() != d1 * d2) {
    std::ostringstream msg;
    msg << "BipartiteOperator: " << d1 << "x" << d2 << " system needs a " << d1 * d2 << "x"
        << d1 * d2 << " matrix, got " << shape_str(matrix_);
    throw ShapeError(msg.str());
  }
}

BipartiteOperator BipartiteOperator::unitary(std::size_t d1, std::size_t d2, ComplexMatrix matrix,
                                             double tol) {
  BipartiteOperator u(d1, d2, std::move(matrix));
  u.require_unitary(tol);
  return u;
}

BipartiteOperator BipartiteOperator::identity(std::size_t d1, std::size_t d2) {
  return {d1, d2, ComplexMatrix::identity(d1 * d2)};
}

BipartiteOperator BipartiteOperator::product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return {a.rows(), b.rows(), kron(a, b)};
}

void BipartiteOperator::require_unitary(double tol) const {
  if (!matrix_.all_finite()) throw NumericError("operator has non-finite entries");
  const double residual = unitarity_residual(matrix_);
  if (!(residual <= tol)) {
    std::ostringstream msg;
    msg << "operator is not unitary: max |U^dagger U - I| = " << residual << " exceeds tolerance "
        << tol;
    throw DomainError(msg.str());
  }
}

BipartiteOperator operator*(const BipartiteOperator& a, const BipartiteOperator& b) {
  if (a.d1() != b.d1() || a.d2() != b.d2()) throw ShapeError("operator product: factor dims differ");
  return {a.d1(), a.d2(), a.matrix() * b.matrix()};
}

}  // namespace entpow
