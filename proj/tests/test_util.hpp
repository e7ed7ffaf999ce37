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

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "entpow/matrix.hpp"
#include "entpow/monte_carlo.hpp"

namespace entpow::testing {

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = {n(rng), n(rng)};
  return m;
}

inline BipartiteOperator random_unitary(std::size_t d1, std::size_t d2, std::mt19937_64& rng) {
  return BipartiteOperator::unitary(d1, d2, haar_unitary(d1 * d2, rng));
}

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  return e;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& e) {
  ComplexMatrix m(e.rows(), e.cols());
  for (Eigen::Index r = 0; r < e.rows(); ++r)
    for (Eigen::Index c = 0; c < e.cols(); ++c) m(r, c) = e(r, c);
  return m;
}

/// exp(-i t H) for Hermitian H from Eigen's self-adjoint eigensolver.
inline ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(h));
  const Eigen::VectorXcd phases =
      (std::complex<double>(0.0, -t) * es.eigenvalues().cast<std::complex<double>>()).array().exp();
  return from_eigen(es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint());
}

/// SWAP on C^d (x) C^d.
inline BipartiteOperator swap_operator(std::size_t d) {
  ComplexMatrix m(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(j * d + i, i * d + j) = 1.0;
  return {d, d, std::move(m)};
}

/// Column-major-in-rows flattening used by realignment: vec(A)[i * n + j] = A(i, j).
inline std::vector<cplx> row_vec(const ComplexMatrix& a) {
  return {a.entries().begin(), a.entries().end()};
}

}  // namespace entpow::testing
