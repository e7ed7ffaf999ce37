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
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "entpow/matrix.hpp"

namespace entpow {

/// Haar-uniform unit vector in C^d: i.i.d. standard complex Gaussian
/// components, normalized.
template <typename Rng>
std::vector<cplx> haar_state(std::size_t d, Rng& rng) {
  std::normal_distribution<double> normal;
  std::vector<cplx> v(d);
  double norm_sq = 0.0;
  for (cplx& z : v) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = {re, im};
    norm_sq += re * re + im * im;
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (cplx& z : v) z *= inv;
  return v;
}

/// |psi1> (x) |psi2> with both factors Haar-uniform on their unit spheres.
template <typename Rng>
std::vector<cplx> haar_product_state(std::size_t d1, std::size_t d2, Rng& rng) {
  const std::vector<cplx> a = haar_state(d1, rng);
  const std::vector<cplx> b = haar_state(d2, rng);
  std::vector<cplx> out(d1 * d2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d2; ++j) out[i * d2 + j] = a[i] * b[j];
  return out;
}

/// Haar-random d x d unitary: Gram-Schmidt on the columns of a complex
/// Gaussian matrix, which is the QR factorization with a positive diagonal in R.
template <typename Rng>
ComplexMatrix haar_unitary(std::size_t d, Rng& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix q(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) q(r, c) = {normal(rng), normal(rng)};
  for (std::size_t c = 0; c < d; ++c) {
    // Two passes of modified Gram-Schmidt keep the columns orthogonal to ~1e-15.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t p = 0; p < c; ++p) {
        cplx overlap = 0.0;
        for (std::size_t r = 0; r < d; ++r) overlap += std::conj(q(r, p)) * q(r, c);
        for (std::size_t r = 0; r < d; ++r) q(r, c) -= overlap * q(r, p);
      }
    }
    double norm_sq = 0.0;
    for (std::size_t r = 0; r < d; ++r) norm_sq += std::norm(q(r, c));
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (std::size_t r = 0; r < d; ++r) q(r, c) *= inv;
  }
  return q;
}

/// SplitMix64 finalizer over (seed, index); seeds the per-sample stream.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept;

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Sample mean of the linear entropy of U |psi1 psi2> over Haar product
/// states. Sample k draws from std::mt19937_64(stream_seed(seed, k)) and the
/// per-sample values are reduced in index order, so the estimate is
/// bitwise-identical for any `threads` (0 = hardware concurrency).
MonteCarloEstimate monte_carlo_ep(const BipartiteOperator& u, std::size_t samples,
                                  std::uint64_t seed, unsigned threads = 0,
                                  double unitarity_tol = kUnitarityTol);

}  // namespace entpow
