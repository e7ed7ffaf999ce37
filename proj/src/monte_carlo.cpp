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

#include "entpow/monte_carlo.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "entpow/entangling_power.hpp"
#include "entpow/errors.hpp"

namespace entpow {

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

double sample_entropy(const BipartiteOperator& u, std::uint64_t seed, std::size_t k) {
  std::mt19937_64 rng(stream_seed(seed, k));
  std::vector<cplx> psi = u.matrix() * std::span<const cplx>(haar_product_state(u.d1(), u.d2(), rng));
  // Renormalize so operators accepted at a loose unitarity tolerance still
  // produce unit states.
  double norm_sq = 0.0;
  for (const cplx& z : psi) norm_sq += std::norm(z);
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (cplx& z : psi) z *= inv;
  return linear_entropy(psi, u.d1(), u.d2());
}

}  // namespace

MonteCarloEstimate monte_carlo_ep(const BipartiteOperator& u, std::size_t samples,
                                  std::uint64_t seed, unsigned threads, double unitarity_tol) {
  if (samples < 2) throw DomainError("monte_carlo_ep: need at least 2 samples, got " + std::to_string(samples));
  u.require_unitary(unitarity_tol);

  std::vector<double> values(samples);
  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, samples));
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) values[k] = sample_entropy(u, seed, k);
  };
  if (workers <= 1) {
    run(0, samples);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (samples + workers - 1) / workers;
    for (std::size_t begin = 0; begin < samples; begin += chunk)
      pool.emplace_back(run, begin, std::min(samples, begin + chunk));
  }

  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(samples);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double stddev = std::sqrt(ss / static_cast<double>(samples - 1));
  return {mean, stddev / std::sqrt(static_cast<double>(samples)), samples, seed};
}

}  // namespace entpow
