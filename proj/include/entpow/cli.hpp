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
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entpow/errors.hpp"
#include "entpow/matrix.hpp"

namespace entpow::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidConfig = 2,
  kExitNumericFailure = 3,
};

/// Bad flags, inconsistent options or an unusable operator file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class Model { ising, heisenberg, generic };
enum class Method { analytic, matrix, mc, oracle };

Model parse_model(std::string_view name);
Method parse_method(std::string_view name);
std::string_view to_string(Model m) noexcept;
std::string_view to_string(Method m) noexcept;

/// Default unitarity tolerance for operator files.
inline constexpr double kFileUnitarityTol = 1e-8;
inline constexpr std::size_t kDefaultMcSamples = 10000;

// ---------------------------------------------------------------------------
// Operator files
//
//   d1 d2
//   <d1*d2 rows of d1*d2 whitespace-separated complex entries>
//
// Entries are `re+imj`, `re-imj`, `imj` or a bare real, row-major in the
// composite index (i, alpha) -> i * d2 + alpha.
// ---------------------------------------------------------------------------

cplx parse_complex(std::string_view token);
std::string format_complex(cplx z);

/// Parses and validates unitarity at `unitarity_tol`. Throws ConfigError on
/// malformed input and DomainError when the matrix is not unitary.
BipartiteOperator read_operator_file(std::istream& in, double unitarity_tol = kFileUnitarityTol);
BipartiteOperator load_operator_file(const std::string& path,
                                     double unitarity_tol = kFileUnitarityTol);
/// 17 significant digits, so reading back reproduces every entry exactly.
void write_operator_file(std::ostream& out, const BipartiteOperator& op);

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepConfig {
  Model model = Model::ising;
  std::size_t d1 = 2;
  std::size_t d2 = 2;
  double start = 0.0;
  double end = 6.283185307179586;
  std::size_t steps = 65;
  std::vector<Method> methods = {Method::matrix};
  std::size_t mc_samples = kDefaultMcSamples;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string operator_path;  ///< generic model only
  double unitarity_tol = kFileUnitarityTol;

  bool uses(Method m) const noexcept;
};

/// Throws ConfigError when the configuration is inconsistent. For the
/// generic model the dimensions are checked against `generic_op`.
void validate(const SweepConfig& config, const BipartiteOperator* generic_op = nullptr);

struct SweepRow {
  double param = 0.0;
  std::optional<double> analytic;
  std::optional<double> matrix;
  std::optional<double> mc;
  std::optional<double> mc_stderr;
  std::optional<double> oracle;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

inline constexpr std::string_view kSweepCsvHeader =
    "param,ep_analytic,ep_matrix,ep_mc,ep_mc_stderr,ep_oracle";

/// Grid point k of `steps` equally spaced points on [start, end].
double grid_point(const SweepConfig& config, std::size_t k);

/// Evaluates every requested method at each grid point. The generic model
/// evaluates the fixed operator from `operator_path` at every point. Row k's
/// Monte Carlo estimate uses seed stream_seed(config.seed, k).
SweepResult run_sweep(const SweepConfig& config);

void write_csv(std::ostream& out, const SweepResult& result);

// ---------------------------------------------------------------------------
// Commands. Each returns an ExitCode, writes results to `out` and
// diagnostics to `err`.
// ---------------------------------------------------------------------------

int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err);

struct TimeAverageConfig {
  Model model = Model::ising;
  std::size_t d1 = 2;
  std::size_t d2 = 2;
  bool numeric = false;
  std::size_t panels = 4096;
};

int cmd_time_average(const TimeAverageConfig& config, std::ostream& out, std::ostream& err);

struct EpConfig {
  std::string operator_path;
  std::vector<Method> methods = {Method::matrix};
  std::size_t mc_samples = kDefaultMcSamples;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  double unitarity_tol = kFileUnitarityTol;
};

/// Cross-check tolerances for `ep`: oracle within 1e-9, Monte Carlo within
/// five standard errors (never tighter than 1e-9).
inline constexpr double kOracleAgreementTol = 1e-9;
inline constexpr double kMcSigmas = 5.0;

int cmd_ep(const EpConfig& config, std::ostream& out, std::ostream& err);

}  // namespace entpow::cli
