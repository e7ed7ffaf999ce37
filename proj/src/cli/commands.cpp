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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include "entpow/cli.hpp"
#include "entpow/entangling_power.hpp"
#include "entpow/heisenberg.hpp"
#include "entpow/ising.hpp"
#include "entpow/monte_carlo.hpp"
#include "entpow/time_average.hpp"

namespace entpow::cli {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SpinSystem spin_of(std::size_t d) { return SpinSystem::from_dimension(d); }

BipartiteOperator model_operator(const SweepConfig& c, double param) {
  switch (c.model) {
    case Model::ising:
      return ising_evolution({spin_of(c.d1), spin_of(c.d2), param});
    case Model::heisenberg:
      return su2_evolution(HeisenbergSpectrum::isotropic(spin_of(c.d1), spin_of(c.d2), param));
    case Model::generic:
      break;
  }
  throw ConfigError("generic model has no parametrized operator");
}

double model_analytic(const SweepConfig& c, double param) {
  if (c.model == Model::ising) return ising_ep_analytic({spin_of(c.d1), spin_of(c.d2), param});
  return heisenberg_qubit_qudit_ep_analytic(spin_of(c.d2), param);
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const Error& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumericFailure;
  }
}

}  // namespace

Model parse_model(std::string_view name) {
  if (name == "ising") return Model::ising;
  if (name == "heisenberg") return Model::heisenberg;
  if (name == "generic") return Model::generic;
  throw ConfigError("unknown model '" + std::string(name) + "' (expected ising, heisenberg or generic)");
}

Method parse_method(std::string_view name) {
  if (name == "analytic") return Method::analytic;
  if (name == "matrix") return Method::matrix;
  if (name == "mc" || name == "monte-carlo") return Method::mc;
  if (name == "oracle" || name == "permutation-oracle") return Method::oracle;
  throw ConfigError("unknown method '" + std::string(name) +
                    "' (expected analytic, matrix, mc or oracle)");
}

std::string_view to_string(Model m) noexcept {
  switch (m) {
    case Model::ising: return "ising";
    case Model::heisenberg: return "heisenberg";
    case Model::generic: return "generic";
  }
  return "?";
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::analytic: return "analytic";
    case Method::matrix: return "matrix";
    case Method::mc: return "mc";
    case Method::oracle: return "oracle";
  }
  return "?";
}

bool SweepConfig::uses(Method m) const noexcept {
  return std::find(methods.begin(), methods.end(), m) != methods.end();
}

void validate(const SweepConfig& c, const BipartiteOperator* generic_op) {
  if (c.methods.empty()) throw ConfigError("at least one method is required");
  if (c.steps < 1) throw ConfigError("--steps must be at least 1");
  if (!std::isfinite(c.start) || !std::isfinite(c.end)) throw ConfigError("range must be finite");
  if (c.end < c.start) throw ConfigError("--to must not be smaller than --from");
  if (c.uses(Method::mc) && c.mc_samples < 2) throw ConfigError("--mc-samples must be at least 2");

  std::size_t d1 = c.d1;
  std::size_t d2 = c.d2;
  if (c.model == Model::generic) {
    if (c.operator_path.empty()) throw ConfigError("the generic model needs --operator <file>");
    if (c.uses(Method::analytic)) throw ConfigError("method 'analytic' is only available for ising and heisenberg");
    if (generic_op != nullptr) {
      d1 = generic_op->d1();
      d2 = generic_op->d2();
    }
  } else {
    if (d1 == 0 || d2 == 0) throw ConfigError("--d1 and --d2 must be positive");
    if (c.model == Model::heisenberg) {
      if (d1 > d2) throw ConfigError("heisenberg needs d1 <= d2 (s1 <= s2)");
      if (c.uses(Method::analytic) && d1 != 2) {
        throw ConfigError("heisenberg 'analytic' needs d1 = 2 (qubit-qudit)");
      }
    }
  }
  if (c.uses(Method::oracle) && (c.model != Model::generic || generic_op != nullptr) &&
      d1 * d2 > kPermutationOracleMaxDim) {
    throw ConfigError("method 'oracle' needs d1*d2 <= " + std::to_string(kPermutationOracleMaxDim));
  }
}

double grid_point(const SweepConfig& c, std::size_t k) {
  if (c.steps <= 1) return c.start;
  if (k + 1 == c.steps) return c.end;
  return c.start + (c.end - c.start) * static_cast<double>(k) / static_cast<double>(c.steps - 1);
}

SweepResult run_sweep(const SweepConfig& c) {
  std::optional<BipartiteOperator> generic;
  if (c.model == Model::generic) {
    validate(c);
    generic = load_operator_file(c.operator_path, c.unitarity_tol);
  }
  validate(c, generic ? &*generic : nullptr);
  // Model operators are exact to round-off; file operators keep their own tolerance.
  const double tol = generic ? c.unitarity_tol : kUnitarityTol;

  SweepResult result;
  result.rows.reserve(c.steps);
  for (std::size_t k = 0; k < c.steps; ++k) {
    SweepRow row;
    row.param = grid_point(c, k);
    const BipartiteOperator u = generic ? *generic : model_operator(c, row.param);
    if (c.uses(Method::analytic)) row.analytic = model_analytic(c, row.param);
    if (c.uses(Method::matrix)) row.matrix = entangling_power(u, tol);
    if (c.uses(Method::mc)) {
      const MonteCarloEstimate est = monte_carlo_ep(u, c.mc_samples, stream_seed(c.seed, k), c.threads, tol);
      row.mc = est.mean;
      row.mc_stderr = est.std_error;
    }
    if (c.uses(Method::oracle)) row.oracle = entangling_power_permutation_oracle(u, tol);
    result.rows.push_back(row);
  }
  return result;
}

void write_csv(std::ostream& out, const SweepResult& result) {
  out << kSweepCsvHeader << '\n';
  auto field = [&out](const std::optional<double>& v) {
    out << ',';
    if (v) out << fmt(*v);
  };
  for (const SweepRow& row : result.rows) {
    out << fmt(row.param);
    field(row.analytic);
    field(row.matrix);
    field(row.mc);
    field(row.mc_stderr);
    field(row.oracle);
    out << '\n';
  }
}

int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SweepResult result = run_sweep(config);
    write_csv(out, result);
    return int{kExitOk};
  });
}

int cmd_time_average(const TimeAverageConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (c.d1 == 0 || c.d2 == 0) throw ConfigError("--d1 and --d2 must be positive");
    if (c.panels < 2) throw ConfigError("need at least 2 quadrature panels");
    double closed = 0.0;
    double numeric = 0.0;
    switch (c.model) {
      case Model::ising: {
        const SpinSystem s1 = spin_of(c.d1);
        const SpinSystem s2 = spin_of(c.d2);
        closed = ising_ep_time_average(s1, s2);
        if (c.numeric) {
          numeric = time_average_ep(
              [&](double theta) { return ising_ep_analytic({s1, s2, theta}); }, kIsingPeriod, 0.0,
              c.panels);
        }
        break;
      }
      case Model::heisenberg: {
        if (c.d1 != 2) throw ConfigError("heisenberg time average is available for d1 = 2 only");
        if (c.d2 < 2) throw ConfigError("heisenberg time average needs d2 >= 2");
        const SpinSystem s2 = spin_of(c.d2);
        closed = heisenberg_ep_time_average(s2);
        if (c.numeric) {
          numeric = time_average_ep(
              [&](double t) { return heisenberg_qubit_qudit_ep_analytic(s2, t); },
              heisenberg_period(s2), 0.0, c.panels);
        }
        break;
      }
      case Model::generic:
        throw ConfigError("time-average supports the ising and heisenberg models only");
    }
    out << fmt(closed) << '\n';
    if (c.numeric) {
      out << "numeric=" << fmt(numeric) << '\n';
      out << "abs_diff=" << fmt(std::abs(numeric - closed)) << '\n';
    }
    return int{kExitOk};
  });
}

int cmd_ep(const EpConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto uses = [&c](Method m) { return std::find(c.methods.begin(), c.methods.end(), m) != c.methods.end(); };
    if (uses(Method::analytic)) throw ConfigError("method 'analytic' is not available for operator files");
    if (uses(Method::mc) && c.mc_samples < 2) throw ConfigError("--mc-samples must be at least 2");
    const BipartiteOperator u = load_operator_file(c.operator_path, c.unitarity_tol);
    if (uses(Method::oracle) && u.dim() > kPermutationOracleMaxDim) {
      throw ConfigError("method 'oracle' needs d1*d2 <= " + std::to_string(kPermutationOracleMaxDim));
    }

    const double ep = entangling_power(u, c.unitarity_tol);
    out << "ep_matrix=" << fmt(ep) << '\n';
    bool consistent = true;
    if (uses(Method::oracle)) {
      const double oracle = entangling_power_permutation_oracle(u, c.unitarity_tol);
      const double diff = std::abs(oracle - ep);
      out << "ep_oracle=" << fmt(oracle) << '\n';
      out << "oracle_abs_diff=" << fmt(diff) << '\n';
      if (diff > kOracleAgreementTol) {
        err << "inconsistent: permutation oracle differs from matrix formula by " << fmt(diff) << '\n';
        consistent = false;
      }
    }
    if (uses(Method::mc)) {
      const MonteCarloEstimate est = monte_carlo_ep(u, c.mc_samples, c.seed, c.threads, c.unitarity_tol);
      const double diff = std::abs(est.mean - ep);
      out << "ep_mc=" << fmt(est.mean) << '\n';
      out << "ep_mc_stderr=" << fmt(est.std_error) << '\n';
      if (diff > std::max(kMcSigmas * est.std_error, kOracleAgreementTol)) {
        err << "inconsistent: Monte Carlo mean differs from matrix formula by " << fmt(diff) << " ("
            << fmt(diff / est.std_error) << " standard errors)\n";
        consistent = false;
      }
    }
    return consistent ? int{kExitOk} : int{kExitNumericFailure};
  });
}

}  // namespace entpow::cli
