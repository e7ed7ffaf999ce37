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

// entpow: entangling power of bipartite unitaries.
//
//   entpow sweep --model ising --d1 2 --d2 3 --from 0 --to 6.2832 --steps 65 --methods analytic,matrix
//   entpow time-average --model heisenberg --d1 2 --d2 3 --numeric
//   entpow ep gate.txt --methods matrix,oracle,mc

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "entpow/cli.hpp"

namespace {

using namespace entpow::cli;

std::vector<Method> parse_methods(const std::vector<std::string>& names) {
  std::vector<Method> out;
  for (const std::string& n : names) {
    const Method m = parse_method(n);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entangling power of unitaries on d1 x d2 systems"};
  app.require_subcommand(1);

  std::string model = "ising";
  std::vector<std::string> methods = {"matrix"};

  SweepConfig sweep;
  std::string out_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate e_p over a parameter grid as CSV");
  sweep_cmd->add_option("--model", model, "ising | heisenberg | generic")->capture_default_str();
  sweep_cmd->add_option("--d1", sweep.d1, "First factor dimension (2 s1 + 1)")->capture_default_str();
  sweep_cmd->add_option("--d2", sweep.d2, "Second factor dimension (2 s2 + 1)")->capture_default_str();
  sweep_cmd->add_option("--from", sweep.start, "Grid start (theta for ising, t for heisenberg)")->capture_default_str();
  sweep_cmd->add_option("--to", sweep.end, "Grid end, inclusive")->capture_default_str();
  sweep_cmd->add_option("--steps", sweep.steps, "Number of grid points")->capture_default_str();
  sweep_cmd->add_option("--methods", methods, "Comma-separated: analytic,matrix,mc,oracle")->delimiter(',');
  sweep_cmd->add_option("--mc-samples", sweep.mc_samples, "Monte Carlo samples per point")->capture_default_str();
  sweep_cmd->add_option("--seed", sweep.seed, "Monte Carlo seed")->capture_default_str();
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0 = all cores)")->capture_default_str();
  sweep_cmd->add_option("--operator", sweep.operator_path, "Operator file for the generic model");
  sweep_cmd->add_option("--unitarity-tol", sweep.unitarity_tol, "Unitarity tolerance for operator files")->capture_default_str();
  sweep_cmd->add_option("--out", out_path, "CSV output path (default: stdout)");

  TimeAverageConfig avg;
  auto* avg_cmd = app.add_subcommand("time-average", "Closed-form long-time average of e_p");
  avg_cmd->add_option("--model", model, "ising | heisenberg")->capture_default_str();
  avg_cmd->add_option("--d1", avg.d1, "First factor dimension")->capture_default_str();
  avg_cmd->add_option("--d2", avg.d2, "Second factor dimension")->capture_default_str();
  avg_cmd->add_flag("--numeric", avg.numeric, "Also print the one-period quadrature value");
  avg_cmd->add_option("--steps", avg.panels, "Quadrature panels for --numeric")->capture_default_str();

  EpConfig ep;
  auto* ep_cmd = app.add_subcommand("ep", "Entangling power of an operator file");
  ep_cmd->add_option("operator", ep.operator_path, "Operator file")->required();
  ep_cmd->add_option("--methods", methods, "Cross-checks: matrix,mc,oracle")->delimiter(',');
  ep_cmd->add_option("--mc-samples", ep.mc_samples, "Monte Carlo samples")->capture_default_str();
  ep_cmd->add_option("--seed", ep.seed, "Monte Carlo seed")->capture_default_str();
  ep_cmd->add_option("--threads", ep.threads, "Worker threads (0 = all cores)")->capture_default_str();
  ep_cmd->add_option("--unitarity-tol", ep.unitarity_tol, "Unitarity tolerance")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidConfig;
  }

  try {
    if (*sweep_cmd) {
      sweep.model = parse_model(model);
      sweep.methods = parse_methods(methods);
      if (out_path.empty()) return cmd_sweep(sweep, std::cout, std::cerr);
      std::ofstream file(out_path);
      if (!file) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return kExitInvalidConfig;
      }
      return cmd_sweep(sweep, file, std::cerr);
    }
    if (*avg_cmd) {
      avg.model = parse_model(model);
      return cmd_time_average(avg, std::cout, std::cerr);
    }
    ep.methods = parse_methods(methods);
    return cmd_ep(ep, std::cout, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
}
