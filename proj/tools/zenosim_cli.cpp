// Copyright 2026 The Zenosim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// zenosim: run Zeno-based Hamiltonian simulation experiments and check them
// against their error and success-probability bounds.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zenosim/experiment.hpp"

namespace {

using namespace zenosim;

int code(ExitCode c) { return static_cast<int>(c); }

std::vector<Method> parse_methods(const std::vector<std::string>& names) {
  std::vector<Method> out;
  for (const auto& n : names) {
    try {
      out.push_back(method_from_string(n));
    } catch (const std::invalid_argument& e) {
      throw ExperimentError(ExitCode::kUsage, e.what());
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeno-based Hamiltonian simulation experiments"};
  app.set_version_flag("--version", "zenosim 0.1.0");

  std::vector<std::string> hamiltonians;
  std::string method;
  std::vector<std::string> compare;
  double t = 1.0;
  std::optional<std::int64_t> n;
  std::optional<double> epsilon;
  std::optional<std::string> mode;
  std::int64_t shots = 1000;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> sweep;
  std::optional<std::int64_t> psi0;
  std::string format = "csv";
  std::optional<std::string> out_path;

  app.add_option("--hamiltonian", hamiltonians, "Hamiltonian file; repeat to sum several files")->required();
  auto* method_opt = app.add_option("--method", method, "zeno1, zeno2, kicks, mub, qdrift or trotter1");
  auto* compare_opt =
      app.add_option("--compare", compare, "comma-separated methods to tabulate side by side")->delimiter(',');
  method_opt->excludes(compare_opt);
  app.add_option("--t", t, "evolution time")->required();
  auto* n_opt = app.add_option("--n", n, "number of Zeno steps");
  auto* eps_opt = app.add_option("--epsilon", epsilon, "target precision; N is derived from it");
  auto* sweep_opt = app.add_option("--sweep", sweep, "comma-separated N values")->delimiter(',');
  n_opt->excludes(eps_opt)->excludes(sweep_opt);
  eps_opt->excludes(sweep_opt);
  app.add_option("--mode", mode, "projected, sampled or channel")
      ->check(CLI::IsMember({"projected", "sampled", "channel"}));
  app.add_option("--shots", shots, "trajectories in sampled mode");
  app.add_option("--seed", seed, "base RNG seed");
  app.add_option("--psi0", psi0, "initial computational basis state index");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : code(ExitCode::kUsage);
  }

  try {
    if (method.empty() == compare.empty()) {
      throw ExperimentError(ExitCode::kUsage, "give exactly one of --method and --compare");
    }
    ExperimentConfig config;
    config.hamiltonian_paths.assign(hamiltonians.begin(), hamiltonians.end());
    config.methods = parse_methods(method.empty() ? compare : std::vector<std::string>{method});
    config.t = t;
    config.n = n;
    config.epsilon = epsilon;
    config.sweep = sweep;
    if (mode) config.mode = mode_from_string(*mode);
    config.shots = shots;
    config.seed = seed;
    config.psi0_index = psi0;
    config.format = format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
    if (out_path) config.output_path = *out_path;
    config.max_qubits = qubit_cap_from_env();

    bool ok = true;
    std::string text;
    if (config.methods.size() == 1 && method.size()) {
      const SweepResult r = run_experiment(config);
      ok = r.all_bounds_satisfied;
      text = format_results(r, config.format);
    } else {
      const CompareTable table = compare_methods(config);
      ok = table.all_bounds_satisfied;
      text = format_compare(table, config.format);
    }
    if (config.output_path) {
      std::ofstream f(*config.output_path, std::ios::binary | std::ios::trunc);
      if (!(f << text)) throw ExperimentError(ExitCode::kIo, "cannot write " + config.output_path->string());
    } else {
      std::cout << text;
    }
    if (!ok) {
      std::cerr << "zenosim: bound violated\n";
      return code(ExitCode::kBoundViolation);
    }
    return code(ExitCode::kOk);
  } catch (const ExperimentError& e) {
    std::cerr << "zenosim: " << e.what() << '\n';
    return code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "zenosim: " << e.what() << '\n';
    return code(ExitCode::kUsage);
  }
}
