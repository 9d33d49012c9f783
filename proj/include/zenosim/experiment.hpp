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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zenosim/bounds.hpp"
#include "zenosim/hamiltonian.hpp"
#include "zenosim/zeno.hpp"

namespace zenosim {

enum class ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kLimits = 3,
  kBoundViolation = 4,
  kIo = 5,
};

class ExperimentError : public std::runtime_error {
 public:
  ExperimentError(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

enum class Mode { kProjected, kSampled, kChannel };
enum class OutputFormat { kJson, kCsv };

std::string to_string(Mode m);
Mode mode_from_string(const std::string& name);

inline constexpr std::size_t kMaxQubits = 6;
inline constexpr std::size_t kMaxTerms = 32;

struct ExperimentConfig {
  /// Files are concatenated with '+'. Ignored when hamiltonian_text is set.
  std::vector<std::filesystem::path> hamiltonian_paths;
  std::optional<std::string> hamiltonian_text;
  /// One method for run_experiment; two or more for compare_methods.
  std::vector<Method> methods;
  double t = 1.0;
  /// Exactly one of n, epsilon and sweep must be set.
  std::optional<std::int64_t> n;
  std::optional<double> epsilon;
  std::vector<std::int64_t> sweep;
  /// Defaults to channel for qdrift and projected otherwise.
  std::optional<Mode> mode;
  std::int64_t shots = 1000;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> psi0_index;
  std::optional<std::vector<Complex>> psi0_amplitudes;
  OutputFormat format = OutputFormat::kCsv;
  std::optional<std::filesystem::path> output_path;
  /// Qubit cap; may be lowered below kMaxQubits, never raised.
  std::size_t max_qubits = kMaxQubits;
};

/// Reads ZENOSIM_MAX_QUBITS. Values above kMaxQubits are ignored; anything
/// that is not a positive integer is a usage error.
std::size_t qubit_cap_from_env();

/// One measured point. The same record carries Zeno runs and the QDRIFT and
/// Trotter baselines (whose p_succ fields are 1).
using RunResult = ZenoRunResult;

/// What epsilon_measured means for a method.
std::string metric_name(Method m);

struct SweepResult {
  ExperimentConfig config;
  std::string hamiltonian;  // normalized text form
  double lambda = 0;
  Mode mode = Mode::kProjected;
  std::vector<std::int64_t> resolved_n;
  std::vector<RunResult> points;  // sorted by N
  std::optional<double> fitted_slope;
  bool all_bounds_satisfied = true;
};

/// Least-squares slope of log(epsilon) against log(N), using only points
/// with epsilon >= 1e-12; empty unless at least four such points remain.
std::optional<double> fit_loglog_slope(const std::vector<RunResult>& points);

/// Validates `config` and evaluates its single method at every resolved N.
/// Throws ExperimentError carrying the exit code for usage, parse, limit and
/// I/O failures. Bound violations are reported in the result, not thrown.
SweepResult run_experiment(const ExperimentConfig& config);

inline constexpr const char* kCsvHeader =
    "method,N,delta_t,epsilon_measured,epsilon_bound,bound_satisfied,p_succ_exact,p_succ_bound,p_succ_sampled,"
    "shots,seed";

/// Numbers use 12 significant digits; absent values are empty (CSV) or null
/// (JSON).
void emit_results(const SweepResult& result, OutputFormat format, std::ostream& out);
/// Throws ExperimentError(kIo) if `path` cannot be written.
void emit_results(const SweepResult& result, OutputFormat format, const std::filesystem::path& path);
std::string format_results(const SweepResult& result, OutputFormat format);

struct CompareTable {
  std::vector<Method> methods;
  std::vector<std::int64_t> n_values;
  /// sweeps[m].points[k] is method m at n_values[k].
  std::vector<SweepResult> sweeps;
  bool all_bounds_satisfied = true;
};

/// Runs every method in config.methods over the shared Hamiltonian, t and
/// N values.
CompareTable compare_methods(const ExperimentConfig& config);
void emit_compare(const CompareTable& table, OutputFormat format, std::ostream& out);
std::string format_compare(const CompareTable& table, OutputFormat format);

}  // namespace zenosim
