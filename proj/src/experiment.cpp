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

#include "zenosim/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "zenosim/baselines.hpp"

namespace zenosim {

using json = nlohmann::ordered_json;

std::string to_string(Mode m) {
  switch (m) {
    case Mode::kProjected: return "projected";
    case Mode::kSampled: return "sampled";
    case Mode::kChannel: return "channel";
  }
  return "unknown";
}

Mode mode_from_string(const std::string& name) {
  for (auto m : {Mode::kProjected, Mode::kSampled, Mode::kChannel}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown mode '" + name + "'");
}

std::size_t qubit_cap_from_env() {
  const char* raw = std::getenv("ZENOSIM_MAX_QUBITS");
  if (raw == nullptr || *raw == '\0') return kMaxQubits;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1) {
    throw ExperimentError(ExitCode::kUsage, "ZENOSIM_MAX_QUBITS must be a positive integer");
  }
  return std::min<std::size_t>(kMaxQubits, static_cast<std::size_t>(v));
}

std::string metric_name(Method m) {
  switch (m) {
    case Method::kKicks: return "restricted_gate_error";
    case Method::kQdrift: return "diamond_lower_bound";
    case Method::kTrotter1: return "unitary_error";
    default: return "gate_error";
  }
}

std::optional<double> fit_loglog_slope(const std::vector<RunResult>& points) {
  std::vector<std::pair<double, double>> xy;
  for (const auto& p : points) {
    if (p.epsilon_measured >= 1e-12) xy.emplace_back(std::log(double(p.n)), std::log(p.epsilon_measured));
  }
  if (xy.size() < 4) return std::nullopt;
  double mx = 0, my = 0;
  for (auto [x, y] : xy) {
    mx += x;
    my += y;
  }
  mx /= double(xy.size());
  my /= double(xy.size());
  double sxy = 0, sxx = 0;
  for (auto [x, y] : xy) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

namespace {

Mode default_mode(Method m) { return m == Method::kQdrift ? Mode::kChannel : Mode::kProjected; }

void check_mode(Method m, Mode mode) {
  const bool ok = [&] {
    switch (m) {
      case Method::kZeno1:
      case Method::kZeno2:
      case Method::kMub: return mode == Mode::kProjected || mode == Mode::kSampled;
      case Method::kKicks:
      case Method::kTrotter1: return mode == Mode::kProjected;
      case Method::kQdrift: return mode == Mode::kChannel;
    }
    return false;
  }();
  if (!ok) {
    throw ExperimentError(ExitCode::kUsage,
                          "mode '" + to_string(mode) + "' is not available for method '" + to_string(m) + "'");
  }
}

std::vector<std::int64_t> resolve_steps(const ExperimentConfig& c, double lambda) {
  const int given = int(c.n.has_value()) + int(c.epsilon.has_value()) + int(!c.sweep.empty());
  if (given != 1) throw ExperimentError(ExitCode::kUsage, "exactly one of N, epsilon or a sweep must be given");
  std::vector<std::int64_t> ns;
  if (c.n) ns.push_back(*c.n);
  if (c.epsilon) {
    if (!(*c.epsilon > 0.0)) throw ExperimentError(ExitCode::kUsage, "epsilon must be > 0");
    ns.push_back(steps_for_precision(lambda, c.t, *c.epsilon));
  }
  ns.insert(ns.end(), c.sweep.begin(), c.sweep.end());
  for (auto n : ns) {
    if (n < 1) throw ExperimentError(ExitCode::kUsage, "N must be >= 1");
  }
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  return ns;
}

PauliHamiltonian load(const ExperimentConfig& c) {
  try {
    if (c.hamiltonian_text) return parse_hamiltonian(*c.hamiltonian_text);
    if (c.hamiltonian_paths.empty()) throw ExperimentError(ExitCode::kUsage, "no Hamiltonian given");
    for (const auto& p : c.hamiltonian_paths) {
      if (!std::filesystem::exists(p)) throw ExperimentError(ExitCode::kIo, "file not found: " + p.string());
    }
    return load_hamiltonian(c.hamiltonian_paths);
  } catch (const ParseError& e) {
    throw ExperimentError(ExitCode::kParse, e.what());
  } catch (const ExperimentError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw ExperimentError(ExitCode::kIo, e.what());
  }
}

StateVector resolve_psi0(const ExperimentConfig& c, Eigen::Index dim) {
  if (c.psi0_index && c.psi0_amplitudes) throw ExperimentError(ExitCode::kUsage, "psi0 given twice");
  if (c.psi0_amplitudes) {
    const auto& a = *c.psi0_amplitudes;
    if (Eigen::Index(a.size()) != dim) throw ExperimentError(ExitCode::kUsage, "psi0 amplitude count mismatch");
    StateVector v = Eigen::Map<const StateVector>(a.data(), dim);
    if (std::abs(v.norm() - 1.0) > tol::kNormalized) throw ExperimentError(ExitCode::kUsage, "psi0 is not normalized");
    return v;
  }
  const std::int64_t idx = c.psi0_index.value_or(0);
  if (idx < 0 || idx >= dim) throw ExperimentError(ExitCode::kUsage, "psi0 index out of range");
  return basis_state(dim, idx);
}

RunResult run_point(Method method, Mode mode, const PauliHamiltonian& h, const ExtendedSystem* sys,
                    const ComplexMatrix& exact, const StateVector& psi0, const ExperimentConfig& c,
                    std::int64_t n) {
  switch (method) {
    case Method::kZeno1:
    case Method::kZeno2:
    case Method::kMub: {
      const int order = method == Method::kZeno2 ? 2 : 1;
      if (mode == Mode::kSampled) return run_sampled(*sys, c.t, n, order, psi0, c.shots, c.seed);
      return run_zeno(*sys, c.t, n, order, psi0);
    }
    case Method::kKicks: return run_kicks(*sys, c.t, n);
    case Method::kQdrift: {
      RunResult r;
      r.method = method;
      r.n = n;
      r.t = c.t;
      r.delta_t = c.t / double(n);
      r.epsilon_measured =
          diamond_lower_bound(qdrift_channel(h, c.t, n), unitary_channel(exact, "exact"));
      const auto b = make_bound_report(method, h.lambda(), h.max_coefficient(), h.num_terms(), c.t, n);
      r.epsilon_bound = b.epsilon_bound;
      return r;
    }
    case Method::kTrotter1: {
      RunResult r;
      r.method = method;
      r.n = n;
      r.t = c.t;
      r.delta_t = c.t / double(n);
      r.epsilon_measured = spectral_norm(trotter_first_order(h, c.t, n) - exact);
      r.epsilon_bound = std::nan("");
      return r;
    }
  }
  throw std::logic_error("unhandled method");
}

}  // namespace

SweepResult run_experiment(const ExperimentConfig& config) {
  if (config.methods.size() != 1) throw ExperimentError(ExitCode::kUsage, "run_experiment takes exactly one method");
  const Method method = config.methods.front();
  const Mode mode = config.mode.value_or(default_mode(method));
  check_mode(method, mode);
  if (!(config.t >= 0.0) || !std::isfinite(config.t)) throw ExperimentError(ExitCode::kUsage, "t must be >= 0");
  if (mode == Mode::kSampled && config.shots < 1) throw ExperimentError(ExitCode::kUsage, "shots must be >= 1");

  const PauliHamiltonian h = load(config);
  const std::size_t cap = std::min(config.max_qubits, kMaxQubits);
  if (h.num_qubits() > cap) {
    throw ExperimentError(ExitCode::kLimits, "Hamiltonian acts on " + std::to_string(h.num_qubits()) +
                                                 " qubits; the cap is " + std::to_string(cap));
  }
  if (h.num_terms() > kMaxTerms) {
    throw ExperimentError(ExitCode::kLimits, "Hamiltonian has " + std::to_string(h.num_terms()) +
                                                 " terms; the cap is " + std::to_string(kMaxTerms));
  }
  if (mode == Mode::kChannel && h.num_qubits() > kMaxChannelQubits) {
    throw ExperimentError(ExitCode::kLimits, "channel mode supports at most " + std::to_string(kMaxChannelQubits) +
                                                 " qubits");
  }

  SweepResult out;
  out.config = config;
  out.config.methods = {method};
  out.config.mode = mode;
  out.hamiltonian = to_string(h);
  out.lambda = h.lambda();
  out.mode = mode;
  out.resolved_n = resolve_steps(config, h.lambda());

  const Eigen::Index dim = Eigen::Index{1} << h.num_qubits();
  const StateVector psi0 = resolve_psi0(config, dim);
  std::optional<ExtendedSystem> sys;
  if (method == Method::kZeno1 || method == Method::kZeno2 || method == Method::kKicks) {
    sys = build_extended(h, Variant::kStandard);
  } else if (method == Method::kMub) {
    sys = build_extended(h, Variant::kMub);
  }
  const ComplexMatrix exact = sys ? sys->target_evolution(config.t) : exact_evolution(h, config.t);

  for (auto n : out.resolved_n) {
    out.points.push_back(run_point(method, mode, h, sys ? &*sys : nullptr, exact, psi0, config, n));
    out.all_bounds_satisfied = out.all_bounds_satisfied && out.points.back().bound_satisfied();
  }
  out.fitted_slope = fit_loglog_slope(out.points);
  return out;
}

namespace {

std::string num(double v) {
  if (!std::isfinite(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json jnum(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::strtod(num(v).c_str(), nullptr);
}

json jopt(const std::optional<double>& v) { return v ? jnum(*v) : json(nullptr); }

json point_json(const RunResult& p) {
  json j;
  j["method"] = to_string(p.method);
  j["N"] = p.n;
  j["delta_t"] = jnum(p.delta_t);
  j["epsilon_measured"] = jnum(p.epsilon_measured);
  j["epsilon_bound"] = jnum(p.epsilon_bound);
  j["bound_satisfied"] = p.bound_satisfied();
  j["p_succ_exact"] = jnum(p.p_succ_exact);
  j["p_succ_bound"] = jnum(p.p_succ_bound);
  j["p_succ_sampled"] = jopt(p.p_succ_sampled);
  j["shots"] = p.shots;
  j["seed"] = p.seed;
  j["metric"] = metric_name(p.method);
  j["p_succ_bound_raw"] = jnum(p.p_succ_bound_raw);
  if (p.epsilon_bound_terms) j["epsilon_bound_terms"] = jnum(*p.epsilon_bound_terms);
  if (p.mean_fidelity) j["mean_fidelity"] = jnum(*p.mean_fidelity);
  return j;
}

json config_json(const SweepResult& r) {
  const auto& c = r.config;
  json j;
  json paths = json::array();
  for (const auto& p : c.hamiltonian_paths) paths.push_back(p.string());
  j["hamiltonian_paths"] = paths;
  j["hamiltonian"] = r.hamiltonian;
  j["lambda"] = jnum(r.lambda);
  j["method"] = c.methods.empty() ? std::string() : to_string(c.methods.front());
  j["t"] = jnum(c.t);
  j["N"] = c.n ? json(*c.n) : json(nullptr);
  j["epsilon"] = c.epsilon ? jnum(*c.epsilon) : json(nullptr);
  j["sweep"] = c.sweep;
  j["resolved_N"] = r.resolved_n;
  j["mode"] = to_string(r.mode);
  j["shots"] = c.shots;
  j["seed"] = c.seed;
  if (c.psi0_amplitudes) {
    json amps = json::array();
    for (const auto& a : *c.psi0_amplitudes) amps.push_back({jnum(a.real()), jnum(a.imag())});
    j["psi0"] = amps;
  } else {
    j["psi0"] = c.psi0_index.value_or(0);
  }
  j["max_qubits"] = c.max_qubits;
  return j;
}

}  // namespace

void emit_results(const SweepResult& result, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kCsv) {
    out << kCsvHeader << '\n';
    for (const auto& p : result.points) {
      out << to_string(p.method) << ',' << p.n << ',' << num(p.delta_t) << ',' << num(p.epsilon_measured) << ','
          << num(p.epsilon_bound) << ',' << (p.bound_satisfied() ? "true" : "false") << ',' << num(p.p_succ_exact)
          << ',' << num(p.p_succ_bound) << ',' << (p.p_succ_sampled ? num(*p.p_succ_sampled) : "") << ','
          << p.shots << ',' << p.seed << '\n';
    }
    return;
  }
  json j;
  j["config"] = config_json(result);
  j["fitted_slope"] = jopt(result.fitted_slope);
  j["all_bounds_satisfied"] = result.all_bounds_satisfied;
  json pts = json::array();
  for (const auto& p : result.points) pts.push_back(point_json(p));
  j["points"] = pts;
  out << j.dump(2) << '\n';
}

std::string format_results(const SweepResult& result, OutputFormat format) {
  std::ostringstream s;
  emit_results(result, format, s);
  return s.str();
}

void emit_results(const SweepResult& result, OutputFormat format, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ExperimentError(ExitCode::kIo, "cannot write " + path.string());
  emit_results(result, format, f);
  if (!f) throw ExperimentError(ExitCode::kIo, "write failed: " + path.string());
}

CompareTable compare_methods(const ExperimentConfig& config) {
  if (config.methods.size() < 2) throw ExperimentError(ExitCode::kUsage, "compare needs at least two methods");
  CompareTable table;
  table.methods = config.methods;
  for (auto m : config.methods) {
    ExperimentConfig single = config;
    single.methods = {m};
    // An explicit mode applies where it is valid; others use their default.
    if (single.mode) {
      try {
        check_mode(m, *single.mode);
      } catch (const ExperimentError&) {
        single.mode.reset();
      }
    }
    table.sweeps.push_back(run_experiment(single));
    table.all_bounds_satisfied = table.all_bounds_satisfied && table.sweeps.back().all_bounds_satisfied;
  }
  table.n_values = table.sweeps.front().resolved_n;
  return table;
}

namespace {

constexpr const char* kCompareNote =
    "qdrift reports a Choi lower bound on the diamond distance between channels; it is a channel-level metric "
    "and is not directly comparable to the gate errors of the other methods";

bool has_qdrift(const CompareTable& t) {
  return std::find(t.methods.begin(), t.methods.end(), Method::kQdrift) != t.methods.end();
}

}  // namespace

void emit_compare(const CompareTable& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kCsv) {
    if (has_qdrift(table)) out << "# " << kCompareNote << '\n';
    out << "N";
    for (auto m : table.methods) out << ',' << to_string(m) << "_error," << to_string(m) << "_bound";
    out << '\n';
    for (std::size_t k = 0; k < table.n_values.size(); ++k) {
      out << table.n_values[k];
      for (const auto& s : table.sweeps) {
        const auto& p = s.points[k];
        out << ',' << num(p.epsilon_measured) << ',' << num(p.epsilon_bound);
      }
      out << '\n';
    }
    return;
  }
  json j;
  json methods = json::array();
  json metrics = json::object();
  for (auto m : table.methods) {
    methods.push_back(to_string(m));
    metrics[to_string(m)] = metric_name(m);
  }
  j["methods"] = methods;
  j["metrics"] = metrics;
  if (has_qdrift(table)) j["note"] = kCompareNote;
  j["all_bounds_satisfied"] = table.all_bounds_satisfied;
  json rows = json::array();
  for (std::size_t k = 0; k < table.n_values.size(); ++k) {
    json row;
    row["N"] = table.n_values[k];
    for (std::size_t m = 0; m < table.methods.size(); ++m) {
      const auto& p = table.sweeps[m].points[k];
      row[to_string(table.methods[m])] = {{"epsilon_measured", jnum(p.epsilon_measured)},
                                          {"epsilon_bound", jnum(p.epsilon_bound)},
                                          {"bound_satisfied", p.bound_satisfied()}};
    }
    rows.push_back(row);
  }
  j["rows"] = rows;
  out << j.dump(2) << '\n';
}

std::string format_compare(const CompareTable& table, OutputFormat format) {
  std::ostringstream s;
  emit_compare(table, format, s);
  return s.str();
}

}  // namespace zenosim
