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

#include "zenosim/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zenosim {

namespace {

void check(double lambda, double t, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("bound: N must be >= 1");
  if (!(t >= 0.0)) throw std::invalid_argument("bound: t must be >= 0");
  if (!(lambda > 0.0)) throw std::invalid_argument("bound: lambda must be > 0");
}

int ceil_log2(std::size_t l) {
  int n = 0;
  while ((std::size_t{1} << n) < l) ++n;
  return n;
}

// ceil(x) for a nonnegative ratio, guarding against representation noise
// such as 1/0.01 evaluating to 100.00000000000001.
std::int64_t ceil_ratio(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) <= 1e-9 * std::max(1.0, r)) return static_cast<std::int64_t>(r);
  return static_cast<std::int64_t>(std::ceil(x));
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::kZeno1: return "zeno1";
    case Method::kZeno2: return "zeno2";
    case Method::kKicks: return "kicks";
    case Method::kMub: return "mub";
    case Method::kQdrift: return "qdrift";
    case Method::kTrotter1: return "trotter1";
  }
  return "unknown";
}

Method method_from_string(const std::string& name) {
  for (auto m : {Method::kZeno1, Method::kZeno2, Method::kKicks, Method::kMub, Method::kQdrift,
                 Method::kTrotter1}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown method '" + name + "'");
}

double bound_zeno1_error(double lambda, double t, std::int64_t n) {
  check(lambda, t, n);
  return t * t * lambda * lambda / double(n);
}

ClampedBound bound_zeno1_succ_detail(double lambda, double t, std::int64_t n) {
  check(lambda, t, n);
  const double raw = 1.0 - 2.0 * lambda * lambda * t * t / double(n);
  return {std::max(0.0, raw), raw};
}

double bound_zeno1_succ(double lambda, double t, std::int64_t n) {
  return bound_zeno1_succ_detail(lambda, t, n).value;
}

double bound_zeno2_error(double lambda, double t, std::int64_t n) {
  check(lambda, t, n);
  const double nn = double(n);
  return std::pow(lambda * t, 3) / (3.0 * nn * nn);
}

ClampedBound bound_zeno2_succ_detail(double lambda, double t, std::int64_t n) {
  check(lambda, t, n);
  const double nn = double(n);
  const double raw = 1.0 - 4.0 * std::pow(lambda * t, 3) / (3.0 * nn * nn);
  return {std::max(0.0, raw), raw};
}

double bound_zeno2_succ(double lambda, double t, std::int64_t n) {
  return bound_zeno2_succ_detail(lambda, t, n).value;
}

double bound_step_succ(double lambda, double dt) {
  return std::max(0.0, 1.0 - 2.0 * lambda * lambda * dt * dt);
}

double bound_kicks_error(double lambda, double t, std::int64_t n) {
  check(lambda, t, n);
  return (2.0 / double(n)) * (1.0 / std::sqrt(2.0) + 1.0) * lambda * t * (1.0 + 2.0 * lambda * t);
}

double bound_mub_error(double max_coefficient, int n_a, double t, std::int64_t n) {
  check(max_coefficient, t, n);
  if (n_a < 0) throw std::invalid_argument("bound_mub_error: n_a must be >= 0");
  const double width = std::ldexp(1.0, n_a);
  return t * t * width * width * max_coefficient * max_coefficient / double(n);
}

double bound_mub_error_terms(double max_coefficient, std::size_t num_terms, double t, std::int64_t n) {
  check(max_coefficient, t, n);
  const double l = double(num_terms);
  return t * t * l * l * max_coefficient * max_coefficient / double(n);
}

double bound_qdrift_diamond(double lambda, double t, std::int64_t n) {
  check(lambda, t, n);
  return 4.0 * lambda * lambda * t * t / double(n);
}

std::int64_t steps_for_precision(double lambda, double t, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("steps_for_precision: epsilon must be > 0");
  return std::max<std::int64_t>(1, ceil_ratio(t * t * lambda * lambda / epsilon));
}

std::int64_t steps_for_success(double lambda, double t, double p_target) {
  if (!(p_target >= 0.0) || !(p_target < 1.0)) {
    throw std::invalid_argument("steps_for_success: p_target must lie in [0, 1)");
  }
  return std::max<std::int64_t>(1, ceil_ratio(2.0 * lambda * lambda * t * t / (1.0 - p_target)));
}

CircuitCost circuit_cost_estimate(std::int64_t num_terms, std::int64_t per_unitary_cost, double lambda,
                                  double t, double epsilon) {
  if (num_terms < 1 || per_unitary_cost < 1) {
    throw std::invalid_argument("circuit_cost_estimate: L and C must be positive");
  }
  const std::int64_t steps = steps_for_precision(lambda, t, epsilon);
  return {num_terms * per_unitary_cost * steps, steps, true};
}

BoundReport make_bound_report(Method method, double lambda, double max_coefficient, std::size_t num_terms,
                              double t, std::int64_t n) {
  BoundReport r;
  r.method = method;
  r.lambda = lambda;
  r.max_coefficient = max_coefficient;
  r.num_terms = num_terms;
  r.n_a = ceil_log2(num_terms);
  r.t = t;
  r.n = n;
  ClampedBound succ{1.0, 1.0};
  switch (method) {
    case Method::kZeno1:
      r.epsilon_bound = bound_zeno1_error(lambda, t, n);
      succ = bound_zeno1_succ_detail(lambda, t, n);
      break;
    case Method::kZeno2:
      r.epsilon_bound = bound_zeno2_error(lambda, t, n);
      succ = bound_zeno2_succ_detail(lambda, t, n);
      break;
    case Method::kKicks:
      r.epsilon_bound = bound_kicks_error(lambda, t, n);
      break;
    case Method::kMub: {
      r.epsilon_bound = bound_mub_error(max_coefficient, r.n_a, t, n);
      // Same first-order step argument with generator norm 2^n_a * Lambda.
      const double rate = std::ldexp(max_coefficient, r.n_a);
      succ = bound_zeno1_succ_detail(rate, t, n);
      break;
    }
    case Method::kQdrift:
      r.epsilon_bound = bound_qdrift_diamond(lambda, t, n);
      break;
    case Method::kTrotter1:
      // Commutator-dependent; no closed form is provided.
      r.epsilon_bound = std::nan("");
      break;
  }
  r.p_succ_bound = succ.value;
  r.p_succ_bound_raw = succ.raw;
  r.steps_for_epsilon = (std::isfinite(r.epsilon_bound) && r.epsilon_bound > 0.0)
                            ? steps_for_precision(lambda, t, r.epsilon_bound)
                            : 1;
  return r;
}

}  // namespace zenosim
