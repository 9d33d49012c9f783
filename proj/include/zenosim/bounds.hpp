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

// Closed-form error, success-probability and resource bounds for Zeno-based
// Hamiltonian simulation and its baselines. Every function is pure
// arithmetic; preconditions (N >= 1, t >= 0, lambda > 0) throw
// std::invalid_argument.

#include <cstddef>
#include <cstdint>
#include <string>

namespace zenosim {

enum class Method { kZeno1, kZeno2, kKicks, kMub, kQdrift, kTrotter1 };

std::string to_string(Method m);
/// Throws std::invalid_argument for unknown names.
Method method_from_string(const std::string& name);

/// A probability lower bound clamped at zero together with the raw value.
struct ClampedBound {
  double value;
  double raw;
  bool clamped() const { return raw < value; }
};

/// First order: t^2 lambda^2 / N.
double bound_zeno1_error(double lambda, double t, std::int64_t n);
/// max(0, 1 - 2 lambda^2 t^2 / N).
double bound_zeno1_succ(double lambda, double t, std::int64_t n);
ClampedBound bound_zeno1_succ_detail(double lambda, double t, std::int64_t n);

/// Second order (reflection-assisted): lambda^3 t^3 / (3 N^2).
double bound_zeno2_error(double lambda, double t, std::int64_t n);
/// max(0, 1 - 4 lambda^3 t^3 / (3 N^2)).
double bound_zeno2_succ(double lambda, double t, std::int64_t n);
ClampedBound bound_zeno2_succ_detail(double lambda, double t, std::int64_t n);

/// Per-step success probability of one first-order step of length dt:
/// max(0, 1 - 2 (lambda dt)^2).
double bound_step_succ(double lambda, double dt);

/// Unitary kicks by the reflection R = 2P - 1 (two eigenvalues, gap 2):
/// (2/N)(1/sqrt(2) + 1) lambda t (1 + 2 lambda t).
double bound_kicks_error(double lambda, double t, std::int64_t n);

/// Projection onto the uniform (mutually unbiased) ancilla state over
/// 2^n_a basis states: t^2 (2^n_a)^2 Lambda^2 / N.
double bound_mub_error(double max_coefficient, int n_a, double t, std::int64_t n);
/// Same formula with the unpadded term count L in place of 2^n_a.
double bound_mub_error_terms(double max_coefficient, std::size_t num_terms, double t, std::int64_t n);

/// QDRIFT channel after N samples: 4 lambda^2 t^2 / N (diamond distance).
double bound_qdrift_diamond(double lambda, double t, std::int64_t n);

/// ceil(t^2 lambda^2 / epsilon), at least 1. Throws if epsilon <= 0.
std::int64_t steps_for_precision(double lambda, double t, double epsilon);
/// ceil(2 lambda^2 t^2 / (1 - p_target)), at least 1. Throws if p_target
/// is outside [0, 1).
std::int64_t steps_for_success(double lambda, double t, double p_target);

struct CircuitCost {
  std::int64_t estimate;  // L * C * N
  std::int64_t steps;     // N
  bool asymptotic = true; // constants unknown; order of magnitude only
};

/// L * C * ceil(t^2 lambda^2 / epsilon).
CircuitCost circuit_cost_estimate(std::int64_t num_terms, std::int64_t per_unitary_cost, double lambda,
                                  double t, double epsilon);

struct BoundReport {
  Method method = Method::kZeno1;
  double lambda = 0;
  double max_coefficient = 0;
  std::size_t num_terms = 0;
  int n_a = 0;
  double t = 0;
  std::int64_t n = 1;
  double epsilon_bound = 0;
  double p_succ_bound = 1;
  double p_succ_bound_raw = 1;
  std::int64_t steps_for_epsilon = 1;
};

/// Evaluates the bounds matching `method`. steps_for_epsilon is the
/// first-order step count that reaches the same epsilon_bound (1 when the
/// bound is zero).
BoundReport make_bound_report(Method method, double lambda, double max_coefficient, std::size_t num_terms,
                              double t, std::int64_t n);

}  // namespace zenosim
