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

// Zeno-based Hamiltonian simulation on a target register coupled to an
// ancilla register.
//
// Layout: operators on the combined register are kron(target_op,
// ancilla_op), i.e. basis index = target_index * ancilla_dim + ancilla_index.
// Ancilla basis state |j> (0-based here) carries term j; basis states
// j >= L are padding, with zero PREPARE amplitude and identity SELECT block.
//
// Two projector variants are supported:
//   standard: |phi> = sum_j sqrt(h_j / lambda) |j>, block generators
//             lambda * H_j, so lambda * P H~ P = H (x) P.
//   mub:      |a> = uniform superposition over all 2^n_a states, block
//             generators 2^n_a * h_j * H_j, so 2^n_a * P_a H~_a P_a = H (x) P_a.

#include <cstdint>
#include <optional>
#include <vector>

#include "zenosim/bounds.hpp"
#include "zenosim/hamiltonian.hpp"
#include "zenosim/linalg.hpp"

namespace zenosim {

enum class Variant { kStandard, kMub };

struct ExtendedSystem {
  PauliHamiltonian hamiltonian;
  Variant variant = Variant::kStandard;
  Eigen::Index target_dim = 0;
  int n_a = 0;
  Eigen::Index ancilla_dim = 1;
  /// lambda (standard) or 2^n_a (mub).
  double scale = 1.0;
  /// Coefficient of H_j inside H~: 1 (standard) or h_j (mub).
  std::vector<double> weights{};
  /// sign_j * Pauli string j, dimension target_dim.
  std::vector<ComplexMatrix> term_ops{};
  ComplexMatrix prepare{};     // V, V|0...0> = projector_state
  StateVector projector_state{};  // |phi> or |a>
  ComplexMatrix reflection{};  // R = 2P - 1 on the ancilla
  ComplexMatrix target_hamiltonian{};
  HermitianEigen<double> target_spectrum{};

  Eigen::Index dim() const { return target_dim * ancilla_dim; }
  std::size_t num_terms() const { return term_ops.size(); }
  /// Generator rate of block j: scale * weights[j].
  double rate(std::size_t j) const { return scale * weights.at(j); }
  /// P = |phi><phi| on the ancilla.
  ComplexMatrix projector() const;
  /// exp(-i H t) on the target register.
  ComplexMatrix target_evolution(double t) const;
};

ExtendedSystem build_extended(const PauliHamiltonian& h, Variant variant = Variant::kStandard);

/// 1 (x) op
ComplexMatrix lift_ancilla(const ExtendedSystem& sys, const ComplexMatrix& ancilla_op);
/// op (x) 1
ComplexMatrix lift_target(const ExtendedSystem& sys, const ComplexMatrix& target_op);

/// H~_j = H_j (x) |j><j| without any coefficient.
ComplexMatrix extended_term(const ExtendedSystem& sys, std::size_t j);
/// H~ = sum_j weights_j H~_j. SELECT is exp(-i scale H~ dt).
ComplexMatrix extended_hamiltonian(const ExtendedSystem& sys);

/// U_j(dt) = cos(rate_j dt) I - i sin(rate_j dt) sign_j P_j.
ComplexMatrix block_unitary(const ExtendedSystem& sys, std::size_t j, double dt);

/// sum_j U_j(dt) (x) |j><j|, identity on padded blocks.
ComplexMatrix select_unitary(const ExtendedSystem& sys, double dt);

/// order 1: P~ U~(dt) P~;  order 2: P~ U~(dt/2) R~ U~(dt/2) P~.
ComplexMatrix zeno_step_operator(const ExtendedSystem& sys, double dt, int order);

/// (1 (x) <0|V^dagger) U~(dt) (1 (x) V|0>) = sum_j p_j U_j(dt).
ComplexMatrix block_encoding_matrix(const ExtendedSystem& sys, double dt);

/// Probability of the all-zeros ancilla outcome after one step started from
/// psi0 (x) |0...0>, i.e. ||(1 (x) <0|) (1 (x) V^dagger) S (1 (x) V) psi0 (x) |0>||^2
/// with S = U~(dt) for order 1 and U~(dt/2) R~ U~(dt/2) for order 2.
double step_success_probability(const ExtendedSystem& sys, double dt, const StateVector& psi0, int order = 1);

struct ZenoRunResult {
  Method method = Method::kZeno1;
  std::int64_t n = 1;
  double t = 0;
  double delta_t = 0;  // t / N
  double epsilon_measured = 0;
  double epsilon_bound = 0;
  /// mub only: bound with the term count L in place of 2^n_a.
  std::optional<double> epsilon_bound_terms;
  double p_succ_exact = 1;
  double p_succ_bound = 1;
  double p_succ_bound_raw = 1;
  std::optional<double> p_succ_sampled;
  /// Mean |<psi_exact|psi_final>|^2 over successful sampled trajectories.
  std::optional<double> mean_fidelity;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;

  /// Absolute slack applied when comparing measured values to bounds, so a
  /// zero bound is not violated by floating-point residue.
  static constexpr double kSlack = 1e-12;
  bool epsilon_within_bound() const;
  bool p_succ_within_bound() const;
  bool bound_satisfied() const { return epsilon_within_bound() && p_succ_within_bound(); }
};

StateVector basis_state(Eigen::Index dim, Eigen::Index index);

/// Post-selected run: epsilon_measured = ||step^N - exp(-iHt) (x) P|| on the
/// combined register; p_succ_exact = ||step^N (psi0 (x) phi)||^2 with psi0
/// defaulting to |0...0>. The mub variant supports order 1 only.
ZenoRunResult run_zeno(const ExtendedSystem& sys, double t, std::int64_t n, int order,
                       const std::optional<StateVector>& psi0 = std::nullopt);

/// Measurement-free run with reflection kicks K = (R~ U~(dt))^N;
/// epsilon_measured = ||(K - exp(-iHt) (x) 1)(1 (x) P)||. Standard variant only.
ZenoRunResult run_kicks(const ExtendedSystem& sys, double t, std::int64_t n);

/// run_zeno plus `shots` simulated trajectories with mid-circuit ancilla
/// measurements. Any outcome other than all-zeros aborts the trajectory.
/// Trajectory k draws from Rng(derived_seed(seed, k)).
ZenoRunResult run_sampled(const ExtendedSystem& sys, double t, std::int64_t n, int order, const StateVector& psi0,
                          std::int64_t shots, std::uint64_t seed);

}  // namespace zenosim
