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

// Reference evolutions (exact, first-order Trotter, QDRIFT) and the channel
// machinery used to compare them.
//
// Channels are stored as superoperators on column-stacked density matrices:
// vec(A rho B) = (B^T (x) A) vec(rho), so conjugation by U is
// conj(U) (x) U. Choi matrices are unnormalized, J = sum_ik E(|i><k|) (x) |i><k|,
// with trace d for trace-preserving maps.

#include <cstdint>
#include <string>
#include <vector>

#include "zenosim/hamiltonian.hpp"
#include "zenosim/linalg.hpp"

namespace zenosim {

/// Target registers above this size are rejected in channel mode.
inline constexpr std::size_t kMaxChannelQubits = 5;

struct ChannelRep {
  Eigen::Index dim = 0;        // Hilbert-space dimension d
  ComplexMatrix superoperator;  // d^2 x d^2
  std::string label;
};

struct QdriftTrajectory {
  std::vector<std::size_t> sampled_indices;  // 0-based term indices
  ComplexMatrix resulting_unitary;
  std::uint64_t seed = 0;
};

ComplexMatrix exact_evolution(const PauliHamiltonian& h, double t);

/// exp(-i theta sign_j P_j) = cos(theta) I - i sin(theta) sign_j P_j.
ComplexMatrix pauli_rotation(const PauliTerm& term, double theta);

/// (prod_j exp(-i h_j sign_j P_j dt))^N with the product written left to
/// right in term order.
ComplexMatrix trotter_first_order(const PauliHamiltonian& h, double t, std::int64_t n);

/// N i.i.d. term indices drawn with p_j = h_j / lambda from Rng(seed); the
/// unitary applies U_{i_1}(dt) first, where U_j(dt) = exp(-i lambda sign_j P_j dt).
QdriftTrajectory qdrift_sample(const PauliHamiltonian& h, double t, std::int64_t n, std::uint64_t seed);

/// Superoperator of conjugation by u. Throws NotUnitaryError.
ChannelRep unitary_channel(const ComplexMatrix& u, std::string label = "unitary");

/// M_dt^N with M_dt(rho) = sum_j p_j U_j(dt) rho U_j(dt)^dagger, dt = t / N.
/// Throws std::length_error above kMaxChannelQubits.
ChannelRep qdrift_channel(const PauliHamiltonian& h, double t, std::int64_t n);

/// Applies a channel to a density matrix.
ComplexMatrix apply_channel(const ChannelRep& c, const ComplexMatrix& rho);

/// c2 after c1.
ChannelRep compose(const ChannelRep& c2, const ChannelRep& c1);

ComplexMatrix choi_matrix(const ChannelRep& c);

/// Tr over the output factor of a Choi matrix (equals I_d for trace-preserving maps).
ComplexMatrix choi_input_marginal(const ComplexMatrix& choi, Eigen::Index d);

/// ||J(c1) - J(c2)||_1 / d, a lower bound on the diamond distance
/// ||c1 - c2||_<>. Throws DimensionError for mismatched dimensions.
double diamond_lower_bound(const ChannelRep& c1, const ChannelRep& c2);

/// Tr_anc |psi><psi| for a state laid out as target (x) ancilla.
ComplexMatrix partial_trace_ancilla(const StateVector& psi, Eigen::Index target_dim, Eigen::Index ancilla_dim);

}  // namespace zenosim
