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

#include "zenosim/baselines.hpp"

#include <cmath>
#include <stdexcept>

#include "zenosim/rng.hpp"

namespace zenosim {

namespace {

void check_steps(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("N must be >= 1");
}

ComplexMatrix conjugation_superoperator(const ComplexMatrix& u) { return kron(u.conjugate(), u); }

}  // namespace

ComplexMatrix exact_evolution(const PauliHamiltonian& h, double t) {
  return matexp_hermitian(hamiltonian_matrix(h), t);
}

ComplexMatrix pauli_rotation(const PauliTerm& term, double theta) {
  const ComplexMatrix p = term_matrix(term);
  return std::cos(theta) * ComplexMatrix::Identity(p.rows(), p.cols()) - Complex(0.0, std::sin(theta)) * p;
}

ComplexMatrix trotter_first_order(const PauliHamiltonian& h, double t, std::int64_t n) {
  check_steps(n);
  const double dt = t / double(n);
  const Eigen::Index d = Eigen::Index{1} << h.num_qubits();
  ComplexMatrix step = ComplexMatrix::Identity(d, d);
  for (const auto& term : h.terms()) step = step * pauli_rotation(term, term.coefficient * dt);
  return matrix_power(step, n);
}

QdriftTrajectory qdrift_sample(const PauliHamiltonian& h, double t, std::int64_t n, std::uint64_t seed) {
  check_steps(n);
  const double dt = t / double(n);
  const auto p = h.probabilities();
  std::vector<ComplexMatrix> rotations;
  for (const auto& term : h.terms()) rotations.push_back(pauli_rotation(term, h.lambda() * dt));

  QdriftTrajectory out;
  out.seed = seed;
  out.sampled_indices.reserve(std::size_t(n));
  Rng rng(seed);
  const Eigen::Index d = Eigen::Index{1} << h.num_qubits();
  out.resulting_unitary = ComplexMatrix::Identity(d, d);
  for (std::int64_t k = 0; k < n; ++k) {
    const std::size_t j = rng.categorical(p);
    out.sampled_indices.push_back(j);
    out.resulting_unitary = rotations[j] * out.resulting_unitary;
  }
  return out;
}

ChannelRep unitary_channel(const ComplexMatrix& u, std::string label) {
  if (!is_unitary(u)) throw NotUnitaryError("unitary_channel: input is not unitary");
  return {u.rows(), conjugation_superoperator(u), std::move(label)};
}

ChannelRep qdrift_channel(const PauliHamiltonian& h, double t, std::int64_t n) {
  check_steps(n);
  if (h.num_qubits() > kMaxChannelQubits) {
    throw std::length_error("qdrift_channel: channel mode supports at most " + std::to_string(kMaxChannelQubits) +
                            " target qubits");
  }
  const double dt = t / double(n);
  const auto p = h.probabilities();
  const Eigen::Index d = Eigen::Index{1} << h.num_qubits();
  ComplexMatrix step = ComplexMatrix::Zero(d * d, d * d);
  for (std::size_t j = 0; j < h.num_terms(); ++j) {
    step += p[j] * conjugation_superoperator(pauli_rotation(h.term(j), h.lambda() * dt));
  }
  return {d, matrix_power(step, n), "qdrift"};
}

ComplexMatrix apply_channel(const ChannelRep& c, const ComplexMatrix& rho) {
  if (rho.rows() != c.dim || rho.cols() != c.dim) throw DimensionError("apply_channel: density matrix dimension");
  const StateVector vec = Eigen::Map<const StateVector>(rho.data(), rho.size());
  const StateVector out = c.superoperator * vec;
  return Eigen::Map<const ComplexMatrix>(out.data(), c.dim, c.dim);
}

ChannelRep compose(const ChannelRep& c2, const ChannelRep& c1) {
  if (c1.dim != c2.dim) throw DimensionError("compose: channel dimensions differ");
  return {c1.dim, c2.superoperator * c1.superoperator, c2.label + "*" + c1.label};
}

ComplexMatrix choi_matrix(const ChannelRep& c) {
  const Eigen::Index d = c.dim;
  ComplexMatrix j(d * d, d * d);
  // J(a d + i, b d + k) = E(|i><k|)(a, b) = S(b d + a, k d + i)
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index b = 0; b < d; ++b)
        for (Eigen::Index k = 0; k < d; ++k) j(a * d + i, b * d + k) = c.superoperator(b * d + a, k * d + i);
  return j;
}

ComplexMatrix choi_input_marginal(const ComplexMatrix& choi, Eigen::Index d) {
  if (choi.rows() != d * d || choi.cols() != d * d) throw DimensionError("choi_input_marginal: dimension");
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index k = 0; k < d; ++k) out(i, k) += choi(a * d + i, a * d + k);
  return out;
}

double diamond_lower_bound(const ChannelRep& c1, const ChannelRep& c2) {
  if (c1.dim != c2.dim) throw DimensionError("diamond_lower_bound: channel dimensions differ");
  return trace_norm(choi_matrix(c1) - choi_matrix(c2)) / double(c1.dim);
}

ComplexMatrix partial_trace_ancilla(const StateVector& psi, Eigen::Index target_dim, Eigen::Index ancilla_dim) {
  if (psi.size() != target_dim * ancilla_dim) throw DimensionError("partial_trace_ancilla: dimension");
  // Row t of `m` holds the ancilla amplitudes for target index t.
  const ComplexMatrix m = Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      psi.data(), target_dim, ancilla_dim);
  return m * m.adjoint();
}

}  // namespace zenosim
