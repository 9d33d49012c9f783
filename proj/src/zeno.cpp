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

#include "zenosim/zeno.hpp"

#include <cmath>
#include <stdexcept>

#include "zenosim/rng.hpp"

namespace zenosim {

namespace {

int ceil_log2(std::size_t l) {
  int n = 0;
  while ((std::size_t{1} << n) < l) ++n;
  return n;
}

ComplexMatrix hadamard_word(int n_a) {
  ComplexMatrix h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int k = 0; k < n_a; ++k) out = kron(out, h);
  return out;
}

// Householder reflection taking |0...0> to `target` (real, normalized).
ComplexMatrix householder_prepare(const StateVector& target) {
  const Eigen::Index d = target.size();
  StateVector w = -target;
  w(0) += 1.0;
  const double wn2 = w.squaredNorm();
  if (wn2 < 1e-28) return ComplexMatrix::Identity(d, d);
  return ComplexMatrix::Identity(d, d) - (2.0 / wn2) * w * w.adjoint();
}

void check_order(int order) {
  if (order != 1 && order != 2) throw std::invalid_argument("zeno: order must be 1 or 2");
}

void check_steps(std::int64_t n, double t) {
  if (n < 1) throw std::invalid_argument("zeno: N must be >= 1");
  if (!(t >= 0.0)) throw std::invalid_argument("zeno: t must be >= 0");
}

// (1 (x) V^dagger) S (1 (x) V) where S is the per-step sequence on the
// combined register.
ComplexMatrix step_in_prepare_frame(const ExtendedSystem& sys, double dt, int order) {
  const ComplexMatrix v = lift_ancilla(sys, sys.prepare);
  ComplexMatrix s;
  if (order == 1) {
    s = select_unitary(sys, dt);
  } else {
    const ComplexMatrix half = select_unitary(sys, dt / 2);
    s = half * lift_ancilla(sys, sys.reflection) * half;
  }
  return v.adjoint() * s * v;
}

// Columns of `m` whose ancilla index is 0: maps a target state psi to
// m (psi (x) |0...0>).
ComplexMatrix ancilla_zero_columns(const ExtendedSystem& sys, const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), sys.target_dim);
  for (Eigen::Index t = 0; t < sys.target_dim; ++t) out.col(t) = m.col(t * sys.ancilla_dim);
  return out;
}

Method method_for(const ExtendedSystem& sys, int order) {
  if (sys.variant == Variant::kMub) return Method::kMub;
  return order == 1 ? Method::kZeno1 : Method::kZeno2;
}

void check_normalized(const StateVector& psi0, Eigen::Index dim) {
  if (psi0.size() != dim) throw DimensionError("zeno: psi0 has the wrong dimension");
  if (std::abs(psi0.norm() - 1.0) > tol::kNormalized) throw std::invalid_argument("zeno: psi0 is not normalized");
}

}  // namespace

ComplexMatrix ExtendedSystem::projector() const { return projector_state * projector_state.adjoint(); }

ComplexMatrix ExtendedSystem::target_evolution(double t) const {
  CVector<double> phases(target_spectrum.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) phases(k) = std::polar(1.0, -t * target_spectrum.eigenvalues(k));
  return target_spectrum.eigenvectors * phases.asDiagonal() * target_spectrum.eigenvectors.adjoint();
}

ExtendedSystem build_extended(const PauliHamiltonian& h, Variant variant) {
  ExtendedSystem sys{.hamiltonian = h};
  sys.variant = variant;
  sys.target_dim = Eigen::Index{1} << h.num_qubits();
  sys.n_a = ceil_log2(h.num_terms());
  sys.ancilla_dim = Eigen::Index{1} << sys.n_a;
  for (const auto& term : h.terms()) sys.term_ops.push_back(term_matrix(term));

  if (variant == Variant::kStandard) {
    sys.scale = h.lambda();
    sys.weights.assign(h.num_terms(), 1.0);
    sys.projector_state = StateVector::Zero(sys.ancilla_dim);
    const auto p = h.probabilities();
    for (std::size_t j = 0; j < p.size(); ++j) sys.projector_state(Eigen::Index(j)) = std::sqrt(p[j]);
    sys.prepare = householder_prepare(sys.projector_state);
  } else {
    sys.scale = double(sys.ancilla_dim);
    for (const auto& term : h.terms()) sys.weights.push_back(term.coefficient);
    sys.projector_state = StateVector::Constant(sys.ancilla_dim, 1.0 / std::sqrt(double(sys.ancilla_dim)));
    sys.prepare = hadamard_word(sys.n_a);
  }
  sys.reflection = 2.0 * sys.projector() - ComplexMatrix::Identity(sys.ancilla_dim, sys.ancilla_dim);
  sys.target_hamiltonian = hamiltonian_matrix(h);
  sys.target_spectrum = hermitian_eigen(sys.target_hamiltonian);
  return sys;
}

ComplexMatrix lift_ancilla(const ExtendedSystem& sys, const ComplexMatrix& ancilla_op) {
  return kron(ComplexMatrix::Identity(sys.target_dim, sys.target_dim), ancilla_op);
}

ComplexMatrix lift_target(const ExtendedSystem& sys, const ComplexMatrix& target_op) {
  return kron(target_op, ComplexMatrix::Identity(sys.ancilla_dim, sys.ancilla_dim));
}

ComplexMatrix extended_term(const ExtendedSystem& sys, std::size_t j) {
  ComplexMatrix proj = ComplexMatrix::Zero(sys.ancilla_dim, sys.ancilla_dim);
  proj(Eigen::Index(j), Eigen::Index(j)) = 1.0;
  return kron(sys.term_ops.at(j), proj);
}

ComplexMatrix extended_hamiltonian(const ExtendedSystem& sys) {
  ComplexMatrix out = ComplexMatrix::Zero(sys.dim(), sys.dim());
  for (std::size_t j = 0; j < sys.num_terms(); ++j) out += sys.weights[j] * extended_term(sys, j);
  return out;
}

ComplexMatrix block_unitary(const ExtendedSystem& sys, std::size_t j, double dt) {
  const double theta = sys.rate(j) * dt;
  const auto& p = sys.term_ops.at(j);
  return std::cos(theta) * ComplexMatrix::Identity(p.rows(), p.cols()) - Complex(0.0, std::sin(theta)) * p;
}

ComplexMatrix select_unitary(const ExtendedSystem& sys, double dt) {
  const Eigen::Index ad = sys.ancilla_dim;
  ComplexMatrix out = ComplexMatrix::Zero(sys.dim(), sys.dim());
  for (Eigen::Index j = 0; j < ad; ++j) {
    const ComplexMatrix block = std::size_t(j) < sys.num_terms()
                                    ? block_unitary(sys, std::size_t(j), dt)
                                    : ComplexMatrix::Identity(sys.target_dim, sys.target_dim);
    for (Eigen::Index r = 0; r < sys.target_dim; ++r)
      for (Eigen::Index c = 0; c < sys.target_dim; ++c) out(r * ad + j, c * ad + j) = block(r, c);
  }
  return out;
}

ComplexMatrix zeno_step_operator(const ExtendedSystem& sys, double dt, int order) {
  check_order(order);
  const ComplexMatrix p = lift_ancilla(sys, sys.projector());
  if (order == 1) return p * select_unitary(sys, dt) * p;
  const ComplexMatrix half = select_unitary(sys, dt / 2);
  return p * half * lift_ancilla(sys, sys.reflection) * half * p;
}

ComplexMatrix block_encoding_matrix(const ExtendedSystem& sys, double dt) {
  const ComplexMatrix w = step_in_prepare_frame(sys, dt, 1);
  ComplexMatrix out(sys.target_dim, sys.target_dim);
  for (Eigen::Index r = 0; r < sys.target_dim; ++r)
    for (Eigen::Index c = 0; c < sys.target_dim; ++c) out(r, c) = w(r * sys.ancilla_dim, c * sys.ancilla_dim);
  return out;
}

double step_success_probability(const ExtendedSystem& sys, double dt, const StateVector& psi0, int order) {
  check_order(order);
  check_normalized(psi0, sys.target_dim);
  const StateVector s = ancilla_zero_columns(sys, step_in_prepare_frame(sys, dt, order)) * psi0;
  double p0 = 0.0;
  for (Eigen::Index t = 0; t < sys.target_dim; ++t) p0 += std::norm(s(t * sys.ancilla_dim));
  return p0;
}

bool ZenoRunResult::epsilon_within_bound() const {
  if (!std::isfinite(epsilon_bound)) return true;
  return epsilon_measured <= epsilon_bound + kSlack;
}

bool ZenoRunResult::p_succ_within_bound() const { return p_succ_exact >= p_succ_bound - kSlack; }

StateVector basis_state(Eigen::Index dim, Eigen::Index index) {
  if (index < 0 || index >= dim) throw std::out_of_range("basis_state: index out of range");
  return StateVector::Unit(dim, index);
}

namespace {

void fill_bounds(ZenoRunResult& r, const ExtendedSystem& sys) {
  const auto& h = sys.hamiltonian;
  const BoundReport b = make_bound_report(r.method, h.lambda(), h.max_coefficient(), h.num_terms(), r.t, r.n);
  r.epsilon_bound = b.epsilon_bound;
  r.p_succ_bound = b.p_succ_bound;
  r.p_succ_bound_raw = b.p_succ_bound_raw;
  if (r.method == Method::kMub) {
    r.epsilon_bound_terms = bound_mub_error_terms(h.max_coefficient(), h.num_terms(), r.t, r.n);
  }
}

}  // namespace

ZenoRunResult run_zeno(const ExtendedSystem& sys, double t, std::int64_t n, int order,
                       const std::optional<StateVector>& psi0) {
  check_order(order);
  check_steps(n, t);
  if (sys.variant == Variant::kMub && order != 1) {
    throw std::invalid_argument("run_zeno: the mub variant supports order 1 only");
  }
  const StateVector psi = psi0.value_or(basis_state(sys.target_dim, 0));
  check_normalized(psi, sys.target_dim);

  ZenoRunResult r;
  r.method = method_for(sys, order);
  r.n = n;
  r.t = t;
  r.delta_t = t / double(n);

  const ComplexMatrix step = zeno_step_operator(sys, r.delta_t, order);
  const ComplexMatrix sequence = matrix_power(step, n);
  const ComplexMatrix ideal = kron(sys.target_evolution(t), sys.projector());
  r.epsilon_measured = spectral_norm(sequence - ideal);
  r.p_succ_exact = (sequence * kron(psi, sys.projector_state)).squaredNorm();
  fill_bounds(r, sys);
  return r;
}

ZenoRunResult run_kicks(const ExtendedSystem& sys, double t, std::int64_t n) {
  check_steps(n, t);
  if (sys.variant != Variant::kStandard) {
    throw std::invalid_argument("run_kicks: the reflection is defined about |phi>; use the standard variant");
  }
  ZenoRunResult r;
  r.method = Method::kKicks;
  r.n = n;
  r.t = t;
  r.delta_t = t / double(n);

  const ComplexMatrix kick = lift_ancilla(sys, sys.reflection) * select_unitary(sys, r.delta_t);
  const ComplexMatrix sequence = matrix_power(kick, n);
  const ComplexMatrix ideal = lift_target(sys, sys.target_evolution(t));
  r.epsilon_measured = spectral_norm((sequence - ideal) * lift_ancilla(sys, sys.projector()));
  r.p_succ_exact = 1.0;
  fill_bounds(r, sys);
  return r;
}

ZenoRunResult run_sampled(const ExtendedSystem& sys, double t, std::int64_t n, int order, const StateVector& psi0,
                          std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("run_sampled: shots must be >= 1");
  check_normalized(psi0, sys.target_dim);
  ZenoRunResult r = run_zeno(sys, t, n, order, psi0);
  r.shots = shots;
  r.seed = seed;

  const Eigen::Index ad = sys.ancilla_dim;
  const ComplexMatrix step = ancilla_zero_columns(sys, step_in_prepare_frame(sys, r.delta_t, order));
  const StateVector exact = sys.target_evolution(t) * psi0;

  std::vector<double> outcome_probs(static_cast<std::size_t>(ad));
  std::int64_t successes = 0;
  double fidelity_sum = 0.0;
  for (std::int64_t shot = 0; shot < shots; ++shot) {
    Rng rng(derived_seed(seed, static_cast<std::uint64_t>(shot)));
    StateVector psi = psi0;
    bool survived = true;
    for (std::int64_t k = 0; k < n; ++k) {
      const StateVector s = step * psi;
      std::fill(outcome_probs.begin(), outcome_probs.end(), 0.0);
      for (Eigen::Index tt = 0; tt < sys.target_dim; ++tt)
        for (Eigen::Index a = 0; a < ad; ++a) outcome_probs[std::size_t(a)] += std::norm(s(tt * ad + a));
      if (rng.categorical(outcome_probs) != 0) {
        survived = false;
        break;
      }
      for (Eigen::Index tt = 0; tt < sys.target_dim; ++tt) psi(tt) = s(tt * ad);
      psi /= std::sqrt(outcome_probs[0]);
    }
    if (survived) {
      ++successes;
      fidelity_sum += std::norm(exact.dot(psi));
    }
  }
  r.p_succ_sampled = double(successes) / double(shots);
  if (successes > 0) r.mean_fidelity = fidelity_sum / double(successes);
  return r;
}

}  // namespace zenosim
