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

// Random instance generators and independent reference implementations
// shared by the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "zenosim/hamiltonian.hpp"
#include "zenosim/linalg.hpp"

namespace zenosim::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double normal() { return std::normal_distribution<double>()(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  ComplexMatrix complex_matrix(Eigen::Index rows, Eigen::Index cols) {
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(normal(), normal());
    return m;
  }

  ComplexMatrix hermitian(Eigen::Index dim) {
    const ComplexMatrix a = complex_matrix(dim, dim);
    return (a + a.adjoint()) / 2.0;
  }

  StateVector state(Eigen::Index dim) {
    StateVector v = complex_matrix(dim, 1);
    return v / v.norm();
  }

  /// Distinct Pauli words with positive coefficients in [0.05, 1] and random
  /// signs. Identity words are allowed.
  PauliHamiltonian hamiltonian(std::size_t qubits, std::size_t terms) {
    terms = std::min(terms, std::size_t{1} << (2 * qubits));  // 4^qubits distinct words
    std::vector<PauliTerm> out;
    std::vector<std::string> seen;
    while (out.size() < terms) {
      PauliTerm t;
      for (std::size_t q = 0; q < qubits; ++q) t.axes.push_back(static_cast<PauliAxis>(integer(0, 3)));
      const std::string w = t.word();
      if (std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
      seen.push_back(w);
      t.coefficient = uniform(0.05, 1.0);
      t.sign = integer(0, 1) ? 1 : -1;
      out.push_back(t);
    }
    return PauliHamiltonian(out);
  }

 private:
  std::mt19937_64 engine_;
};

/// exp(a) by scaling and squaring a 30-term Taylor series. Works for any
/// square matrix; independent of the eigensolver.
inline ComplexMatrix taylor_exp(const ComplexMatrix& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::ldexp(1.0, squarings) > 0.5) ++squarings;
  const ComplexMatrix x = a / std::ldexp(1.0, squarings);
  ComplexMatrix term = ComplexMatrix::Identity(a.rows(), a.cols());
  ComplexMatrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * x / double(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/// exp(-i h t) through the Taylor oracle.
inline ComplexMatrix taylor_evolution(const ComplexMatrix& h, double t) {
  return taylor_exp(Complex(0.0, -t) * h);
}

/// Largest singular value from Eigen's SVD.
inline double svd_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return Eigen::JacobiSVD<ComplexMatrix>(a).singularValues()(0);
}

/// Pauli matrices written out by hand.
inline ComplexMatrix pauli_literal(char c) {
  const Complex i(0, 1);
  ComplexMatrix m(2, 2);
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1;
  }
  return m;
}

/// Matrix of a Pauli word by explicit element evaluation:
/// <r|P|c> = prod_q <r_q|P_q|c_q>, qubit 0 most significant.
inline ComplexMatrix word_matrix(const std::string& word) {
  const std::size_t n = word.size();
  const Eigen::Index d = Eigen::Index{1} << n;
  ComplexMatrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) {
      Complex v(1, 0);
      for (std::size_t q = 0; q < n; ++q) {
        const int shift = int(n - 1 - q);
        v *= pauli_literal(word[q])((r >> shift) & 1, (c >> shift) & 1);
      }
      m(r, c) = v;
    }
  return m;
}

/// sum_j sign_j h_j P_j by element evaluation.
inline ComplexMatrix brute_hamiltonian(const PauliHamiltonian& h) {
  const Eigen::Index d = Eigen::Index{1} << h.num_qubits();
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (const auto& t : h.terms()) m += double(t.sign) * t.coefficient * word_matrix(t.word());
  return m;
}

inline std::vector<std::int64_t> log_spaced(std::int64_t lo, std::int64_t hi, int count) {
  std::vector<std::int64_t> out;
  for (int k = 0; k < count; ++k) {
    const double x = std::log(double(lo)) + (std::log(double(hi)) - std::log(double(lo))) * k / (count - 1);
    const auto n = std::int64_t(std::llround(std::exp(x)));
    if (out.empty() || out.back() != n) out.push_back(n);
  }
  return out;
}

}  // namespace zenosim::testing
