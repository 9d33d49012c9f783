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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zenosim/linalg.hpp"

namespace zenosim {

enum class PauliAxis : unsigned char { I, X, Y, Z };

char to_char(PauliAxis axis);

/// One term h_j H_j of H = sum_j h_j H_j. The sign is folded into the
/// operator so the coefficient stays strictly positive and ||H_j|| = 1.
struct PauliTerm {
  double coefficient = 1.0;
  int sign = +1;
  std::vector<PauliAxis> axes;  // axes[0] is the most significant qubit

  std::size_t num_qubits() const { return axes.size(); }
  std::string word() const;
  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

class PauliHamiltonian {
 public:
  /// Validates every invariant; throws std::invalid_argument on violation.
  explicit PauliHamiltonian(std::vector<PauliTerm> terms);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t num_terms() const { return terms_.size(); }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  const PauliTerm& term(std::size_t j) const { return terms_.at(j); }

  /// lambda = sum_j h_j
  double lambda() const { return lambda_; }
  /// Lambda = max_j h_j
  double max_coefficient() const;
  /// p_j = h_j / lambda
  std::vector<double> probabilities() const;

  friend bool operator==(const PauliHamiltonian&, const PauliHamiltonian&) = default;

 private:
  std::size_t num_qubits_ = 0;
  std::vector<PauliTerm> terms_;
  double lambda_ = 0.0;
};

inline constexpr double kMinCoefficient = 1e-15;

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    kEmptyInput,
    kMixedLength,
    kInvalidCharacter,
    kSubThresholdCoefficient,
    kCancellation,
    kMalformed,
  };
  ParseError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Parses e.g. "0.6*XI + 0.4*IZ - 0.1*YY". `#` starts a comment running to
/// the end of the line. Terms on identical Pauli words are merged by signed
/// summation in first-appearance order.
PauliHamiltonian parse_hamiltonian(std::string_view text);

/// Reads and concatenates Hamiltonian files into a single expression,
/// joining non-empty lines and files with `+` where no operator is present.
/// Throws std::runtime_error if a file cannot be opened.
PauliHamiltonian load_hamiltonian(const std::vector<std::filesystem::path>& paths);

/// Text form accepted by parse_hamiltonian. Coefficients are written in the
/// shortest form that parses back to the same double.
std::string to_string(const PauliHamiltonian& h);

ComplexMatrix pauli_matrix(PauliAxis axis);

/// sign * (P_1 (x) P_2 (x) ... (x) P_n), dimension 2^n.
ComplexMatrix term_matrix(const PauliTerm& term);

/// sum_j h_j sign_j P_j as a dense Hermitian matrix.
ComplexMatrix hamiltonian_matrix(const PauliHamiltonian& h);

}  // namespace zenosim
