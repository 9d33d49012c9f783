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

#include "zenosim/hamiltonian.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

namespace zenosim {

char to_char(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::I: return 'I';
    case PauliAxis::X: return 'X';
    case PauliAxis::Y: return 'Y';
    case PauliAxis::Z: return 'Z';
  }
  return '?';
}

std::string PauliTerm::word() const {
  std::string w;
  w.reserve(axes.size());
  for (auto a : axes) w.push_back(to_char(a));
  return w;
}

PauliHamiltonian::PauliHamiltonian(std::vector<PauliTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("PauliHamiltonian: at least one term required");
  num_qubits_ = terms_.front().axes.size();
  if (num_qubits_ == 0) throw std::invalid_argument("PauliHamiltonian: terms must act on at least one qubit");
  for (std::size_t j = 0; j < terms_.size(); ++j) {
    const auto& t = terms_[j];
    if (t.axes.size() != num_qubits_) throw std::invalid_argument("PauliHamiltonian: mixed qubit counts");
    if (!(t.coefficient > 0.0) || !std::isfinite(t.coefficient)) {
      throw std::invalid_argument("PauliHamiltonian: coefficients must be finite and positive");
    }
    if (t.sign != 1 && t.sign != -1) throw std::invalid_argument("PauliHamiltonian: sign must be +1 or -1");
    for (std::size_t k = 0; k < j; ++k) {
      if (terms_[k].axes == t.axes && terms_[k].sign == t.sign) {
        throw std::invalid_argument("PauliHamiltonian: duplicate term " + t.word());
      }
    }
  }
  lambda_ = std::accumulate(terms_.begin(), terms_.end(), 0.0,
                            [](double acc, const PauliTerm& t) { return acc + t.coefficient; });
}

double PauliHamiltonian::max_coefficient() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, t.coefficient);
  return m;
}

std::vector<double> PauliHamiltonian::probabilities() const {
  std::vector<double> p;
  p.reserve(terms_.size());
  for (const auto& t : terms_) p.push_back(t.coefficient / lambda_);
  return p;
}

namespace {

std::string strip_comments(std::string_view text) {
  std::string out;
  bool in_comment = false;
  for (char c : text) {
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    if (!in_comment) out.push_back(c);
  }
  return out;
}

std::optional<PauliAxis> axis_from_char(char c) {
  switch (c) {
    case 'I': return PauliAxis::I;
    case 'X': return PauliAxis::X;
    case 'Y': return PauliAxis::Y;
    case 'Z': return PauliAxis::Z;
    default: return std::nullopt;
  }
}

bool is_number_start(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.'; }

// Cursor over whitespace-free text.
struct Cursor {
  std::string_view s;
  std::size_t pos = 0;
  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }

  [[noreturn]] void fail(ParseError::Kind kind, const std::string& msg) const {
    throw ParseError(kind, "parse_hamiltonian: " + msg + " at offset " + std::to_string(pos));
  }

  double number() {
    const std::size_t begin = pos;
    auto digits = [&] {
      while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    };
    digits();
    if (!done() && peek() == '.') {
      ++pos;
      digits();
    }
    if (pos - begin == 1 && s[begin] == '.') fail(ParseError::Kind::kMalformed, "lone '.'");
    if (!done() && (peek() == 'e' || peek() == 'E')) {
      ++pos;
      if (!done() && (peek() == '+' || peek() == '-')) ++pos;
      const std::size_t exp_begin = pos;
      digits();
      if (pos == exp_begin) fail(ParseError::Kind::kMalformed, "missing exponent digits");
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data() + begin, s.data() + pos, value);
    if (ec != std::errc() || ptr != s.data() + pos || !std::isfinite(value)) {
      pos = begin;
      fail(ParseError::Kind::kMalformed, "bad coefficient");
    }
    return value;
  }

  // Characters of the grammar in the wrong place are malformed input; anything
  // else is an invalid character.
  [[noreturn]] void unexpected() const {
    const char c = peek();
    if (std::string_view("0123456789.*+-").find(c) != std::string_view::npos) {
      fail(ParseError::Kind::kMalformed, std::string("unexpected '") + c + "'");
    }
    fail(ParseError::Kind::kInvalidCharacter, std::string("invalid character '") + c + "'");
  }

  std::vector<PauliAxis> word() {
    std::vector<PauliAxis> axes;
    while (!done() && std::isalpha(static_cast<unsigned char>(peek()))) {
      const auto a = axis_from_char(peek());
      if (!a) fail(ParseError::Kind::kInvalidCharacter, std::string("invalid character '") + peek() + "'");
      axes.push_back(*a);
      ++pos;
    }
    if (axes.empty()) {
      if (done()) fail(ParseError::Kind::kMalformed, "missing Pauli word");
      unexpected();
    }
    return axes;
  }
};

struct RawTerm {
  double value;  // signed
  std::vector<PauliAxis> axes;
};

}  // namespace

PauliHamiltonian parse_hamiltonian(std::string_view text) {
  std::string compact;
  for (char c : strip_comments(text)) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw ParseError(ParseError::Kind::kEmptyInput, "parse_hamiltonian: empty input");

  Cursor cur{compact};
  std::vector<RawTerm> raw;
  while (true) {
    double sign = 1.0;
    bool saw_operator = false;
    while (!cur.done() && (cur.peek() == '+' || cur.peek() == '-')) {
      if (cur.peek() == '-') sign = -sign;
      saw_operator = true;
      ++cur.pos;
    }
    if (!raw.empty() && !saw_operator) cur.fail(ParseError::Kind::kMalformed, "expected '+' or '-'");
    if (cur.done()) cur.fail(ParseError::Kind::kMalformed, "dangling operator");

    double value = 1.0;
    if (is_number_start(cur.peek())) {
      value = cur.number();
      if (cur.done() || cur.peek() != '*') cur.fail(ParseError::Kind::kMalformed, "expected '*' after coefficient");
      ++cur.pos;
    }
    auto axes = cur.word();
    value *= sign;
    if (std::abs(value) < kMinCoefficient) {
      cur.fail(ParseError::Kind::kSubThresholdCoefficient, "coefficient magnitude below 1e-15");
    }
    if (!raw.empty() && axes.size() != raw.front().axes.size()) {
      cur.fail(ParseError::Kind::kMixedLength, "mixed Pauli word lengths");
    }
    raw.push_back({value, std::move(axes)});
    if (cur.done()) break;
    if (cur.peek() != '+' && cur.peek() != '-') cur.unexpected();
  }

  std::vector<RawTerm> merged;
  for (auto& r : raw) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const RawTerm& m) { return m.axes == r.axes; });
    if (it == merged.end()) {
      merged.push_back(std::move(r));
    } else {
      it->value += r.value;
    }
  }
  std::vector<PauliTerm> terms;
  terms.reserve(merged.size());
  for (auto& m : merged) {
    if (std::abs(m.value) < kMinCoefficient) {
      std::string w;
      for (auto a : m.axes) w.push_back(to_char(a));
      throw ParseError(ParseError::Kind::kCancellation, "parse_hamiltonian: terms on " + w + " cancel");
    }
    terms.push_back(PauliTerm{std::abs(m.value), m.value > 0 ? 1 : -1, std::move(m.axes)});
  }
  return PauliHamiltonian(std::move(terms));
}

namespace {

bool ends_with_operator(const std::string& expr) {
  const auto last = expr.find_last_not_of(" \t\r");
  return last == std::string::npos || expr[last] == '+' || expr[last] == '-';
}

// Appends `piece` to `expr`, inserting '+' unless either side already
// supplies an operator.
void join_expression(std::string& expr, std::string_view piece) {
  const auto first = piece.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return;
  piece.remove_prefix(first);
  if (!expr.empty()) {
    const bool piece_signed = piece.front() == '+' || piece.front() == '-';
    expr += (ends_with_operator(expr) || piece_signed) ? " " : " + ";
  }
  expr += piece;
}

}  // namespace

PauliHamiltonian load_hamiltonian(const std::vector<std::filesystem::path>& paths) {
  std::string expr;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open Hamiltonian file: " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    std::istringstream lines(strip_comments(buf.str()));
    std::string file_expr;
    std::string line;
    while (std::getline(lines, line)) join_expression(file_expr, line);
    if (file_expr.empty()) continue;
    if (!expr.empty()) expr += " +";
    join_expression(expr, file_expr);
  }
  return parse_hamiltonian(expr);
}

std::string to_string(const PauliHamiltonian& h) {
  std::string out;
  char buf[64];
  for (std::size_t j = 0; j < h.num_terms(); ++j) {
    const auto& t = h.term(j);
    *std::to_chars(buf, buf + sizeof buf - 1, t.coefficient).ptr = '\0';
    if (j == 0) {
      out += t.sign < 0 ? "-" : "";
    } else {
      out += t.sign < 0 ? " - " : " + ";
    }
    out += buf;
    out += '*';
    out += t.word();
  }
  return out;
}

ComplexMatrix pauli_matrix(PauliAxis axis) {
  const Complex i{0.0, 1.0};
  ComplexMatrix m(2, 2);
  switch (axis) {
    case PauliAxis::I: m << 1, 0, 0, 1; break;
    case PauliAxis::X: m << 0, 1, 1, 0; break;
    case PauliAxis::Y: m << 0, -i, i, 0; break;
    case PauliAxis::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

ComplexMatrix term_matrix(const PauliTerm& term) {
  ComplexMatrix m = ComplexMatrix::Identity(1, 1) * double(term.sign);
  for (auto a : term.axes) m = kron(m, pauli_matrix(a));
  return m;
}

ComplexMatrix hamiltonian_matrix(const PauliHamiltonian& h) {
  const Eigen::Index dim = Eigen::Index{1} << h.num_qubits();
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (const auto& t : h.terms()) m += t.coefficient * term_matrix(t);
  return m;
}

}  // namespace zenosim
