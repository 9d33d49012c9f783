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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "zenosim/hamiltonian.hpp"

namespace zenosim {
namespace {

using Kind = ParseError::Kind;

Kind parse_error_kind(std::string_view text) {
  try {
    parse_hamiltonian(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ParseError for '" << text << "'";
  return Kind::kMalformed;
}

TEST(Parse, SingleTerm) {
  const auto h = parse_hamiltonian("0.5*Z");
  ASSERT_EQ(h.num_terms(), 1u);
  EXPECT_EQ(h.num_qubits(), 1u);
  EXPECT_DOUBLE_EQ(h.term(0).coefficient, 0.5);
  EXPECT_EQ(h.term(0).sign, 1);
  EXPECT_DOUBLE_EQ(h.lambda(), 0.5);
}

TEST(Parse, TwoQubitSum) {
  const auto h = parse_hamiltonian("0.6*XI + 0.4*IZ");
  ASSERT_EQ(h.num_terms(), 2u);
  EXPECT_EQ(h.num_qubits(), 2u);
  EXPECT_DOUBLE_EQ(h.lambda(), 1.0);
  EXPECT_EQ(h.term(0).word(), "XI");
  EXPECT_EQ(h.term(1).word(), "IZ");
}

TEST(Parse, NegativeFoldsIntoSign) {
  const auto h = parse_hamiltonian("-0.3*Y");
  EXPECT_DOUBLE_EQ(h.term(0).coefficient, 0.3);
  EXPECT_EQ(h.term(0).sign, -1);
  EXPECT_DOUBLE_EQ(h.lambda(), 0.3);
  EXPECT_EQ(parse_hamiltonian("X + -0.3*Y").term(1).sign, -1);
  EXPECT_EQ(parse_hamiltonian("X - -0.3*Y").term(1).sign, 1);
  EXPECT_EQ(parse_hamiltonian("X - Y").term(1).sign, -1);
  // Repeated operators compose like the signs of a negative decimal.
  EXPECT_EQ(parse_hamiltonian("X ++ Z").term(1).sign, 1);
  EXPECT_EQ(parse_hamiltonian("X -+ Z").term(1).sign, -1);
}

TEST(Parse, BareWordHasUnitCoefficient) {
  const auto h = parse_hamiltonian("XX + 0.25*ZZ");
  EXPECT_DOUBLE_EQ(h.term(0).coefficient, 1.0);
  EXPECT_DOUBLE_EQ(h.lambda(), 1.25);
}

TEST(Parse, WhitespaceCommentsAndExponents) {
  const auto h = parse_hamiltonian("  1.5e-1 * X Y  # comment\n\t+ 2E0*ZZ # more\n");
  ASSERT_EQ(h.num_terms(), 2u);
  EXPECT_DOUBLE_EQ(h.term(0).coefficient, 0.15);
  EXPECT_EQ(h.term(0).word(), "XY");
  EXPECT_DOUBLE_EQ(h.term(1).coefficient, 2.0);
}

TEST(Parse, DuplicatesMergeInFirstAppearanceOrder) {
  const auto h = parse_hamiltonian("0.2*X + 0.5*Z + 0.3*X");
  ASSERT_EQ(h.num_terms(), 2u);
  EXPECT_EQ(h.term(0).word(), "X");
  EXPECT_DOUBLE_EQ(h.term(0).coefficient, 0.5);
  EXPECT_EQ(h.term(1).word(), "Z");
}

TEST(Parse, OppositeSignsMergeBySignedSum) {
  const auto h = parse_hamiltonian("0.2*X - 0.5*X + Z");
  EXPECT_EQ(h.term(0).sign, -1);
  EXPECT_NEAR(h.term(0).coefficient, 0.3, 1e-15);
}

TEST(Parse, Errors) {
  EXPECT_EQ(parse_error_kind(""), Kind::kEmptyInput);
  EXPECT_EQ(parse_error_kind("   # only a comment\n"), Kind::kEmptyInput);
  EXPECT_EQ(parse_error_kind("0.5*XZ + 0.2*X"), Kind::kMixedLength);
  EXPECT_EQ(parse_error_kind("0.5*XA"), Kind::kInvalidCharacter);
  EXPECT_EQ(parse_error_kind("0.5*xz"), Kind::kInvalidCharacter);
  EXPECT_EQ(parse_error_kind("0*X"), Kind::kSubThresholdCoefficient);
  EXPECT_EQ(parse_error_kind("1e-16*X"), Kind::kSubThresholdCoefficient);
  EXPECT_EQ(parse_error_kind("0.5*X - 0.5*X"), Kind::kCancellation);
  EXPECT_EQ(parse_error_kind("0.5*X - 0.5*X + Z"), Kind::kCancellation);
  EXPECT_EQ(parse_error_kind("0.5*"), Kind::kMalformed);
  EXPECT_EQ(parse_error_kind("0.5 X"), Kind::kMalformed);
  EXPECT_EQ(parse_error_kind("X +"), Kind::kMalformed);
  EXPECT_EQ(parse_error_kind("X + * Z"), Kind::kMalformed);
  EXPECT_EQ(parse_error_kind("0.5*X2"), Kind::kMalformed);
  EXPECT_EQ(parse_error_kind("0.5*X$"), Kind::kInvalidCharacter);
}

TEST(Hamiltonian, ConstructorValidates) {
  EXPECT_THROW(PauliHamiltonian({}), std::invalid_argument);
  PauliTerm bad{0.0, 1, {PauliAxis::X}};
  EXPECT_THROW(PauliHamiltonian({bad}), std::invalid_argument);
  PauliTerm a{0.5, 1, {PauliAxis::X}}, b{0.5, 1, {PauliAxis::X, PauliAxis::Z}};
  EXPECT_THROW(PauliHamiltonian({a, b}), std::invalid_argument);
  PauliTerm s{0.5, 2, {PauliAxis::X}};
  EXPECT_THROW(PauliHamiltonian({s}), std::invalid_argument);
  EXPECT_THROW(PauliHamiltonian({a, a}), std::invalid_argument);
}

TEST(Hamiltonian, ProbabilitiesAndMaxCoefficient) {
  const auto h = parse_hamiltonian("0.1*X + 0.3*Y + 0.6*Z");
  const auto p = h.probabilities();
  EXPECT_NEAR(p[0], 0.1, 1e-15);
  EXPECT_NEAR(p[2], 0.6, 1e-15);
  EXPECT_DOUBLE_EQ(h.max_coefficient(), 0.6);
}

TEST(TermMatrix, Examples) {
  const auto z = term_matrix({1.0, 1, {PauliAxis::Z}});
  EXPECT_EQ(z, testing::pauli_literal('Z'));
  ComplexMatrix mx(2, 2);
  mx << 0, -1, -1, 0;
  EXPECT_EQ(term_matrix({1.0, -1, {PauliAxis::X}}), mx);
  const auto xz = term_matrix({1.0, 1, {PauliAxis::X, PauliAxis::Z}});
  EXPECT_EQ(xz, testing::word_matrix("XZ"));
  EXPECT_EQ(xz(0, 2), Complex(1));
  EXPECT_EQ(xz(1, 3), Complex(-1));
  EXPECT_EQ(xz(0, 0), Complex(0));
}

TEST(HamiltonianMatrix, Examples) {
  ComplexMatrix e(2, 2);
  e << 0.5, 0, 0, -0.5;
  EXPECT_LT((hamiltonian_matrix(parse_hamiltonian("0.5*Z")) - e).norm(), 1e-15);
  e << 0.5, 0.5, 0.5, -0.5;
  EXPECT_LT((hamiltonian_matrix(parse_hamiltonian("0.5*X + 0.5*Z")) - e).norm(), 1e-15);
}

TEST(HamiltonianMatrix, MatchesElementwiseResummation) {
  testing::Gen g(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = g.hamiltonian(std::size_t(g.integer(1, 4)), 3);
    EXPECT_LT((hamiltonian_matrix(h) - testing::brute_hamiltonian(h)).norm(), 1e-13) << trial;
  }
}

TEST(HamiltonianProperty, NormAtMostLambda) {
  testing::Gen g(22);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = g.hamiltonian(std::size_t(g.integer(1, 4)), std::size_t(g.integer(1, 6)));
    EXPECT_LE(spectral_norm(hamiltonian_matrix(h)), h.lambda() + 1e-10) << trial;
  }
}

TEST(HamiltonianProperty, SerializationRoundTrip) {
  testing::Gen g(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = g.hamiltonian(std::size_t(g.integer(1, 5)), std::size_t(g.integer(1, 8)));
    const auto back = parse_hamiltonian(to_string(h));
    EXPECT_EQ(back, h) << to_string(h);
  }
}

TEST(HamiltonianProperty, PauliInvolution) {
  testing::Gen g(24);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = g.hamiltonian(std::size_t(g.integer(1, 4)), 1);
    const ComplexMatrix m = term_matrix(h.term(0));
    const ComplexMatrix id = ComplexMatrix::Identity(m.rows(), m.cols());
    EXPECT_LE((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LE((m * m - id).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_NEAR(spectral_norm(m), 1.0, 1e-12);
  }
}

class LoadTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("zenosim_load_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path write(const std::string& name, const std::string& body) {
    const auto p = dir_ / name;
    std::ofstream(p) << body;
    return p;
  }
  std::filesystem::path dir_;
};

TEST_F(LoadTest, FilesAndLinesJoinWithPlus) {
  const auto a = write("a.txt", "# header\n0.5*XI\n\n0.25*IZ - 0.1*YY\n");
  const auto b = write("b.txt", "0.15*ZZ  # tail\n");
  const auto h = load_hamiltonian({a, b});
  ASSERT_EQ(h.num_terms(), 4u);
  EXPECT_EQ(h.term(2).sign, -1);
  EXPECT_EQ(h.term(3).word(), "ZZ");
  EXPECT_NEAR(h.lambda(), 1.0, 1e-15);
}

TEST_F(LoadTest, ContinuationLinesKeepOperators) {
  const auto a = write("a.txt", "0.5*X\n- 0.2*Z\n");
  const auto h = load_hamiltonian({a});
  EXPECT_EQ(h.term(1).sign, -1);
}

TEST_F(LoadTest, MissingFileThrows) {
  EXPECT_THROW(load_hamiltonian({dir_ / "nope.txt"}), std::runtime_error);
}

}  // namespace
}  // namespace zenosim
