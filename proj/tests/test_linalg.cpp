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

#include <Eigen/Eigenvalues>

#include "support.hpp"
#include "zenosim/linalg.hpp"

namespace zenosim {
namespace {

using testing::Gen;

TEST(Linalg, KronMatchesElementFormula) {
  Gen g(1);
  const ComplexMatrix a = g.complex_matrix(2, 3), b = g.complex_matrix(3, 2);
  const ComplexMatrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 6);
  ASSERT_EQ(k.cols(), 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 2; ++c) EXPECT_EQ(k(i * 3 + r, j * 2 + c), a(i, j) * b(r, c));
}

TEST(Linalg, MatmulRejectsMismatch) {
  const ComplexMatrix a(2, 3), b(2, 2);
  EXPECT_THROW(matmul(a, b), DimensionError);
  const StateVector v(4);
  EXPECT_THROW(apply_operator(a, v), DimensionError);
}

TEST(Linalg, DaggerIsConjugateTranspose) {
  Gen g(2);
  const ComplexMatrix a = g.complex_matrix(3, 4);
  const ComplexMatrix d = dagger(a);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(d(j, i), std::conj(a(i, j)));
}

TEST(Linalg, MatrixPowerMatchesRepeatedProduct) {
  Gen g(3);
  const ComplexMatrix a = g.complex_matrix(4, 4) / 3.0;
  ComplexMatrix p = ComplexMatrix::Identity(4, 4);
  for (int k = 0; k <= 13; ++k) {
    EXPECT_LT((matrix_power(a, k) - p).norm(), 1e-10 * std::max(1.0, p.norm())) << k;
    p = p * a;
  }
}

TEST(Linalg, HermitianPredicates) {
  Gen g(4);
  const ComplexMatrix h = g.hermitian(5);
  EXPECT_TRUE(is_hermitian(h));
  EXPECT_FALSE(is_hermitian(g.complex_matrix(5, 5)));
  EXPECT_TRUE(is_unitary(matexp_hermitian(h, 0.7)));
  EXPECT_FALSE(is_unitary(h));
}

TEST(Linalg, EigenRejectsNonHermitian) {
  Gen g(5);
  EXPECT_THROW(hermitian_eigen(g.complex_matrix(4, 4)), NotHermitianError);
  EXPECT_THROW(hermitian_eigen(g.complex_matrix(4, 3)), DimensionError);
}

TEST(Linalg, EigenOnDiagonalIsSorted) {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d.diagonal() << 3.0, -1.0, 2.0;
  const auto e = hermitian_eigen(d);
  EXPECT_DOUBLE_EQ(e.eigenvalues(0), -1.0);
  EXPECT_DOUBLE_EQ(e.eigenvalues(1), 2.0);
  EXPECT_DOUBLE_EQ(e.eigenvalues(2), 3.0);
}

class EigenReconstruction : public ::testing::TestWithParam<int> {};

TEST_P(EigenReconstruction, ResidualAndOrthonormality) {
  const int dim = GetParam();
  Gen g(100 + dim);
  const ComplexMatrix h = g.hermitian(dim);
  const auto e = hermitian_eigen(h);
  const ComplexMatrix& v = e.eigenvectors;
  const ComplexMatrix recon = v * e.eigenvalues.cast<Complex>().asDiagonal() * v.adjoint();
  EXPECT_LT((recon - h).norm() / std::max(1.0, h.norm()), 1e-9);
  EXPECT_LT((v.adjoint() * v - ComplexMatrix::Identity(dim, dim)).norm(), 1e-9);
  // Eigenvalues agree with Eigen's solver.
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> ref(h);
  EXPECT_LT((ref.eigenvalues() - e.eigenvalues).cwiseAbs().maxCoeff(), 1e-9 * std::max(1.0, h.norm()));
}

INSTANTIATE_TEST_SUITE_P(Dims, EigenReconstruction, ::testing::Values(1, 2, 3, 8, 17, 64, 256));

TEST(Linalg, EigenHandlesDegenerateSpectrum) {
  // Pauli sums have heavily degenerate spectra.
  ComplexMatrix h = kron(testing::pauli_literal('X'), testing::pauli_literal('X')) +
                    kron(testing::pauli_literal('Z'), testing::pauli_literal('Z'));
  const auto e = hermitian_eigen(h);
  const ComplexMatrix recon = e.eigenvectors * e.eigenvalues.cast<Complex>().asDiagonal() * e.eigenvectors.adjoint();
  EXPECT_LT((recon - h).norm(), 1e-12);
}

TEST(Linalg, MatexpMatchesTaylorOracle) {
  Gen g(6);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = g.integer(1, 16);
    const ComplexMatrix h = g.hermitian(dim);
    const double theta = g.uniform(-3.0, 3.0);
    EXPECT_LT((matexp_hermitian(h, theta) - testing::taylor_evolution(h, theta)).norm(), 1e-10) << trial;
  }
}

TEST(Linalg, MatexpOfPauliIsRotation) {
  const ComplexMatrix x = testing::pauli_literal('X');
  const double th = 0.37;
  const ComplexMatrix expected =
      std::cos(th) * ComplexMatrix::Identity(2, 2) - Complex(0, std::sin(th)) * x;
  EXPECT_LT((matexp_hermitian(x, th) - expected).norm(), 1e-14);
}

TEST(Linalg, SpectralNormMatchesSvd) {
  Gen g(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int r = g.integer(1, 24), c = g.integer(1, 24);
    const ComplexMatrix a = g.complex_matrix(r, c) * std::pow(10.0, g.uniform(-6, 3));
    const double ref = testing::svd_norm(a);
    EXPECT_NEAR(spectral_norm(a), ref, 1e-8 * std::max(1.0, ref)) << trial;
  }
}

TEST(Linalg, SpectralNormDegenerateTopSingularValues) {
  // Unitaries have all singular values equal; nearly unitary differences are
  // the regime the Zeno error measurement lives in.
  Gen g(8);
  const ComplexMatrix u = matexp_hermitian(g.hermitian(16), 1.3);
  EXPECT_NEAR(spectral_norm(u), 1.0, 1e-10);
  const ComplexMatrix w = matexp_hermitian(g.hermitian(16), 1e-4);
  const ComplexMatrix diff = u * w - u;
  EXPECT_NEAR(spectral_norm(diff), testing::svd_norm(diff), 1e-12);
}

TEST(Linalg, SpectralNormOfZeroAndEmpty) {
  EXPECT_EQ(spectral_norm(ComplexMatrix::Zero(4, 4)), 0.0);
  EXPECT_EQ(spectral_norm(ComplexMatrix(0, 0)), 0.0);
}

TEST(Linalg, SpectralNormRankOneOrthogonalToStarts) {
  // A rank-one matrix whose right singular vector is orthogonal to the
  // all-ones start.
  StateVector v(4);
  v << 1, -1, 1, -1;
  const ComplexMatrix a = v * v.adjoint();
  EXPECT_NEAR(spectral_norm(a), 4.0, 1e-10);
}

TEST(Linalg, TraceNormMatchesSingularValueSum) {
  Gen g(9);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = g.integer(1, 16);
    const ComplexMatrix a = trial % 2 ? g.hermitian(dim) : g.complex_matrix(dim, dim);
    const double ref = Eigen::JacobiSVD<ComplexMatrix>(a).singularValues().sum();
    EXPECT_NEAR(trace_norm(a), ref, 1e-9 * std::max(1.0, ref)) << trial;
  }
}

// Properties over random instances.

TEST(LinalgProperty, TelescopingIdentity) {
  // A^N - B^N = sum_k A^(N-1-k) (A - B) B^k, hence
  // ||U^N - W^N|| <= N ||U - W|| for unitaries.
  Gen g(10);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = g.integer(2, 8);
    const int n = g.integer(1, 20);
    const ComplexMatrix u = matexp_hermitian(g.hermitian(dim), g.uniform(0, 1));
    const ComplexMatrix w = matexp_hermitian(g.hermitian(dim), g.uniform(0, 1));
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    for (int k = 0; k < n; ++k) sum += matrix_power(u, n - 1 - k) * (u - w) * matrix_power(w, k);
    EXPECT_LT((sum - (matrix_power(u, n) - matrix_power(w, n))).norm(), 1e-9) << trial;
    EXPECT_LE(spectral_norm(matrix_power(u, n) - matrix_power(w, n)), n * spectral_norm(u - w) + 1e-10) << trial;
  }
}

TEST(LinalgProperty, TaylorRemainder) {
  // ||exp(-iHt) - (1 - iHt)|| <= (||H|| t)^2 / 2.
  Gen g(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = g.integer(1, 8);
    const ComplexMatrix h = g.hermitian(dim);
    const double t = g.uniform(0, 1);
    const ComplexMatrix first = ComplexMatrix::Identity(dim, dim) - Complex(0, t) * h;
    const double bound = std::pow(spectral_norm(h) * t, 2) / 2.0;
    EXPECT_LE(spectral_norm(matexp_hermitian(h, t) - first), bound + 1e-12) << trial;
  }
}

TEST(LinalgProperty, Submultiplicativity) {
  Gen g(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = g.integer(1, 8);
    const ComplexMatrix a = g.complex_matrix(dim, dim), b = g.complex_matrix(dim, dim);
    EXPECT_LE(spectral_norm(a * b), spectral_norm(a) * spectral_norm(b) * (1 + 1e-10)) << trial;
    EXPECT_LE(spectral_norm(a + b), (spectral_norm(a) + spectral_norm(b)) * (1 + 1e-10)) << trial;
  }
}

TEST(LinalgProperty, ExpAdditivity) {
  Gen g(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = g.integer(1, 8);
    const ComplexMatrix h = g.hermitian(dim);
    const double s = g.uniform(-2, 2), t = g.uniform(-2, 2);
    EXPECT_LT((matexp_hermitian(h, s) * matexp_hermitian(h, t) - matexp_hermitian(h, s + t)).norm(), 1e-10);
  }
}

}  // namespace
}  // namespace zenosim
