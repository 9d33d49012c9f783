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

// Dense complex linear algebra used by every error measurement: Kronecker
// products, a cyclic Jacobi Hermitian eigensolver, spectral functions of
// Hermitian matrices, and the spectral and trace norms.
//
// Everything here is templated on the Eigen expression type so callers can
// pass products, blocks and adjoints without materializing temporaries.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zenosim {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using ComplexMatrix = CMatrix<double>;
using StateVector = CVector<double>;

namespace tol {
inline constexpr double kUnitary = 1e-10;
inline constexpr double kHermitian = 1e-10;
inline constexpr double kEqual = 1e-9;
inline constexpr double kNormalized = 1e-10;
inline constexpr double kJacobiOffDiagonal = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kPowerRelative = 1e-10;
inline constexpr int kPowerMaxIterations = 10000;
}  // namespace tol

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotHermitianError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotUnitaryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when an iterative method hits its iteration cap. Carries the last
/// estimate and its residual so callers can decide whether to accept it.
struct ConvergenceError : std::runtime_error {
  ConvergenceError(const std::string& what, double last_estimate, double last_residual)
      : std::runtime_error(what), estimate(last_estimate), residual(last_residual) {}
  double estimate;
  double residual;
};

template <typename Derived>
auto dagger(const Eigen::MatrixBase<Derived>& a) {
  return a.adjoint().eval();
}

template <typename DerivedA, typename DerivedB>
auto matmul(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  return (a * b).eval();
}

template <typename DerivedA, typename DerivedV>
auto apply_operator(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedV>& v) {
  if (v.cols() != 1 || a.cols() != v.rows()) {
    throw DimensionError("apply_operator: operator has " + std::to_string(a.cols()) +
                         " columns, vector has " + std::to_string(v.rows()) + " entries");
  }
  return (a * v).eval();
}

/// Kronecker product; `a` is the outer (most significant) factor.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<typename DerivedA::Scalar,
                                                      typename DerivedB::Scalar>::ReturnType;
  using Result = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Result out(a.rows() * b.rows(), a.cols() * b.cols());
  const auto be = b.eval();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * be;
    }
  }
  return out;
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a,
                  typename Derived::RealScalar tolerance = tol::kHermitian) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& a,
                typename Derived::RealScalar tolerance = tol::kUnitary) {
  if (a.rows() != a.cols()) return false;
  using Plain = typename Derived::PlainObject;
  const Plain gram = a.adjoint() * a;
  return (gram - Plain::Identity(a.rows(), a.cols())).cwiseAbs().maxCoeff() <= tolerance;
}

/// Integer power by repeated squaring. `n == 0` yields the identity.
template <typename Derived>
typename Derived::PlainObject matrix_power(const Eigen::MatrixBase<Derived>& a, long long n) {
  using Plain = typename Derived::PlainObject;
  if (a.rows() != a.cols()) throw DimensionError("matrix_power: matrix is not square");
  if (n < 0) throw std::invalid_argument("matrix_power: negative exponent");
  Plain result = Plain::Identity(a.rows(), a.cols());
  Plain base = a;
  while (n > 0) {
    if (n & 1) result = (result * base).eval();
    n >>= 1;
    if (n > 0) base = (base * base).eval();
  }
  return result;
}

template <typename Real>
struct HermitianEigen {
  RVector<Real> eigenvalues;   // ascending
  CMatrix<Real> eigenvectors;  // columns, matching eigenvalues
  int sweeps = 0;
};

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
///
/// Each rotation first removes the phase of the pivot a_pq with a diagonal
/// unitary and then applies the real symmetric Jacobi rotation, so the
/// combined 2x2 unitary is [[c, s], [-s e^{-i phi}, c e^{-i phi}]]. Sweeps
/// stop once the off-diagonal Frobenius norm falls below
/// tol::kJacobiOffDiagonal relative to the Frobenius norm of the input.
template <typename Derived>
HermitianEigen<typename Derived::RealScalar> hermitian_eigen(const Eigen::MatrixBase<Derived>& h) {
  using Real = typename Derived::RealScalar;
  using Cx = std::complex<Real>;
  const Eigen::Index n = h.rows();
  if (h.rows() != h.cols()) throw DimensionError("hermitian_eigen: matrix is not square");
  if (!is_hermitian(h, Real(tol::kHermitian) * std::max(Real(1), h.cwiseAbs().maxCoeff()))) {
    throw NotHermitianError("hermitian_eigen: input is not Hermitian");
  }

  CMatrix<Real> a = h.template cast<Cx>();
  // Symmetrize so that the rotations act on an exactly Hermitian matrix.
  a = (Real(0.5) * (a + a.adjoint())).eval();
  CMatrix<Real> v = CMatrix<Real>::Identity(n, n);

  const Real scale = a.norm();
  const Real threshold = Real(tol::kJacobiOffDiagonal) * scale;
  auto off_norm = [&] {
    Real s = 0;
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  HermitianEigen<Real> out;
  int sweep = 0;
  for (; sweep < tol::kJacobiMaxSweeps; ++sweep) {
    if (off_norm() <= threshold) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Real r = std::abs(a(p, q));
        if (r == Real(0) || r <= std::numeric_limits<Real>::min() * scale) continue;
        const Cx phase = a(p, q) / r;  // e^{i phi}
        const Real tau = (a(q, q).real() - a(p, p).real()) / (Real(2) * r);
        const Real t = (tau >= 0 ? Real(1) : Real(-1)) / (std::abs(tau) + std::sqrt(Real(1) + tau * tau));
        const Real c = Real(1) / std::sqrt(Real(1) + t * t);
        const Real s = t * c;
        const Cx gpp = c;
        const Cx gpq = s;
        const Cx gqp = -s * std::conj(phase);
        const Cx gqq = c * std::conj(phase);

        // A <- A G (columns p, q)
        for (Eigen::Index k = 0; k < n; ++k) {
          const Cx akp = a(k, p);
          const Cx akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        // A <- G^dagger A (rows p, q)
        for (Eigen::Index k = 0; k < n; ++k) {
          const Cx apk = a(p, k);
          const Cx aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = Cx(0);
        a(q, p) = Cx(0);
        a(p, p) = Cx(a(p, p).real(), 0);
        a(q, q) = Cx(a(q, q).real(), 0);
        for (Eigen::Index k = 0; k < n; ++k) {
          const Cx vkp = v(k, p);
          const Cx vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
  }
  const Real residual = off_norm();
  if (residual > threshold) {
    throw ConvergenceError("hermitian_eigen: Jacobi sweeps did not converge", double(residual),
                           double(residual));
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = a(order[std::size_t(k)], order[std::size_t(k)]).real();
    out.eigenvectors.col(k) = v.col(order[std::size_t(k)]);
  }
  out.sweeps = sweep;
  return out;
}

/// f(h) for Hermitian h, via its eigendecomposition. `f` maps a real
/// eigenvalue to a complex number.
template <typename Derived, typename Fn>
CMatrix<typename Derived::RealScalar> hermitian_function(const Eigen::MatrixBase<Derived>& h, Fn&& f) {
  using Real = typename Derived::RealScalar;
  const auto eig = hermitian_eigen(h);
  CVector<Real> mapped(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < mapped.size(); ++k) mapped(k) = f(eig.eigenvalues(k));
  return eig.eigenvectors * mapped.asDiagonal() * eig.eigenvectors.adjoint();
}

/// exp(-i theta h) for Hermitian h.
template <typename Derived>
CMatrix<typename Derived::RealScalar> matexp_hermitian(const Eigen::MatrixBase<Derived>& h,
                                                       typename Derived::RealScalar theta) {
  using Real = typename Derived::RealScalar;
  return hermitian_function(h, [theta](Real x) { return std::polar(Real(1), -theta * x); });
}

namespace detail {

// Rayleigh-quotient power iteration on the PSD Gram matrix g from one start
// vector. The quotient increases monotonically; iteration stops once the
// estimated remaining increase (a geometric tail extrapolated from the last
// two increments) drops below tol::kPowerRelative * 1e-2 of the estimate, two
// iterations in a row.
template <typename Real>
Real power_iterate(const CMatrix<Real>& g, CVector<Real> v) {
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real target = Real(tol::kPowerRelative) * Real(1e-2);
  Real mu = 0;
  Real last_step = -1;
  Real residual = 0;
  int quiet = 0;
  for (int it = 0; it < tol::kPowerMaxIterations; ++it) {
    const Real vn = v.norm();
    if (vn == Real(0)) return Real(0);
    v /= vn;
    CVector<Real> w = g * v;
    const Real next = v.dot(w).real();
    residual = (w - next * v).norm();
    if (residual <= Real(8) * eps * std::abs(next)) return next;
    if (it > 0) {
      const Real step = std::abs(next - mu);
      if (step <= Real(4) * eps * std::abs(next)) return next;
      if (last_step > 0) {
        const Real ratio = std::min(step / last_step, Real(1) - eps);
        const Real tail = step * ratio / (Real(1) - ratio);
        quiet = tail <= target * std::abs(next) ? quiet + 1 : 0;
        if (quiet >= 2) return next;
      }
      last_step = step;
    }
    mu = next;
    v = std::move(w);
  }
  throw ConvergenceError("spectral_norm: power iteration hit its iteration cap",
                         double(std::sqrt(std::max(mu, Real(0)))), double(residual));
}

}  // namespace detail

/// Largest singular value by power iteration on a^dagger a.
///
/// Starts from the normalized all-ones vector. A second pass from a fixed
/// quasi-random complex vector guards against a start that is orthogonal to
/// the dominant singular subspace; the larger estimate wins. If both passes
/// collapse to zero, each basis vector is tried in turn. When the iteration
/// cap is hit (nearly degenerate top singular values) the dominant eigenvalue
/// of a^dagger a is taken from the Jacobi eigensolver instead; only if that
/// also fails does the ConvergenceError propagate.
template <typename Derived>
typename Derived::RealScalar spectral_norm(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Derived::RealScalar;
  using Cx = std::complex<Real>;
  const Eigen::Index n = a.cols();
  if (a.size() == 0) return Real(0);
  const CMatrix<Real> am = a.template cast<Cx>();
  const Real entry_scale = am.cwiseAbs().maxCoeff();
  if (entry_scale == Real(0)) return Real(0);
  // Rescaled to keep the Gram matrix away from overflow and underflow.
  const CMatrix<Real> scaled = am / entry_scale;
  const CMatrix<Real> g = scaled.adjoint() * scaled;

  CVector<Real> generic(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Real phase = Real(2 * M_PI) * std::fmod(Real(0.6180339887498949) * Real(k + 1), Real(1));
    generic(k) = std::polar(Real(1) + Real(0.5) * std::sin(Real(k + 1)), phase);
  }
  Real mu = 0;
  try {
    mu = std::max(detail::power_iterate<Real>(g, CVector<Real>::Ones(n)),
                  detail::power_iterate<Real>(g, generic));
    for (Eigen::Index k = 0; k < n && mu <= Real(0); ++k) {
      mu = detail::power_iterate<Real>(g, CVector<Real>::Unit(n, k));
    }
  } catch (const ConvergenceError&) {
    mu = hermitian_eigen(g).eigenvalues.maxCoeff();
  }
  return entry_scale * std::sqrt(std::max(mu, Real(0)));
}

/// Sum of singular values. Hermitian inputs use |eigenvalues| directly,
/// which keeps full precision on rank-deficient matrices; otherwise the
/// square roots of the eigenvalues of a^dagger a are summed.
template <typename Derived>
typename Derived::RealScalar trace_norm(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Derived::RealScalar;
  if (a.rows() != a.cols()) throw DimensionError("trace_norm: matrix is not square");
  if (a.size() == 0) return Real(0);
  const Real scale = a.cwiseAbs().maxCoeff();
  if (scale == Real(0)) return Real(0);
  if (is_hermitian(a, Real(1e-14) * scale)) {
    const CMatrix<Real> h = (a + a.adjoint()) / Real(2);
    return hermitian_eigen(h).eigenvalues.cwiseAbs().sum();
  }
  CMatrix<Real> g = a.adjoint() * a;
  g = (Real(0.5) * (g + g.adjoint())).eval();
  const auto eig = hermitian_eigen(g);
  Real sum = 0;
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) sum += std::sqrt(std::max(eig.eigenvalues(k), Real(0)));
  return sum;
}

}  // namespace zenosim
