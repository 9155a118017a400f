// Copyright 2026 The qesd Authors
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

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qesd/errors.hpp"

namespace qesd {

using Complex = std::complex<double>;

/// Dense 4x4 complex matrix, row-major. Sized for two-qubit operators.
class ComplexMatrix4 {
 public:
  static constexpr std::size_t kDim = 4;

  constexpr ComplexMatrix4() = default;

  static ComplexMatrix4 identity();
  static ComplexMatrix4 diagonal(const std::array<double, 4>& d);

  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * kDim + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * kDim + j]; }

  ComplexMatrix4 adjoint() const;
  ComplexMatrix4 conjugate() const;
  ComplexMatrix4 transpose() const;
  Complex trace() const;

  /// Largest |M_ij|.
  double max_abs() const;
  /// max |M - M^dagger|.
  double hermiticity_defect() const;

  ComplexMatrix4& operator+=(const ComplexMatrix4& o);
  ComplexMatrix4& operator-=(const ComplexMatrix4& o);
  ComplexMatrix4& operator*=(Complex s);

  friend ComplexMatrix4 operator+(ComplexMatrix4 a, const ComplexMatrix4& b) { return a += b; }
  friend ComplexMatrix4 operator-(ComplexMatrix4 a, const ComplexMatrix4& b) { return a -= b; }
  friend ComplexMatrix4 operator*(ComplexMatrix4 a, Complex s) { return a *= s; }
  friend ComplexMatrix4 operator*(Complex s, ComplexMatrix4 a) { return a *= s; }
  friend ComplexMatrix4 operator*(const ComplexMatrix4& a, const ComplexMatrix4& b);

  friend bool operator==(const ComplexMatrix4&, const ComplexMatrix4&) = default;

 private:
  std::array<Complex, kDim * kDim> a_{};
};

/// max_ij |A_ij - B_ij|
double max_abs_diff(const ComplexMatrix4& a, const ComplexMatrix4& b);

/// Kronecker product of two 2x2 operators, first factor acting on qubit A.
ComplexMatrix4 kron(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b);

using RealVector4 = std::array<double, 4>;

/// Eigenvalues sorted descending; eigenvectors stored as columns in the same order.
struct HermitianEigensystem {
  RealVector4 values{};
  ComplexMatrix4 vectors;
};

/// Tolerance on max|M - M^dagger| (scaled by max(1, max|M_ij|)) accepted by the eigensolver.
inline constexpr double kHermitianTolerance = 1e-12;
/// Eigenvalues in [-kPsdClampTolerance, 0) are treated as round-off and clamped to zero.
inline constexpr double kPsdClampTolerance = 1e-10;

/// Cyclic complex Jacobi diagonalization of a Hermitian 4x4 matrix.
/// Throws PreconditionError for non-Hermitian input.
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix4& m);

RealVector4 hermitian_eigenvalues(const ComplexMatrix4& m);

/// Singular values, descending, by one-sided (Hestenes) Jacobi. Absolute error is of
/// order machine epsilon times the largest singular value.
RealVector4 singular_values(const ComplexMatrix4& m);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Throws NotPsdError when an eigenvalue is below -kPsdClampTolerance.
ComplexMatrix4 psd_sqrt(const ComplexMatrix4& m);

/// Right-hand side of ds/dt = f(t, s); writes the derivative into `ds`.
template <class F>
concept DerivativeMap = requires(F f, double t, std::span<const double> s, std::span<double> ds) {
  f(t, s, ds);
};

/// Classical fixed-step RK4 from t0 to t1. The final step is shortened to land on t1.
/// Throws ParameterError for dt <= 0 or t1 < t0.
template <DerivativeMap F>
std::vector<double> rk4_integrate(F&& f, std::vector<double> s, double t0, double t1, double dt) {
  if (!(dt > 0.0)) throw ParameterError("rk4_integrate: dt must be > 0");
  if (!(t1 >= t0)) throw ParameterError("rk4_integrate: t1 must be >= t0");

  const std::size_t n = s.size();
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
  double t = t0;
  const double span_len = t1 - t0;
  const auto full_steps = static_cast<std::size_t>(span_len / dt);
  for (std::size_t step = 0; step <= full_steps; ++step) {
    const double t_next = step < full_steps ? t0 + static_cast<double>(step + 1) * dt : t1;
    const double h = t_next - t;
    if (h <= 0.0) break;

    f(t, std::span<const double>(s), std::span<double>(k1));
    for (std::size_t i = 0; i < n; ++i) tmp[i] = s[i] + 0.5 * h * k1[i];
    f(t + 0.5 * h, std::span<const double>(tmp), std::span<double>(k2));
    for (std::size_t i = 0; i < n; ++i) tmp[i] = s[i] + 0.5 * h * k2[i];
    f(t + 0.5 * h, std::span<const double>(tmp), std::span<double>(k3));
    for (std::size_t i = 0; i < n; ++i) tmp[i] = s[i] + h * k3[i];
    f(t + h, std::span<const double>(tmp), std::span<double>(k4));
    for (std::size_t i = 0; i < n; ++i) {
      s[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    t = t_next;
  }
  return s;
}

/// Bisection on [a, b] until the bracket is no wider than tol; returns the bracket midpoint.
/// Throws BracketError if g(a) and g(b) have the same strict sign, ParameterError for tol <= 0.
double bisect_root(const std::function<double(double)>& g, double a, double b, double tol);

}  // namespace qesd
