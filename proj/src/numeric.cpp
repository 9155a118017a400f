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

#include "qesd/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace qesd {

ComplexMatrix4 ComplexMatrix4::identity() { return diagonal({1.0, 1.0, 1.0, 1.0}); }

ComplexMatrix4 ComplexMatrix4::diagonal(const std::array<double, 4>& d) {
  ComplexMatrix4 m;
  for (std::size_t i = 0; i < kDim; ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix4 ComplexMatrix4::adjoint() const {
  ComplexMatrix4 r;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

ComplexMatrix4 ComplexMatrix4::conjugate() const {
  ComplexMatrix4 r;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = std::conj(a_[k]);
  return r;
}

ComplexMatrix4 ComplexMatrix4::transpose() const {
  ComplexMatrix4 r;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) r(i, j) = (*this)(j, i);
  return r;
}

Complex ComplexMatrix4::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < kDim; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix4::max_abs() const {
  double m = 0.0;
  for (const auto& z : a_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix4::hermiticity_defect() const { return max_abs_diff(*this, adjoint()); }

ComplexMatrix4& ComplexMatrix4::operator+=(const ComplexMatrix4& o) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

ComplexMatrix4& ComplexMatrix4::operator-=(const ComplexMatrix4& o) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

ComplexMatrix4& ComplexMatrix4::operator*=(Complex s) {
  for (auto& z : a_) z *= s;
  return *this;
}

ComplexMatrix4 operator*(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  ComplexMatrix4 r;
  for (std::size_t i = 0; i < ComplexMatrix4::kDim; ++i) {
    for (std::size_t k = 0; k < ComplexMatrix4::kDim; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < ComplexMatrix4::kDim; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

double max_abs_diff(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < ComplexMatrix4::kDim; ++i)
    for (std::size_t j = 0; j < ComplexMatrix4::kDim; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

ComplexMatrix4 kron(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b) {
  ComplexMatrix4 r;
  for (std::size_t ia = 0; ia < 2; ++ia)
    for (std::size_t ja = 0; ja < 2; ++ja)
      for (std::size_t ib = 0; ib < 2; ++ib)
        for (std::size_t jb = 0; jb < 2; ++jb) r(2 * ia + ib, 2 * ja + jb) = a[2 * ia + ja] * b[2 * ib + jb];
  return r;
}

namespace {

constexpr double kOffDiagonalTolerance = 1e-14;
constexpr int kMaxSweeps = 64;

double off_diagonal_norm(const ComplexMatrix4& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

double frobenius_norm(const ComplexMatrix4& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix4& m) {
  const double scale = std::max(1.0, m.max_abs());
  const double defect = m.hermiticity_defect();
  if (!(defect <= kHermitianTolerance * scale)) {
    throw PreconditionError("hermitian_eigensystem: input is not Hermitian (defect " + std::to_string(defect) + ")");
  }

  // Work on the exactly Hermitian part.
  ComplexMatrix4 a = (m + m.adjoint()) * 0.5;
  for (std::size_t i = 0; i < 4; ++i) a(i, i) = a(i, i).real();
  ComplexMatrix4 v = ComplexMatrix4::identity();

  const double threshold = kOffDiagonalTolerance * std::max(1.0, frobenius_norm(a));
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > threshold; ++sweep) {
    for (std::size_t p = 0; p < 3; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        const Complex phase = apq / g;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        // Rotation J = [[c, s*phase], [-s*conj(phase), c]] zeroes a(p,q) in J^dagger A J.
        const double tau = (aqq - app) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex jpq = s * phase;
        const Complex jqp = -s * std::conj(phase);

        // A <- A J (columns p, q)
        for (std::size_t k = 0; k < 4; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * c + akq * jqp;
          a(k, q) = akp * jpq + akq * c;
        }
        // A <- J^dagger A (rows p, q)
        for (std::size_t k = 0; k < 4; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < 4; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * c + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * c;
        }
      }
    }
  }

  std::array<std::size_t, 4> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  HermitianEigensystem out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t row = 0; row < 4; ++row) out.vectors(row, k) = v(row, order[k]);
  }
  return out;
}

RealVector4 hermitian_eigenvalues(const ComplexMatrix4& m) { return hermitian_eigensystem(m).values; }

RealVector4 singular_values(const ComplexMatrix4& m) {
  ComplexMatrix4 a = m;
  const auto column_dot = [&a](std::size_t p, std::size_t q) {
    Complex g{};
    for (std::size_t i = 0; i < 4; ++i) g += std::conj(a(i, p)) * a(i, q);
    return g;
  };
  constexpr double kOrthogonality = 1e-15;
  for (int sweep = 0; sweep < 64; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p < 3; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        const double alpha = column_dot(p, p).real();
        const double beta = column_dot(q, q).real();
        const Complex gamma = column_dot(p, q);
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= kOrthogonality * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Complex phase = gamma / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < 4; ++i) {
          const Complex ap = a(i, p);
          const Complex aq = a(i, q) * std::conj(phase);
          a(i, p) = c * ap - s * aq;
          a(i, q) = s * ap + c * aq;
        }
      }
    }
    if (!rotated) break;
  }
  RealVector4 sigma{};
  for (std::size_t j = 0; j < 4; ++j) sigma[j] = std::sqrt(column_dot(j, j).real());
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  return sigma;
}

ComplexMatrix4 psd_sqrt(const ComplexMatrix4& m) {
  const auto es = hermitian_eigensystem(m);
  if (es.values[3] < -kPsdClampTolerance) {
    throw NotPsdError("psd_sqrt: matrix has eigenvalue " + std::to_string(es.values[3]));
  }
  ComplexMatrix4 s;
  for (std::size_t k = 0; k < 4; ++k) {
    const double root = std::sqrt(std::max(0.0, es.values[k]));
    if (root == 0.0) continue;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) s(i, j) += root * es.vectors(i, k) * std::conj(es.vectors(j, k));
  }
  return s;
}

double bisect_root(const std::function<double(double)>& g, double a, double b, double tol) {
  if (!(tol > 0.0)) throw ParameterError("bisect_root: tol must be > 0");
  if (a > b) std::swap(a, b);
  double ga = g(a);
  const double gb = g(b);
  if (ga == 0.0) return a;
  if (gb == 0.0) return b;
  if ((ga > 0.0) == (gb > 0.0)) {
    throw BracketError("bisect_root: no sign change on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm > 0.0) == (ga > 0.0)) {
      a = mid;
      ga = gm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace qesd
