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

#include "qesd/states.hpp"

#include <cmath>
#include <string>

namespace qesd {

void validate(const XState& s) {
  for (double p : {s.x, s.y, s.z, s.w}) {
    if (!std::isfinite(p) || p < -kPopulationTolerance) {
      throw PreconditionError("XState: negative or non-finite population " + std::to_string(p));
    }
  }
  if (!(std::abs(s.trace() - 1.0) <= kTraceTolerance)) {
    throw PreconditionError("XState: trace " + std::to_string(s.trace()) + " != 1");
  }
  const auto root = [](double a, double b) { return std::sqrt(std::max(0.0, a) * std::max(0.0, b)); };
  if (!(std::abs(s.u) <= root(s.y, s.z) + kCoherenceTolerance)) {
    throw PreconditionError("XState: |u| exceeds sqrt(y z)");
  }
  if (!(std::abs(s.v) <= root(s.x, s.w) + kCoherenceTolerance)) {
    throw PreconditionError("XState: |v| exceeds sqrt(x w)");
  }
}

DensityMatrix::DensityMatrix(const ComplexMatrix4& m) : m_(m) {
  const double defect = m.hermiticity_defect();
  if (!(defect <= kHermitianTolerance)) {
    throw PreconditionError("DensityMatrix: not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const Complex tr = m.trace();
  if (!(std::abs(tr - 1.0) <= kTraceTolerance)) {
    throw PreconditionError("DensityMatrix: trace " + std::to_string(tr.real()) + " != 1");
  }
  const double lambda_min = hermitian_eigenvalues(m)[3];
  if (lambda_min < kMinEigenvalue) {
    throw PreconditionError("DensityMatrix: eigenvalue " + std::to_string(lambda_min) + " < 0");
  }
}

void validate(const WernerParams& p) {
  if (!(p.r >= 0.0 && p.r <= 1.0)) throw ParameterError("r must lie in [0, 1], got " + std::to_string(p.r));
  if (!std::isfinite(p.alpha)) throw ParameterError("alpha must be finite");
}

void validate(const BathParams& b) {
  if (!(b.n_bath >= 0.0) || !std::isfinite(b.n_bath)) {
    throw ParameterError("n_bath must be >= 0, got " + std::to_string(b.n_bath));
  }
  if (!(b.gamma0 > 0.0) || !std::isfinite(b.gamma0)) {
    throw ParameterError("gamma0 must be > 0, got " + std::to_string(b.gamma0));
  }
}

std::string_view to_string(Family f) { return f == Family::phi ? "phi" : "psi"; }

Family parse_family(std::string_view s) {
  if (s == "phi") return Family::phi;
  if (s == "psi") return Family::psi;
  throw ParameterError("family must be phi or psi, got " + std::string(s));
}

XState werner_phi(const WernerParams& p) {
  validate(p);
  const double c = std::cos(p.alpha);
  const double s = std::sin(p.alpha);
  const double mixed = (1.0 - p.r) / 4.0;
  XState out;
  out.x = mixed;
  out.y = p.r * c * c + mixed;
  out.z = p.r * s * s + mixed;
  out.w = mixed;
  out.u = p.r * s * c;
  return out;
}

XState werner_psi(const WernerParams& p) {
  validate(p);
  const double c = std::cos(p.alpha);
  const double s = std::sin(p.alpha);
  const double mixed = (1.0 - p.r) / 4.0;
  XState out;
  out.x = p.r * c * c + mixed;
  out.y = mixed;
  out.z = mixed;
  out.w = p.r * s * s + mixed;
  out.v = p.r * s * c;
  return out;
}

XState werner(const WernerParams& p, Family f) { return f == Family::phi ? werner_phi(p) : werner_psi(p); }

ComplexMatrix4 to_matrix(const XState& s) {
  ComplexMatrix4 m;
  m(0, 0) = s.x;
  m(1, 1) = s.y;
  m(2, 2) = s.z;
  m(3, 3) = s.w;
  m(0, 3) = s.v;
  m(3, 0) = std::conj(s.v);
  m(1, 2) = s.u;
  m(2, 1) = std::conj(s.u);
  return m;
}

DensityMatrix to_density_matrix(const XState& s) {
  validate(s);
  return DensityMatrix(to_matrix(s));
}

XState from_matrix(const ComplexMatrix4& m) {
  XState s;
  s.x = m(0, 0).real();
  s.y = m(1, 1).real();
  s.z = m(2, 2).real();
  s.w = m(3, 3).real();
  s.u = m(1, 2);
  s.v = m(0, 3);
  return s;
}

XState from_density_matrix(const DensityMatrix& rho) { return from_matrix(rho.matrix()); }

double x_structure_defect(const ComplexMatrix4& m) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      d = std::max(d, std::abs(m(i, j)));
    }
  }
  return d;
}

ComplexMatrix4 partial_transpose_b(const ComplexMatrix4& m) {
  ComplexMatrix4 r;
  for (std::size_t ia = 0; ia < 2; ++ia)
    for (std::size_t ja = 0; ja < 2; ++ja)
      for (std::size_t ib = 0; ib < 2; ++ib)
        for (std::size_t jb = 0; jb < 2; ++jb) r(2 * ia + ib, 2 * ja + jb) = m(2 * ia + jb, 2 * ja + ib);
  return r;
}

bool is_entangled_ppt(const DensityMatrix& rho) {
  constexpr double kNegativeTolerance = 1e-10;
  return hermitian_eigenvalues(partial_transpose_b(rho.matrix()))[3] < -kNegativeTolerance;
}

double phi_entanglement_threshold(double alpha) { return 1.0 / (1.0 + 2.0 * std::abs(std::sin(2.0 * alpha))); }

double thermal_occupation(double theta) {
  if (!(theta > 0.0)) throw ParameterError("thermal_occupation: theta must be > 0");
  return 1.0 / std::expm1(theta);
}

}  // namespace qesd
