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

#include "qesd/dynamics.hpp"

#include <cmath>
#include <string>

namespace qesd {

namespace {

struct JumpOperator {
  ComplexMatrix4 op;
  ComplexMatrix4 op_dag;
  ComplexMatrix4 dag_op;  // op^dagger op
  double rate;            // gamma0 (N+1)/2 or gamma0 N/2
};

class LindbladGenerator {
 public:
  explicit LindbladGenerator(const BathParams& b) {
    // sigma^- = |1><0| in the (|0>, |1>) single-qubit basis.
    const std::array<Complex, 4> lower{0.0, 0.0, 1.0, 0.0};
    const std::array<Complex, 4> raise{0.0, 1.0, 0.0, 0.0};
    const std::array<Complex, 4> id{1.0, 0.0, 0.0, 1.0};
    const auto make = [](const ComplexMatrix4& l, double rate) {
      return JumpOperator{l, l.adjoint(), l.adjoint() * l, rate};
    };
    const double emission = b.gamma0 * (b.n_bath + 1.0) / 2.0;
    const double absorption = b.gamma0 * b.n_bath / 2.0;
    jumps_ = {make(kron(lower, id), emission), make(kron(id, lower), emission), make(kron(raise, id), absorption),
              make(kron(id, raise), absorption)};
  }

  ComplexMatrix4 operator()(const ComplexMatrix4& rho) const {
    ComplexMatrix4 out;
    for (const auto& j : jumps_) {
      if (j.rate == 0.0) continue;
      ComplexMatrix4 term = (j.op * rho * j.op_dag) * 2.0;
      term -= j.dag_op * rho;
      term -= rho * j.dag_op;
      out += term * j.rate;
    }
    return out;
  }

 private:
  std::array<JumpOperator, 4> jumps_;
};

}  // namespace

ComplexMatrix4 lindblad_rhs(const ComplexMatrix4& rho, const BathParams& b) { return LindbladGenerator(b)(rho); }

ComplexMatrix4 lindblad_rhs(const DensityMatrix& rho, const BathParams& b) { return lindblad_rhs(rho.matrix(), b); }

std::array<double, 4> PopulationMatrix::apply(const std::array<double, 4>& p) const {
  std::array<double, 4> out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i] += rates[i][j] * p[j];
  return out;
}

std::array<double, 4> PopulationMatrix::column_sums() const {
  std::array<double, 4> out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[j] += rates[i][j];
  return out;
}

PopulationMatrix population_matrix(const BathParams& b) {
  validate(b);
  const double g = b.gamma0;
  const double n = b.n_bath;
  PopulationMatrix m;
  m.rates = {{
      {-2.0 * g * (n + 1.0), g * n, g * n, 0.0},
      {g * (n + 1.0), -g * (2.0 * n + 1.0), 0.0, g * n},
      {g * (n + 1.0), 0.0, -g * (2.0 * n + 1.0), g * n},
      {0.0, g * (n + 1.0), g * (n + 1.0), -2.0 * g * n},
  }};
  return m;
}

ThermalCoefficients coefficients_phi_thermal(const WernerParams& p, const BathParams& b) {
  validate(p);
  validate(b);
  if (!(b.n_bath > 0.0)) throw ParameterError("coefficients_phi_thermal: requires N > 0, use the vacuum solution");
  const double n = b.n_bath;
  const double q = (2.0 * n + 1.0) * (2.0 * n + 1.0);
  const double c = std::cos(p.alpha);
  const double s = std::sin(p.alpha);
  ThermalCoefficients k;
  k.c1 = n * (n + 1.0) / q;
  k.c2 = n * (n + 1.0) / q - (1.0 - p.r) / 4.0;
  k.c3 = 1.0 / (2.0 * q) + p.r / 2.0 * (c * c - s * s);
  k.c4 = -1.0 / (b.gamma0 * q);
  k.c5 = p.r * s * c;
  k.c6 = 0.0;
  return k;
}

VacuumCoefficients coefficients_phi_vacuum(const WernerParams& p) {
  validate(p);
  const double s = std::sin(p.alpha);
  VacuumCoefficients d;
  d.d1 = 1.0;
  d.d2 = 1.0;
  d.d3 = -(1.0 - p.r) / 2.0 - p.r * s * s;
  d.d4 = (1.0 - p.r) / 4.0;
  d.d5 = p.r * s * std::cos(p.alpha);
  d.d6 = 0.0;
  return d;
}

ThermalCoefficients fit_thermal_coefficients(const XState& s0, const BathParams& b) {
  validate(b);
  if (!(b.n_bath > 0.0)) throw ParameterError("fit_thermal_coefficients: requires N > 0");
  const double n = b.n_bath;
  const double q = (2.0 * n + 1.0) * (2.0 * n + 1.0);
  ThermalCoefficients k;
  k.c1 = n * (n + 1.0) / q;
  // (N+1) x + N w isolates the G^2 mode; y + z and y - z give the G mode amplitudes.
  k.c2 = k.c1 - ((n + 1.0) * s0.x + n * s0.w) / (2.0 * n + 1.0);
  const double c4g = 2.0 * k.c1 + 2.0 * k.c2 - (s0.y + s0.z);
  k.c3 = (s0.y - s0.z - c4g) / 2.0;
  k.c4 = c4g / b.gamma0;
  k.c5 = s0.u;
  k.c6 = s0.v;
  return k;
}

VacuumCoefficients fit_vacuum_coefficients(const XState& s0) {
  VacuumCoefficients d;
  d.d4 = s0.x;
  d.d3 = -s0.z - s0.x;
  d.d2 = s0.y + s0.z + 2.0 * s0.x;
  d.d1 = s0.trace();
  d.d5 = s0.u;
  d.d6 = s0.v;
  return d;
}

XState evaluate(const ThermalCoefficients& k, const BathParams& b, double t) {
  const double n = b.n_bath;
  const double g = std::exp(-(1.0 + 2.0 * n) * b.gamma0 * t);
  const double g2 = g * g;
  const double c4g = k.c4 * b.gamma0;
  // c1 N/(N+1) and c1 (N+1)/N written without the N -> 0 cancellation.
  const double q = (2.0 * n + 1.0) * (2.0 * n + 1.0);
  const double x_inf = n * n / q;
  const double w_inf = (n + 1.0) * (n + 1.0) / q;
  XState s;
  s.x = x_inf - k.c2 * g2 - c4g * n * g;
  s.y = k.c1 + k.c2 * g2 + k.c3 * g;
  s.z = k.c1 + k.c2 * g2 - k.c3 * g - c4g * g;
  s.w = w_inf - k.c2 * g2 + c4g * (n + 1.0) * g;
  s.u = k.c5 * g;
  s.v = k.c6 * g;
  return s;
}

XState evaluate(const VacuumCoefficients& d, const BathParams& b, double t) {
  const double y = std::exp(-b.gamma0 * t);
  const double y2 = y * y;
  XState s;
  s.x = d.d4 * y2;
  s.y = d.d2 * y + d.d3 * y - d.d4 * y2;
  s.z = -d.d3 * y - d.d4 * y2;
  s.w = d.d1 - d.d2 * y + d.d4 * y2;
  s.u = d.d5 * y;
  s.v = d.d6 * y;
  return s;
}

namespace {

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw ParameterError("time must be >= 0, got " + std::to_string(t));
}

}  // namespace

XState propagate_analytic(const WernerParams& p, const BathParams& b, double t, Family f) {
  check_time(t);
  validate(b);
  if (t == 0.0) return werner(p, f);
  if (f == Family::psi) return propagate_x_state(werner_psi(p), b, t);
  if (b.n_bath == 0.0) return evaluate(coefficients_phi_vacuum(p), b, t);
  return evaluate(coefficients_phi_thermal(p, b), b, t);
}

XState propagate_x_state(const XState& s0, const BathParams& b, double t) {
  check_time(t);
  validate(b);
  validate(s0);
  if (t == 0.0) return s0;
  if (b.n_bath == 0.0) return evaluate(fit_vacuum_coefficients(s0), b, t);
  return evaluate(fit_thermal_coefficients(s0, b), b, t);
}

namespace {

void flatten_into(const ComplexMatrix4& m, std::span<double> s) {
  for (std::size_t i = 0; i < 4; ++i) s[i] = m(i, i).real();
  std::size_t k = 4;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      s[k++] = m(i, j).real();
      s[k++] = m(i, j).imag();
    }
  }
}

}  // namespace

std::vector<double> flatten(const ComplexMatrix4& m) {
  std::vector<double> s(kFlatStateSize);
  flatten_into(m, s);
  return s;
}

ComplexMatrix4 unflatten(std::span<const double> s) {
  ComplexMatrix4 m;
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = s[i];
  std::size_t k = 4;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      m(i, j) = Complex(s[k], s[k + 1]);
      m(j, i) = Complex(s[k], -s[k + 1]);
      k += 2;
    }
  }
  return m;
}

DensityMatrix propagate_rk4(const DensityMatrix& rho0, const BathParams& b, double t, double dt) {
  check_time(t);
  validate(b);
  if (!(dt > 0.0)) throw ParameterError("dt must be > 0");
  if (t > 0.0 && dt > t / 10.0) {
    throw ParameterError("dt " + std::to_string(dt) + " exceeds t/10 for t = " + std::to_string(t));
  }
  if (t == 0.0) return rho0;

  const LindbladGenerator generator(b);
  const auto rhs = [&generator](double, std::span<const double> s, std::span<double> ds) {
    flatten_into(generator(unflatten(s)), ds);
  };
  return DensityMatrix(unflatten(rk4_integrate(rhs, flatten(rho0.matrix()), 0.0, t, dt)));
}

}  // namespace qesd
