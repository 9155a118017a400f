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
#include <span>
#include <vector>

#include "qesd/states.hpp"

namespace qesd {

/// Dissipator of two qubits coupled to a common thermal bath:
///   gamma0 (N+1)/2 sum_j (2 s_j^- rho s_j^+ - {s_j^+ s_j^-, rho})
/// + gamma0 N/2     sum_j (2 s_j^+ rho s_j^- - {s_j^- s_j^+, rho})
/// Accepts any matrix (RK4 stages are not density matrices).
ComplexMatrix4 lindblad_rhs(const ComplexMatrix4& rho, const BathParams& b);
ComplexMatrix4 lindblad_rhs(const DensityMatrix& rho, const BathParams& b);

/// Rate matrix acting on the population vector (x, y, z, w).
struct PopulationMatrix {
  std::array<std::array<double, 4>, 4> rates{};

  std::array<double, 4> apply(const std::array<double, 4>& p) const;
  std::array<double, 4> column_sums() const;
};

PopulationMatrix population_matrix(const BathParams& b);

/// Amplitudes of the N > 0 solution
///   x = c1 N/(N+1) - c2 G^2 - c4 g0 N G        u = c5 G
///   y = c1 + c2 G^2 + c3 G                     v = c6 G
///   z = c1 + c2 G^2 - c3 G - c4 g0 G
///   w = c1 (N+1)/N - c2 G^2 + c4 g0 (N+1) G
/// with G(t) = exp(-(1+2N) g0 t).
struct ThermalCoefficients {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
  Complex c5{};
  Complex c6{};
};

/// Amplitudes of the N = 0 solution, Y(t) = exp(-g0 t):
///   x = d4 Y^2                 u = d5 Y
///   y = (d2 + d3) Y - d4 Y^2   v = d6 Y
///   z = -d3 Y - d4 Y^2
///   w = d1 - d2 Y + d4 Y^2
struct VacuumCoefficients {
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  double d4 = 0.0;
  Complex d5{};
  Complex d6{};
};

/// Closed-form coefficients for the Phi-family Werner state. Requires N > 0.
ThermalCoefficients coefficients_phi_thermal(const WernerParams& p, const BathParams& b);
VacuumCoefficients coefficients_phi_vacuum(const WernerParams& p);

/// Coefficients matching an arbitrary initial X state (the general solution has one
/// free amplitude per mode, so the initial populations fix them uniquely).
ThermalCoefficients fit_thermal_coefficients(const XState& s0, const BathParams& b);
VacuumCoefficients fit_vacuum_coefficients(const XState& s0);

XState evaluate(const ThermalCoefficients& c, const BathParams& b, double t);
XState evaluate(const VacuumCoefficients& d, const BathParams& b, double t);

/// Analytic state at time t >= 0. N = 0 uses the vacuum solution, N > 0 the thermal one.
XState propagate_analytic(const WernerParams& p, const BathParams& b, double t, Family f = Family::phi);
XState propagate_x_state(const XState& s0, const BathParams& b, double t);

/// Flat layout used by the RK4 path: 4 diagonal reals, then (re, im) of the upper
/// triangle in order (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
inline constexpr std::size_t kFlatStateSize = 16;
std::vector<double> flatten(const ComplexMatrix4& m);
ComplexMatrix4 unflatten(std::span<const double> s);

/// Integrates the master equation with RK4 from 0 to t.
/// Throws ParameterError for t < 0, dt <= 0, or dt > t/10 when t > 0.
DensityMatrix propagate_rk4(const DensityMatrix& rho0, const BathParams& b, double t, double dt);

}  // namespace qesd
