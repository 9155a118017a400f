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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qesd/entanglement.hpp"

namespace qesd {

enum class EsdClass { separable_initial, esd, asymptotic_no_esd };
enum class EsdMethod { closed_form, bisection };

std::string_view to_string(EsdClass c);
std::string_view to_string(EsdMethod m);

/// Outcome for one parameter point. Times are dimensionless (gamma0 t).
struct EsdReport {
  EsdClass classification = EsdClass::separable_initial;
  std::optional<double> gamma0_t_star;  ///< present iff classification == esd
  EsdMethod method = EsdMethod::closed_form;
};

/// u^2 - x w (|u|^2 for complex u) for Phi, |v|^2 - y z for Psi. Positive iff the
/// family's concurrence branch is nonzero.
double esd_witness(const XState& s, Family f = Family::phi);

/// Open purity interval (r_lo, r_hi) in which the vacuum-bath Phi state dies in finite time.
struct EsdRegion {
  double r_lo = 0.0;
  double r_hi = 0.0;
  bool contains(double r) const { return r > r_lo && r < r_hi; }
};

/// |sin 2a| below this is treated as zero (no entangled Phi states).
inline constexpr double kDegenerateSin2Alpha = 1e-12;

/// Largest purity that still shows ESD at N = 0: the positive root of
/// sin^2(2a) r^2 + r - 1 = 0, evaluated as 2 / (1 + sqrt(1 + 4 sin^2 2a)).
double vacuum_esd_ceiling(double alpha);

/// nullopt when sin 2a = 0.
std::optional<EsdRegion> esd_region_vacuum(double alpha);

/// Closed-form classification and gamma0 t* for the Phi family at N = 0.
EsdReport esd_time_vacuum(const WernerParams& p);

inline constexpr double kEsdScanStep = 0.01;      // in gamma0 t
inline constexpr double kEsdScanHorizon = 200.0;  // in gamma0 t
inline constexpr double kEsdBisectionTol = 1e-8;

/// First zero of the witness along the analytic trajectory: scan in gamma0 t, then bisect.
EsdReport esd_time_numeric(const WernerParams& p, const BathParams& b, Family f = Family::phi);

/// Closed form for (Phi, N = 0), bisection otherwise.
EsdReport esd_time(const WernerParams& p, const BathParams& b, Family f = Family::phi);

struct RegionCell {
  double alpha = 0.0;
  double r = 0.0;
  EsdClass classification = EsdClass::separable_initial;
};

/// Cells in alpha-major order (alpha outer, r inner).
struct RegionTable {
  std::vector<RegionCell> cells;
};

/// Classifies every (alpha, r) for the Phi family; grid cells are evaluated with OpenMP.
RegionTable region_map(std::span<const double> alpha_grid, std::span<const double> r_grid, const BathParams& b);
/// Single-threaded reference of region_map.
RegionTable region_map_serial(std::span<const double> alpha_grid, std::span<const double> r_grid,
                              const BathParams& b);

}  // namespace qesd
