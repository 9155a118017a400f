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

#include <cstddef>
#include <string_view>
#include <vector>

#include "qesd/esd.hpp"

namespace qesd {

enum class SweepAxis { n_bath, alpha, r };

std::string_view to_string(SweepAxis a);
/// Accepts "n-bath", "alpha", "r".
SweepAxis parse_sweep_axis(std::string_view s);

/// One varied parameter against gamma0 t; the varied field of `werner`/`bath` is ignored.
struct SweepSpec {
  SweepAxis vary = SweepAxis::n_bath;
  double lo = 0.0;
  double hi = 1.0;
  std::size_t points = 101;
  WernerParams werner;
  BathParams bath;
  Family family = Family::phi;
  double t_max = 5.0;  ///< in units of 1/gamma0
  std::size_t steps = 101;
};

/// Throws ParameterError naming the first violated bound.
void validate(const SweepSpec& spec);

struct SurfaceRow {
  double vary_value = 0.0;
  double gamma0_t = 0.0;
  double concurrence = 0.0;
};

/// Rows ordered vary-outer, time-inner.
struct SurfaceTable {
  std::vector<SurfaceRow> rows;
};

/// Inclusive grid; the first and last entries are exactly lo and hi.
std::vector<double> linspace(double lo, double hi, std::size_t points);

/// Concurrence surface. Rows for different vary values are computed with OpenMP.
SurfaceTable sweep_surface(const SweepSpec& spec);
/// Single-threaded reference of sweep_surface; results are bitwise identical.
SurfaceTable sweep_surface_serial(const SweepSpec& spec);

/// First gamma0 t on each vary slice where the concurrence is exactly zero
/// (nullopt when the slice never reaches zero), in grid order.
std::vector<std::optional<double>> detected_esd_times(const SurfaceTable& table, std::size_t steps);

}  // namespace qesd
