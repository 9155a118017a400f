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

#include "qesd/sweep.hpp"

#include <cmath>
#include <string>

namespace qesd {

std::string_view to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::n_bath:
      return "n-bath";
    case SweepAxis::alpha:
      return "alpha";
    case SweepAxis::r:
      return "r";
  }
  return "unknown";
}

SweepAxis parse_sweep_axis(std::string_view s) {
  if (s == "n-bath") return SweepAxis::n_bath;
  if (s == "alpha") return SweepAxis::alpha;
  if (s == "r") return SweepAxis::r;
  throw ParameterError("vary must be one of n-bath, alpha, r; got " + std::string(s));
}

void validate(const SweepSpec& spec) {
  if (spec.points < 2) throw ParameterError("points must be >= 2");
  if (spec.steps < 2) throw ParameterError("steps must be >= 2");
  if (!(spec.t_max > 0.0) || !std::isfinite(spec.t_max)) throw ParameterError("t_max must be > 0");
  if (!(spec.lo < spec.hi) || !std::isfinite(spec.lo) || !std::isfinite(spec.hi)) {
    throw ParameterError("from must be < to");
  }
  switch (spec.vary) {
    case SweepAxis::n_bath:
      if (spec.lo < 0.0) throw ParameterError("n_bath range must be >= 0");
      validate(spec.werner);
      validate(BathParams{0.0, spec.bath.gamma0});
      break;
    case SweepAxis::alpha:
      validate(WernerParams{spec.werner.r, 0.0});
      validate(spec.bath);
      break;
    case SweepAxis::r:
      if (spec.lo < 0.0 || spec.hi > 1.0) throw ParameterError("r range must lie in [0, 1]");
      validate(WernerParams{0.0, spec.werner.alpha});
      validate(spec.bath);
      break;
  }
}

std::vector<double> linspace(double lo, double hi, std::size_t points) {
  if (points < 2) throw ParameterError("linspace: points must be >= 2");
  std::vector<double> out(points);
  const double span_len = hi - lo;
  const double last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) out[i] = lo + span_len * (static_cast<double>(i) / last);
  out.front() = lo;
  out.back() = hi;
  return out;
}

namespace {

void fill_slice(const SweepSpec& spec, double value, const std::vector<double>& taus, SurfaceRow* out) {
  WernerParams p = spec.werner;
  BathParams b = spec.bath;
  switch (spec.vary) {
    case SweepAxis::n_bath:
      b.n_bath = value;
      break;
    case SweepAxis::alpha:
      p.alpha = value;
      break;
    case SweepAxis::r:
      p.r = value;
      break;
  }
  for (std::size_t k = 0; k < taus.size(); ++k) {
    const double c = concurrence_x(propagate_analytic(p, b, taus[k] / b.gamma0, spec.family));
    out[k] = {value, taus[k], c};
  }
}

}  // namespace

SurfaceTable sweep_surface_serial(const SweepSpec& spec) {
  validate(spec);
  const auto values = linspace(spec.lo, spec.hi, spec.points);
  const auto taus = linspace(0.0, spec.t_max, spec.steps);
  SurfaceTable table;
  table.rows.resize(values.size() * taus.size());
  for (std::size_t i = 0; i < values.size(); ++i) fill_slice(spec, values[i], taus, &table.rows[i * taus.size()]);
  return table;
}

SurfaceTable sweep_surface(const SweepSpec& spec) {
  validate(spec);
  const auto values = linspace(spec.lo, spec.hi, spec.points);
  const auto taus = linspace(0.0, spec.t_max, spec.steps);
  SurfaceTable table;
  table.rows.resize(values.size() * taus.size());
  const auto n = static_cast<long>(values.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    const auto slice = static_cast<std::size_t>(i);
    fill_slice(spec, values[slice], taus, &table.rows[slice * taus.size()]);
  }
  return table;
}

std::vector<std::optional<double>> detected_esd_times(const SurfaceTable& table, std::size_t steps) {
  if (steps == 0 || table.rows.size() % steps != 0) throw ParameterError("detected_esd_times: bad step count");
  std::vector<std::optional<double>> out(table.rows.size() / steps);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t k = 0; k < steps; ++k) {
      const auto& row = table.rows[i * steps + k];
      if (row.concurrence == 0.0) {
        out[i] = row.gamma0_t;
        break;
      }
    }
  }
  return out;
}

}  // namespace qesd
