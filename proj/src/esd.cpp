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

#include "qesd/esd.hpp"

#include <cmath>
#include <string>

namespace qesd {

std::string_view to_string(EsdClass c) {
  switch (c) {
    case EsdClass::separable_initial:
      return "separable-initial";
    case EsdClass::esd:
      return "esd";
    case EsdClass::asymptotic_no_esd:
      return "asymptotic-no-esd";
  }
  return "unknown";
}

std::string_view to_string(EsdMethod m) { return m == EsdMethod::closed_form ? "closed-form" : "bisection"; }

double esd_witness(const XState& s, Family f) {
  if (f == Family::phi) return std::norm(s.u) - s.x * s.w;
  return std::norm(s.v) - s.y * s.z;
}

double vacuum_esd_ceiling(double alpha) {
  const double s = std::sin(2.0 * alpha);
  return 2.0 / (1.0 + std::sqrt(1.0 + 4.0 * s * s));
}

std::optional<EsdRegion> esd_region_vacuum(double alpha) {
  if (std::abs(std::sin(2.0 * alpha)) < kDegenerateSin2Alpha) return std::nullopt;
  return EsdRegion{phi_entanglement_threshold(alpha), vacuum_esd_ceiling(alpha)};
}

EsdReport esd_time_vacuum(const WernerParams& p) {
  validate(p);
  EsdReport report;
  report.method = EsdMethod::closed_form;
  const auto region = esd_region_vacuum(p.alpha);
  if (!region || p.r <= region->r_lo) {
    report.classification = EsdClass::separable_initial;
    return report;
  }
  if (p.r >= region->r_hi) {
    report.classification = EsdClass::asymptotic_no_esd;
    return report;
  }
  const double s = std::sin(2.0 * p.alpha);
  report.classification = EsdClass::esd;
  report.gamma0_t_star = std::log(1.0 - p.r) - std::log(2.0 * (1.0 - std::sqrt(p.r + p.r * p.r * s * s)));
  return report;
}

EsdReport esd_time_numeric(const WernerParams& p, const BathParams& b, Family f) {
  validate(p);
  validate(b);
  EsdReport report;
  report.method = EsdMethod::bisection;

  const XState s0 = werner(p, f);
  if (!is_entangled_ppt(to_density_matrix(s0)) || !(esd_witness(s0, f) > 0.0)) {
    report.classification = EsdClass::separable_initial;
    return report;
  }
  // C(t) = |sin 2a| exp(-gamma0 t) never vanishes.
  if (f == Family::phi && b.n_bath == 0.0 && p.r == 1.0) {
    report.classification = EsdClass::asymptotic_no_esd;
    return report;
  }

  const auto witness = [&](double tau) { return esd_witness(propagate_analytic(p, b, tau / b.gamma0, f), f); };
  const auto steps = static_cast<long>(std::llround(kEsdScanHorizon / kEsdScanStep));
  for (long k = 1; k <= steps; ++k) {
    const double tau = static_cast<double>(k) * kEsdScanStep;
    if (witness(tau) <= 0.0) {
      report.classification = EsdClass::esd;
      report.gamma0_t_star = bisect_root(witness, tau - kEsdScanStep, tau, kEsdBisectionTol);
      return report;
    }
  }
  report.classification = EsdClass::asymptotic_no_esd;
  return report;
}

EsdReport esd_time(const WernerParams& p, const BathParams& b, Family f) {
  validate(b);
  if (f == Family::phi && b.n_bath == 0.0) return esd_time_vacuum(p);
  return esd_time_numeric(p, b, f);
}

namespace {

EsdClass classify_cell(double alpha, double r, const BathParams& b) {
  return esd_time(WernerParams{r, alpha}, b, Family::phi).classification;
}

void check_grid(std::span<const double> grid, double lo, double hi, const char* name) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= lo && grid[i] <= hi)) {
      throw ParameterError(std::string("region_map: ") + name + " grid value outside its range");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) throw ParameterError(std::string("region_map: ") + name + " grid must ascend");
  }
}

RegionTable allocate(std::span<const double> alpha_grid, std::span<const double> r_grid, const BathParams& b) {
  validate(b);
  check_grid(alpha_grid, 0.0, 2.0 * M_PI, "alpha");
  check_grid(r_grid, 0.0, 1.0, "r");
  RegionTable table;
  table.cells.resize(alpha_grid.size() * r_grid.size());
  return table;
}

}  // namespace

RegionTable region_map_serial(std::span<const double> alpha_grid, std::span<const double> r_grid,
                              const BathParams& b) {
  RegionTable table = allocate(alpha_grid, r_grid, b);
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
    for (std::size_t j = 0; j < r_grid.size(); ++j) {
      table.cells[i * r_grid.size() + j] = {alpha_grid[i], r_grid[j], classify_cell(alpha_grid[i], r_grid[j], b)};
    }
  }
  return table;
}

RegionTable region_map(std::span<const double> alpha_grid, std::span<const double> r_grid, const BathParams& b) {
  RegionTable table = allocate(alpha_grid, r_grid, b);
  const auto n_r = static_cast<long>(r_grid.size());
  const auto total = static_cast<long>(table.cells.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long cell = 0; cell < total; ++cell) {
    const auto i = static_cast<std::size_t>(cell / n_r);
    const auto j = static_cast<std::size_t>(cell % n_r);
    table.cells[static_cast<std::size_t>(cell)] = {alpha_grid[i], r_grid[j],
                                                   classify_cell(alpha_grid[i], r_grid[j], b)};
  }
  return table;
}

}  // namespace qesd
