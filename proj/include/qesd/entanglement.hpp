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

#include <span>
#include <vector>

#include "qesd/dynamics.hpp"

namespace qesd {

struct ConcurrenceSample {
  double t = 0.0;
  double concurrence = 0.0;
};

/// sigma_y (x) sigma_y in the computational basis.
ComplexMatrix4 spin_flip_operator();

/// sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4) for the eigenvalues (descending) of
/// sqrt(rho) rho~ sqrt(rho), rho~ = (sy x sy) rho* (sy x sy). The square roots are taken
/// as the singular values of sqrt(rho) sqrt(rho~). Not clamped at zero.
double wootters_margin(const DensityMatrix& rho);

/// Wootters concurrence max(0, wootters_margin). Values within 1e-10 below zero report 0.
double concurrence_general(const DensityMatrix& rho);

/// 2 max(0, |u| - sqrt(x w), |v| - sqrt(y z)).
double concurrence_x(const XState& s);

/// Concurrence of the analytically propagated Werner state on an ascending grid.
/// Throws ParameterError for negative or non-ascending times.
std::vector<ConcurrenceSample> concurrence_trajectory(const WernerParams& p, const BathParams& b,
                                                      std::span<const double> times, Family f = Family::phi);

}  // namespace qesd
