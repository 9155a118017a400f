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

#include "qesd/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace qesd {

ComplexMatrix4 spin_flip_operator() {
  const std::array<Complex, 4> sigma_y{0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0};
  return kron(sigma_y, sigma_y);
}

double wootters_margin(const DensityMatrix& rho) {
  static const ComplexMatrix4 flip = spin_flip_operator();
  const ComplexMatrix4 root = psd_sqrt(rho.matrix());
  const ComplexMatrix4 flipped_root = flip * root.conjugate() * flip;
  const auto sigma = singular_values(root * flipped_root);
  return sigma[0] - sigma[1] - sigma[2] - sigma[3];
}

double concurrence_general(const DensityMatrix& rho) {
  const double margin = wootters_margin(rho);
  return margin > 0.0 ? margin : 0.0;
}

double concurrence_x(const XState& s) {
  const double xw = std::sqrt(std::max(0.0, s.x) * std::max(0.0, s.w));
  const double yz = std::sqrt(std::max(0.0, s.y) * std::max(0.0, s.z));
  return 2.0 * std::max({0.0, std::abs(s.u) - xw, std::abs(s.v) - yz});
}

std::vector<ConcurrenceSample> concurrence_trajectory(const WernerParams& p, const BathParams& b,
                                                      std::span<const double> times, Family f) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0)) throw ParameterError("concurrence_trajectory: times must be >= 0");
    if (i > 0 && !(times[i] >= times[i - 1])) throw ParameterError("concurrence_trajectory: times must ascend");
  }
  std::vector<ConcurrenceSample> out(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    out[i] = {times[i], concurrence_x(propagate_analytic(p, b, times[i], f))};
  }
  return out;
}

}  // namespace qesd
