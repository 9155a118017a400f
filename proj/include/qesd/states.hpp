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

#include <string_view>

#include "qesd/numeric.hpp"

namespace qesd {

// Basis order is |00>, |01>, |10>, |11> throughout, first label = qubit A.
// |0> is the excited level: sigma^- = |1><0|, so x = rho_{00,00} is the doubly excited population.

/// Two-qubit "X" state: populations on the diagonal, coherences on the anti-diagonal.
///   [ x  0  0  v ]
///   [ 0  y  u  0 ]
///   [ 0  u* z  0 ]
///   [ v* 0  0  w ]
struct XState {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double w = 0.0;
  Complex u{};
  Complex v{};

  double trace() const { return x + y + z + w; }
  friend bool operator==(const XState&, const XState&) = default;
};

inline constexpr double kPopulationTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kCoherenceTolerance = 1e-8;

/// Throws PreconditionError if populations are negative, the trace is off, or the
/// coherences violate positivity of the X matrix.
void validate(const XState& s);

/// Hermitian, unit-trace, positive semidefinite 4x4 matrix. Validated on construction.
class DensityMatrix {
 public:
  static constexpr double kHermitianTolerance = 1e-10;
  static constexpr double kTraceTolerance = 1e-10;
  static constexpr double kMinEigenvalue = -1e-8;

  explicit DensityMatrix(const ComplexMatrix4& m);

  const ComplexMatrix4& matrix() const { return m_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  ComplexMatrix4 m_;
};

struct WernerParams {
  double r = 1.0;      ///< purity in [0, 1]
  double alpha = 0.0;  ///< initial-entanglement angle, radians
};

struct BathParams {
  double n_bath = 0.0;  ///< mean bath occupation N >= 0
  double gamma0 = 1.0;  ///< spontaneous emission rate > 0
};

void validate(const WernerParams& p);
void validate(const BathParams& b);

enum class Family { phi, psi };

std::string_view to_string(Family f);
/// Parses "phi" / "psi"; throws ParameterError otherwise.
Family parse_family(std::string_view s);

/// r |Phi><Phi| + (1-r)/4 I with the r cos^2(a) weight on the |01> population:
/// Phi = cos(a)|01> + sin(a)|10> in (A, B) labels.
XState werner_phi(const WernerParams& p);
/// r |Psi><Psi| + (1-r)/4 I with Psi = cos(a)|00> + sin(a)|11>; equals werner_phi
/// conjugated by sigma_x on qubit B.
XState werner_psi(const WernerParams& p);
XState werner(const WernerParams& p, Family f);

DensityMatrix to_density_matrix(const XState& s);
ComplexMatrix4 to_matrix(const XState& s);
/// Reads the X entries of `m`; entries outside the X pattern are ignored.
XState from_matrix(const ComplexMatrix4& m);
XState from_density_matrix(const DensityMatrix& rho);
/// Largest magnitude among the eight entries outside the X pattern.
double x_structure_defect(const ComplexMatrix4& m);

ComplexMatrix4 partial_transpose_b(const ComplexMatrix4& m);

/// Peres-Horodecki test: true iff the partial transpose has an eigenvalue below -1e-10.
bool is_entangled_ppt(const DensityMatrix& rho);

/// 1 / (1 + 2|sin 2a|): the Phi-family Werner state is entangled for r strictly above this.
double phi_entanglement_threshold(double alpha);

/// Bose-Einstein occupation 1/(e^theta - 1) for theta = hbar*omega0/(kB*T) > 0.
double thermal_occupation(double theta);

}  // namespace qesd
