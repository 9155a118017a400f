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

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qesd/dynamics.hpp"

using namespace qesd;

namespace {

ComplexMatrix4 gibbs_state(double n) {
  const double q = (2 * n + 1) * (2 * n + 1);
  return ComplexMatrix4::diagonal({n * n / q, n * (n + 1) / q, n * (n + 1) / q, (n + 1) * (n + 1) / q});
}

double max_state_diff(const XState& a, const XState& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z), std::abs(a.w - b.w),
                   std::abs(a.u - b.u), std::abs(a.v - b.v)});
}

XState numeric_derivative(const WernerParams& p, const BathParams& b, double t, Family f) {
  constexpr double h = 1e-6;
  const XState hi = propagate_analytic(p, b, t + h, f);
  const XState lo = propagate_analytic(p, b, t - h, f);
  XState d;
  d.x = (hi.x - lo.x) / (2 * h);
  d.y = (hi.y - lo.y) / (2 * h);
  d.z = (hi.z - lo.z) / (2 * h);
  d.w = (hi.w - lo.w) / (2 * h);
  d.u = (hi.u - lo.u) / (2 * h);
  d.v = (hi.v - lo.v) / (2 * h);
  return d;
}

}  // namespace

TEST_CASE("lindblad_rhs") {
  SUBCASE("thermal product state is stationary") {
    for (double n : {0.0, 0.1, 1.0, 2.5}) {
      const auto d = lindblad_rhs(DensityMatrix(gibbs_state(n)), {n, 1.3});
      CHECK(d.max_abs() <= 1e-12);
    }
  }
  SUBCASE("doubly excited state decays at 2 gamma0 in the vacuum") {
    const auto d = lindblad_rhs(DensityMatrix(ComplexMatrix4::diagonal({1, 0, 0, 0})), {0.0, 0.7});
    CHECK(d(0, 0).real() == doctest::Approx(-2 * 0.7));
    CHECK(d(1, 1).real() == doctest::Approx(0.7));
    CHECK(d(2, 2).real() == doctest::Approx(0.7));
    CHECK(std::abs(d(3, 3)) == 0.0);
  }
  SUBCASE("output is traceless and Hermitian") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 100; ++i) {
      const auto d = lindblad_rhs(DensityMatrix(oracle::random_density_matrix(rng)), {0.37 * i / 10.0, 1.0});
      CHECK(std::abs(d.trace()) <= 1e-13);
      CHECK(d.hermiticity_defect() <= 1e-14);
    }
  }
  SUBCASE("on X states it reduces to the population equations and uniform coherence decay") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 50; ++i) {
      const XState s = oracle::random_xstate(rng);
      const double n = 0.05 * i;
      const double g0 = 0.5 + 0.01 * i;
      const auto d = lindblad_rhs(to_density_matrix(s), {n, g0});
      const auto ref = oracle::population_rates(s, n, g0);
      for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(d(k, k).real() - ref[k]) <= 1e-13);
      CHECK(std::abs(d(1, 2) + (1 + 2 * n) * g0 * s.u) <= 1e-13);
      CHECK(std::abs(d(0, 3) + (1 + 2 * n) * g0 * s.v) <= 1e-13);
      CHECK(x_structure_defect(d) <= 1e-15);
    }
  }
}

TEST_CASE("population_matrix") {
  const auto m0 = population_matrix({0.0, 1.0});
  const std::array<std::array<double, 4>, 4> expected{{{-2, 0, 0, 0}, {1, -1, 0, 0}, {1, 0, -1, 0}, {0, 1, 1, 0}}};
  CHECK(m0.rates == expected);

  for (double n : {0.0, 0.3, 1.0, 4.0}) {
    const auto m = population_matrix({n, 1.7});
    for (double c : m.column_sums()) CHECK(std::abs(c) <= 1e-12);

    // det(l - M) must be l (l + a)^2 (l + 2a), a = gamma0 (2N + 1).
    ComplexMatrix4 cm;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) cm(i, j) = m.rates[i][j];
    const auto c = oracle::characteristic_polynomial(cm);
    const double a = 1.7 * (2 * n + 1);
    CHECK(c[3] == doctest::Approx(4 * a));
    CHECK(c[2] == doctest::Approx(5 * a * a));
    CHECK(c[1] == doctest::Approx(2 * a * a * a));
    CHECK(std::abs(c[0]) <= 1e-10 * a * a * a * a);
  }

  SUBCASE("N = 1 spectrum {0, -3, -3, -6}") {
    ComplexMatrix4 cm;
    const auto m = population_matrix({1.0, 1.0});
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) cm(i, j) = m.rates[i][j];
    const auto c = oracle::characteristic_polynomial(cm);
    // l (l + 3)^2 (l + 6) = l^4 + 12 l^3 + 45 l^2 + 54 l
    CHECK(std::abs(c[3] - 12) <= 1e-10);
    CHECK(std::abs(c[2] - 45) <= 1e-10);
    CHECK(std::abs(c[1] - 54) <= 1e-10);
    CHECK(std::abs(c[0]) <= 1e-10);
  }
}

TEST_CASE("thermal coefficients of the Phi family") {
  const auto c = coefficients_phi_thermal({1.0, M_PI / 4}, {1.0, 1.0});
  CHECK(c.c1 == doctest::Approx(2.0 / 9).epsilon(1e-15));
  CHECK(c.c2 == doctest::Approx(2.0 / 9).epsilon(1e-15));
  CHECK(c.c3 == doctest::Approx(1.0 / 18).epsilon(1e-14));
  CHECK(c.c4 == doctest::Approx(-1.0 / 9).epsilon(1e-15));
  CHECK(c.c5.real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(c.c6 == Complex(0.0));

  CHECK_THROWS_AS(coefficients_phi_thermal({1.0, 0.3}, {0.0, 1.0}), ParameterError);

  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> ur(0.0, 1.0);
  std::uniform_real_distribution<double> ua(0.0, 2 * M_PI);
  std::uniform_real_distribution<double> un(0.01, 3.0);
  for (int i = 0; i < 100; ++i) {
    const WernerParams p{ur(rng), ua(rng)};
    const BathParams b{un(rng), 0.2 + ur(rng)};
    const auto k = coefficients_phi_thermal(p, b);
    CHECK(max_state_diff(evaluate(k, b, 0.0), werner_phi(p)) <= 1e-12);

    // Solving the general solution for the Phi initial state gives the same amplitudes.
    const auto fit = fit_thermal_coefficients(werner_phi(p), b);
    CHECK(std::abs(fit.c2 - k.c2) <= 1e-14);
    CHECK(std::abs(fit.c3 - k.c3) <= 1e-14);
    CHECK(std::abs(fit.c4 - k.c4) <= 1e-13);
    CHECK(std::abs(fit.c5 - k.c5) <= 1e-15);
  }

  SUBCASE("long-time populations") {
    const auto s = propagate_analytic({0.7, 0.4}, {1.0, 1.0}, 50.0);
    CHECK(s.x == doctest::Approx(1.0 / 9).epsilon(1e-12));
    CHECK(s.y == doctest::Approx(2.0 / 9).epsilon(1e-12));
    CHECK(s.z == doctest::Approx(2.0 / 9).epsilon(1e-12));
    CHECK(s.w == doctest::Approx(4.0 / 9).epsilon(1e-12));
  }
}

TEST_CASE("vacuum coefficients of the Phi family") {
  const auto d = coefficients_phi_vacuum({1.0, M_PI / 4});
  CHECK(d.d1 == 1.0);
  CHECK(d.d2 == 1.0);
  CHECK(d.d3 == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(d.d4 == 0.0);
  CHECK(d.d5.real() == doctest::Approx(0.5).epsilon(1e-15));

  const auto mixed = coefficients_phi_vacuum({0.0, 1.1});
  CHECK(mixed.d3 == -0.5);
  CHECK(mixed.d4 == 0.25);
  CHECK(std::abs(mixed.d5) == 0.0);

  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> ur(0.0, 1.0);
  std::uniform_real_distribution<double> ua(0.0, 2 * M_PI);
  for (int i = 0; i < 100; ++i) {
    const WernerParams p{ur(rng), ua(rng)};
    const auto k = coefficients_phi_vacuum(p);
    CHECK(max_state_diff(evaluate(k, {0.0, 1.0}, 0.0), werner_phi(p)) <= 1e-12);
    const auto fit = fit_vacuum_coefficients(werner_phi(p));
    CHECK(std::abs(fit.d1 - 1.0) <= 1e-15);
    CHECK(std::abs(fit.d2 - 1.0) <= 1e-15);
    CHECK(std::abs(fit.d3 - k.d3) <= 1e-15);
  }
}

TEST_CASE("propagate_analytic") {
  CHECK(propagate_analytic({0.4, 0.9}, {0.3, 1.0}, 0.0) == werner_phi({0.4, 0.9}));
  CHECK(propagate_analytic({0.4, 0.9}, {0.3, 1.0}, 0.0, Family::psi) == werner_psi({0.4, 0.9}));

  const auto s = propagate_analytic({1.0, M_PI / 4}, {0.0, 1.0}, std::log(2.0));
  CHECK(s.u.real() == doctest::Approx(0.25).epsilon(1e-15));

  CHECK_THROWS_AS(propagate_analytic({0.4, 0.9}, {0.3, 1.0}, -1.0), ParameterError);

  SUBCASE("coherence decays at (1 + 2N) gamma0") {
    for (double n : {0.0, 0.2, 1.5}) {
      const auto st = propagate_analytic({0.8, 0.6}, {n, 0.9}, 1.3);
      CHECK(std::abs(st.u - werner_phi({0.8, 0.6}).u * std::exp(-(1 + 2 * n) * 0.9 * 1.3)) <= 1e-15);
    }
  }

  SUBCASE("outputs satisfy the X-state invariants") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    std::uniform_real_distribution<double> ua(0.0, 2 * M_PI);
    for (int i = 0; i < 300; ++i) {
      const WernerParams p{ur(rng), ua(rng)};
      const BathParams b{i % 3 == 0 ? 0.0 : 2 * ur(rng), 1.0};
      const Family f = i % 2 == 0 ? Family::phi : Family::psi;
      CHECK_NOTHROW(validate(propagate_analytic(p, b, 10 * ur(rng), f)));
    }
  }

  SUBCASE("satisfies the ODE (central differences)") {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    std::uniform_real_distribution<double> ua(0.0, 2 * M_PI);
    for (int i = 0; i < 20; ++i) {
      const WernerParams p{ur(rng), ua(rng)};
      const BathParams b{i < 5 ? 0.0 : 2 * ur(rng), 0.5 + ur(rng)};
      const double t = 0.05 + 4 * ur(rng);
      for (Family f : {Family::phi, Family::psi}) {
        const XState s = propagate_analytic(p, b, t, f);
        const XState d = numeric_derivative(p, b, t, f);
        const auto ref = oracle::population_rates(s, b.n_bath, b.gamma0);
        const double decay = (1 + 2 * b.n_bath) * b.gamma0;
        CHECK(std::abs(d.x - ref[0]) <= 1e-6);
        CHECK(std::abs(d.y - ref[1]) <= 1e-6);
        CHECK(std::abs(d.z - ref[2]) <= 1e-6);
        CHECK(std::abs(d.w - ref[3]) <= 1e-6);
        CHECK(std::abs(d.u + decay * s.u) <= 1e-6);
        CHECK(std::abs(d.v + decay * s.v) <= 1e-6);
      }
    }
  }

  SUBCASE("thermal steady state at gamma0 t = 50") {
    for (double n : {0.1, 0.5, 1.0, 2.0}) {
      const auto st = propagate_analytic({0.9, 0.7}, {n, 2.0}, 25.0);
      const auto g = gibbs_state(n);
      CHECK(std::abs(st.x - g(0, 0).real()) <= 1e-10);
      CHECK(std::abs(st.y - g(1, 1).real()) <= 1e-10);
      CHECK(std::abs(st.z - g(2, 2).real()) <= 1e-10);
      CHECK(std::abs(st.w - g(3, 3).real()) <= 1e-10);
      CHECK(std::abs(st.u) <= 1e-10);
      CHECK(std::abs(st.v) <= 1e-10);
    }
  }

  SUBCASE("pure Phi state in the vacuum never populates |00>") {
    for (double a : {0.1, M_PI / 4, 2.0})
      for (double t : {0.0, 0.3, 1.0, 7.0}) CHECK(std::abs(propagate_analytic({1.0, a}, {0.0, 1.0}, t).x) <= 1e-12);
  }

  SUBCASE("thermal branch approaches the vacuum branch as N -> 0") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
      const WernerParams p{ur(rng), 6 * ur(rng)};
      const double t = 5 * ur(rng);
      CHECK(max_state_diff(propagate_analytic(p, {1e-6, 1.0}, t), propagate_analytic(p, {0.0, 1.0}, t)) <= 1e-5);
    }
  }
}

TEST_CASE("flat layout round trip") {
  std::mt19937_64 rng(13);
  const auto rho = oracle::random_density_matrix(rng);
  const auto flat = flatten(rho);
  CHECK(flat.size() == kFlatStateSize);
  CHECK(max_abs_diff(unflatten(flat), rho) <= 1e-16);
}

TEST_CASE("propagate_rk4") {
  const DensityMatrix bell = to_density_matrix(werner_phi({1.0, M_PI / 4}));

  CHECK(propagate_rk4(bell, {0.5, 1.0}, 0.0, 1e-3).matrix() == bell.matrix());

  for (double n : {0.1, 1.0}) {
    const DensityMatrix g(gibbs_state(n));
    CHECK(max_abs_diff(propagate_rk4(g, {n, 1.0}, 3.0, 1e-3).matrix(), g.matrix()) <= 1e-10);
  }

  const auto rho = propagate_rk4(bell, {0.0, 1.0}, 1.0, 1e-4);
  CHECK(std::abs(rho(1, 2).real() - std::exp(-1.0) / 2) <= 1e-9);

  CHECK_THROWS_AS(propagate_rk4(bell, {0.0, 1.0}, 1.0, 0.2), ParameterError);
  CHECK_THROWS_AS(propagate_rk4(bell, {0.0, 1.0}, 1.0, 0.0), ParameterError);
  CHECK_THROWS_AS(propagate_rk4(bell, {0.0, 1.0}, -1.0, 1e-3), ParameterError);

  SUBCASE("general states stay physical") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 10; ++i) {
      const DensityMatrix r0(oracle::random_density_matrix(rng));
      const auto r1 = propagate_rk4(r0, {0.4, 1.0}, 2.0, 1e-3);
      CHECK(std::abs(r1.matrix().trace() - 1.0) <= 1e-9);
      CHECK(r1.matrix().hermiticity_defect() <= 1e-10);
      CHECK(hermitian_eigenvalues(r1.matrix())[3] >= -1e-8);
    }
  }
}

TEST_CASE("analytic and RK4 propagation agree") {
  const std::array<double, 5> rs{0.0, 0.25, 0.5, 0.75, 1.0};
  const std::array<double, 5> alphas{0.0, M_PI / 8, M_PI / 4, 3 * M_PI / 8, M_PI / 2};
  const std::array<double, 3> ns{0.0, 0.3, 1.0};
  double worst = 0.0;
  double worst_off_x = 0.0;
  for (Family f : {Family::phi, Family::psi}) {
    for (double r : rs) {
      for (double a : alphas) {
        for (double n : ns) {
          const BathParams b{n, 1.0};
          DensityMatrix rho = to_density_matrix(werner({r, a}, f));
          double t = 0.0;
          for (int k = 1; k <= 10; ++k) {
            rho = propagate_rk4(rho, b, 0.5, 1e-3);
            t += 0.5;
            const XState ref = propagate_analytic({r, a}, b, t, f);
            worst = std::max(worst, max_state_diff(from_density_matrix(rho), ref));
            worst_off_x = std::max(worst_off_x, x_structure_defect(rho.matrix()));
          }
        }
      }
    }
  }
  CHECK(worst <= 1e-8);
  CHECK(worst_off_x <= 1e-9);
}
