// Copyright 2026 The dysonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <vector>

#include "doctest.h"
#include "dysonlab/errors.hpp"
#include "dysonlab/numerics.hpp"
#include "oracle_values.hpp"

using namespace dysonlab;

TEST_CASE("integrate_1d reproduces elementary integrals") {
  const auto linear = integrate_1d([](double x) { return x; }, 0.0, 1.0);
  CHECK(linear.value == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(linear.evaluations >= 1);
  CHECK(linear.error_estimate >= 0.0);

  const auto decay = integrate_1d([](double x) { return std::exp(-x); }, 0.0, kInf);
  CHECK(std::abs(decay.value - 1.0) <= 1e-10);
}

TEST_CASE("integrate_1d handles an integrable endpoint singularity") {
  const auto r = integrate_1d([](double x) { return x > 0.0 ? 1.0 / std::sqrt(x) : 0.0; }, 0.0, 1.0, 1e-10);
  CHECK(std::abs(r.value - 2.0) <= 1e-8);
}

TEST_CASE("integrate_1d is linear") {
  auto f = [](double x) { return std::exp(-x * x); };
  auto g = [](double x) { return 1.0 / (1.0 + x * x); };
  const double tol = 1e-10;
  const double lhs = integrate_1d([&](double x) { return 2.0 * f(x) - 3.0 * g(x); }, 0.0, kInf, tol).value;
  const double rhs = 2.0 * integrate_1d(f, 0.0, kInf, tol).value - 3.0 * integrate_1d(g, 0.0, kInf, tol).value;
  CHECK(std::abs(lhs - rhs) <= 2.0 * tol * std::max(1.0, std::abs(rhs)));
}

TEST_CASE("J integrand integrates to the Gamma closed form") {
  const double raw = integrate_1d([](double x) { return 1.0 / (1.0 + std::pow(x, 4) + x * x * std::sqrt(std::pow(x, 4) + 2.0)); },
                                  0.0, kInf, 1e-12)
                         .value;
  CHECK(std::abs(std::pow(2.0 / kPi, 0.75) * raw - oracle::kJ) <= 1e-8);
}

TEST_CASE("integrate_1d reports non-finite samples and exhausted budgets") {
  CHECK_THROWS_AS(integrate_1d([](double) { return std::nan(""); }, 0.0, 1.0), DomainError);
  try {
    integrate_1d([](double x) { return std::sin(1.0 / x) / x; }, 1e-6, 1.0, 1e-14, 500);
    FAIL("expected a budget failure");
  } catch (const ConvergenceError& e) {
    CHECK(std::isfinite(e.partial_value()));
    CHECK(e.residual() > 0.0);
  }
}

TEST_CASE("integrate_half_line with breakpoints") {
  const auto r = integrate_half_line([](double p) { return p * p * std::exp(-p); }, {0.5, 3.0});
  CHECK(std::abs(r.value - 2.0) <= 1e-10);
}

TEST_CASE("gamma matches classical values") {
  CHECK(dysonlab::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(dysonlab::gamma(0.5) / std::sqrt(kPi) - 1.0) <= 1e-12);
  CHECK(std::abs(dysonlab::gamma(1.25) / oracle::kGammaFiveQuarters - 1.0) <= 1e-12);
  CHECK_THROWS_AS(dysonlab::gamma(0.0), DomainError);
  CHECK_THROWS_AS(dysonlab::gamma(-1.5), DomainError);
}

TEST_CASE("gamma recurrence") {
  for (double x = 0.25; x <= 5.0; x += 0.125) {
    CHECK(std::abs(dysonlab::gamma(x + 1.0) / (x * dysonlab::gamma(x)) - 1.0) <= 1e-11);
  }
}

TEST_CASE("gauss_legendre integrates polynomials exactly") {
  for (int order : {1, 2, 5, 12}) {
    const GaussRule rule = gauss_legendre(order);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(order));
    for (int k = 0; k <= 2 * order - 1; ++k) {
      double sum = 0.0;
      for (int i = 0; i < order; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], k);
      const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
      CHECK(std::abs(sum - exact) <= 1e-14);
    }
  }
}

TEST_CASE("RadialGrid invariants") {
  const RadialGrid grid(400, 100.0);
  const auto nodes = grid.nodes();
  const auto weights = grid.weights();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(nodes[i] > 0.0);
    CHECK(weights[i] > 0.0);
    if (i > 0) CHECK(nodes[i] > nodes[i - 1]);
  }
  CHECK(nodes.back() < 100.0);
  CHECK_THROWS_AS(RadialGrid(1, 1.0), DomainError);
  CHECK_THROWS_AS(RadialGrid(10, -1.0), DomainError);
}

TEST_CASE("integrate_radial reference integrals") {
  const RadialGrid grid(400, 100.0);
  CHECK(std::abs(integrate_radial([](double r) { return std::exp(-r); }, grid) / (8.0 * kPi) - 1.0) <= grid.tolerance());
  CHECK(integrate_radial([](double) { return 0.0; }, grid) == 0.0);
  const double gauss = integrate_radial([](double r) { return std::pow(kPi, -1.5) * std::exp(-r * r); }, grid);
  CHECK(std::abs(gauss - 1.0) <= grid.tolerance());
  CHECK_THROWS_AS(integrate_radial([](double r) { return r > 50.0 ? kInf : 1.0; }, grid), DomainError);
}

TEST_CASE("radial grid refinement converges monotonically") {
  double previous = kInf;
  for (std::size_t n : {25u, 50u, 100u, 200u}) {
    const double err = std::abs(integrate_radial([](double r) { return std::exp(-r); }, RadialGrid(n, 60.0)) - 8.0 * kPi);
    CHECK(err < previous);
    previous = err;
  }
}

TEST_CASE("scaled grid divides radii") {
  const RadialGrid grid(50, 10.0);
  const RadialGrid half = grid.scaled(2.0);
  CHECK(half.r_max() == doctest::Approx(5.0));
  CHECK(half.nodes()[7] == doctest::Approx(grid.nodes()[7] / 2.0).epsilon(1e-14));
}

TEST_CASE("fit_power_law recovers exponents") {
  std::vector<double> x{1.0, 10.0, 100.0, 1000.0}, y;
  for (double v : x) y.push_back(3.0 * std::pow(v, 0.6));
  const PowerLawFit fit = fit_power_law(x, y);
  CHECK(fit.slope == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(std::exp(fit.intercept) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fit.max_residual <= 1e-12);
}
