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

#include "doctest.h"
#include "dysonlab/errors.hpp"
#include "dysonlab/foldy.hpp"
#include "dysonlab/random.hpp"
#include "oracle_values.hpp"

using namespace dysonlab;
using namespace dysonlab::foldy;

TEST_CASE("J by both routes") {
  CHECK(std::abs(j_closed_form() - oracle::kJ) <= 1e-14);
  CHECK(std::abs(j_from_integral(1e-10) - j_closed_form()) <= 1e-8);
  const FoldyConstant& j = foldy_constant();
  CHECK(std::abs(j.value - oracle::kJ) <= 1e-14);
  CHECK(j.digits >= 12);
  CHECK(&foldy_constant() == &j);
}

TEST_CASE("J integrand limits") {
  CHECK(j_integrand(0.0) == 1.0);
  for (double x : {10.0, 100.0}) CHECK(j_integrand(x) * 2.0 * std::pow(x, 4) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("pair_gap is the stable form of (a + b) - sqrt(a^2 + 2ab)") {
  CHECK(pair_gap(0.0, 0.0) == 0.0);
  CHECK(pair_gap(3.0, 4.0) == doctest::Approx(7.0 - std::sqrt(33.0)).epsilon(1e-14));
  CHECK(pair_gap(1e12, 1.0) > 0.0);
}

TEST_CASE("kinetic symbol") {
  CHECK(kinetic_symbol(0.0, {}) == 0.0);
  CHECK(kinetic_symbol(1.0, {0.0, 1.0, 1.0, 1.0}) == doctest::Approx(0.25));
  const CutoffSpec wide{0.0, 1.0, 1e8, 2.0};
  CHECK(kinetic_symbol(3.0, wide) == doctest::Approx(0.5 * 8.0 * 9.0).epsilon(1e-10));
  double previous = 0.0;
  for (double p = 0.0; p < 20.0; p += 0.25) {
    const double t = kinetic_symbol(p, {0.0, 1.0, 0.7, 1.3});
    CHECK(t >= previous);
    previous = t;
  }
}

TEST_CASE("potential hat") {
  CHECK(potential_hat(0.0, {1.0, 2.0, 1.0, 1.0}) == doctest::Approx(3.0 * kPi));
  CHECK(potential_hat(2.0, {0.0, 1e9, 1.0, 1.0}) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(potential_hat(1e9, {0.1, 10.0, 1.0, 1.0}) < 1e-15);
}

TEST_CASE("CutoffSpec validation") {
  CHECK_THROWS_AS((CutoffSpec{1.0, 1.0, 1.0, 1.0}.validate()), DomainError);
  CHECK_THROWS_AS((CutoffSpec{-0.1, 1.0, 1.0, 1.0}.validate()), DomainError);
  CHECK_THROWS_AS((CutoffSpec{0.0, 1.0, 0.0, 1.0}.validate()), DomainError);
  CHECK_THROWS_AS((CutoffSpec{0.0, 1.0, 1.0, 0.0}.validate()), DomainError);
}

TEST_CASE("simplified local energy") {
  CHECK(local_energy_simplified(1.0, 1.0) == doctest::Approx(-oracle::kJ).epsilon(1e-12));
  CHECK(std::abs(local_energy_simplified_quadrature(2.0, 3.0, 1e-10).value / oracle::kLocalSimplified_2_3 - 1.0) <= 1e-8);
  CHECK(local_energy_simplified(16.0, 1.0) == doctest::Approx(32.0 * local_energy_simplified(1.0, 1.0)).epsilon(1e-12));
  CHECK(local_energy_simplified(0.0, 2.0) == 0.0);
  for (double lambda : {2.0, 3.0}) {
    const double base = local_energy_simplified_quadrature(1.7, 1.3, 1e-12).value;
    const double scaled = local_energy_simplified_quadrature(std::pow(lambda, 4) * 1.7, 1.3, 1e-12).value;
    CHECK(std::abs(scaled / (std::pow(lambda, 5) * base) - 1.0) <= 1e-9);
  }
}

TEST_CASE("local energy with cutoffs matches the quadrature oracle") {
  CHECK(std::abs(local_energy(100.0, {1.0, 10.0, 1.0, 1.0}).value / oracle::kLocalCutoff_s1 - 1.0) <= 1e-8);
  CHECK(std::abs(local_energy(100.0, {0.1, 100.0, 10.0, 1.0}).value / oracle::kLocalCutoff_s10 - 1.0) <= 1e-8);
  CHECK(std::abs(local_energy(100.0, {0.1, 100.0, 0.1, 1.0}).value / oracle::kLocalCutoff_s01 - 1.0) <= 1e-8);
}

TEST_CASE("local energy approaches the simplified value as the cutoffs are removed") {
  const double target = local_energy_simplified(100.0, 1.0);
  double previous = 0.0;
  for (int rung = 0; rung < 4; ++rung) {
    const double widen = std::pow(std::sqrt(10.0), rung);
    const double ratio = local_energy(100.0, {1.0 / widen, 10.0 * widen, widen, 1.0}).value / target;
    CHECK(ratio > previous);
    CHECK(ratio <= 1.0);
    previous = ratio;
  }
  CHECK(std::abs(previous - 1.0) <= 0.05);
  CHECK(std::abs(local_energy(100.0, {0.1, 100.0, 10.0, 1.0}).value / target - 1.0) <= 0.05);
}

TEST_CASE("local energy is nonpositive and vanishes at nu = 0") {
  CHECK(local_energy(0.0, {0.1, 10.0, 1.0, 1.0}).value == 0.0);
  Engine rng(derive_seed(7, "foldy-sign"));
  for (int i = 0; i < 1000; ++i) {
    const double mu_long = uniform(rng, 0.0, 2.0);
    const CutoffSpec spec{mu_long, mu_long + uniform(rng, 0.1, 50.0), uniform(rng, 0.05, 20.0), uniform(rng, 0.2, 3.0)};
    const auto r = local_energy(uniform(rng, 0.0, 500.0), spec, 1e-8);
    CHECK(r.value <= 0.0);
  }
}
