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
#include "dysonlab/trialstate.hpp"
#include "oracle_values.hpp"

using namespace dysonlab;
using namespace dysonlab::trialstate;

namespace {

const variational::MinimizationResult& minimizer() {
  static const auto m = variational::minimize(variational::default_initial_profile(RadialGrid(400, 100.0)));
  return m;
}

Eigen::MatrixXd random_psd(int d, Engine& rng) {
  Eigen::MatrixXd a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = normal(rng);
  }
  return a * a.transpose();
}

std::vector<double> random_occupations(int m, Engine& rng) {
  std::vector<double> f(m);
  for (double& x : f) x = uniform(rng, 0.0, 5.0);
  return f;
}

}  // namespace

TEST_CASE("occupation function") {
  CHECK(occupation_f(1.0, 1.0) == doctest::Approx(oracle::kOccupation_1_1).epsilon(1e-14));
  CHECK(occupation_f(1.0, 10.0) == doctest::Approx(oracle::kOccupation_1_10).epsilon(1e-12));
  CHECK(occupation_f(0.0, 2.0) == 0.0);
  CHECK_THROWS_AS(occupation_f(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(occupation_f(-1.0, 1.0), DomainError);
  // f depends on p^4 / rho only.
  CHECK(occupation_f(16.0, 2.0) == doctest::Approx(occupation_f(1.0, 1.0)).epsilon(1e-14));
}

TEST_CASE("occupation moment") {
  const double m1 =
      4.0 * kPi * integrate_half_line([](double p) { return p == 0.0 ? 0.0 : p * p * occupation_f(1.0, p); }, {1.0})
                      .value;
  CHECK(m1 == doctest::Approx(oracle::kOccupationMoment_1).epsilon(1e-9));
}

TEST_CASE("pointwise pair energy") {
  CHECK(pointwise_pair_energy(3.0) == doctest::Approx(oracle::kPairEnergy_3).epsilon(1e-9));
  CHECK(pointwise_pair_energy(0.0) == 0.0);
  for (double rho : {1e-3, 1.0, 1e3}) {
    CHECK(pointwise_pair_energy(rho) == doctest::Approx(-oracle::kJ * std::pow(rho, 1.25)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(pointwise_pair_energy(1.0, kDefaultQuadratureTol, oracle::kJ * 1.01), ConsistencyError);
}

TEST_CASE("trace of gamma") {
  const auto cond = condensate_from_minimizer(1000.0, minimizer().profile);
  CHECK(cond.lambda0_sq == 500.0);
  std::vector<double> density(cond.phi0.size());
  for (std::size_t i = 0; i < density.size(); ++i) {
    density[i] = std::pow(2.0 * cond.lambda0_sq * cond.phi0.values()[i] * cond.phi0.values()[i], 0.75);
  }
  const double expected = oracle::kOccupationMoment_1 * integrate_radial(density, cond.phi0.grid()) /
                          (8.0 * kPi * kPi * kPi);
  CHECK(trace_gamma(cond) == doctest::Approx(expected).epsilon(1e-8));
  CHECK(trace_gamma({0.0, cond.phi0}) == 0.0);
}

TEST_CASE("trace of gamma grows like N^{3/5}") {
  std::vector<double> n{1e3, 1e4, 1e5, 1e6};
  std::vector<double> t;
  for (double x : n) t.push_back(trace_gamma(condensate_from_minimizer(x, minimizer().profile)));
  const auto fit = fit_power_law(n, t);
  CHECK(fit.slope == doctest::Approx(0.6).epsilon(1e-6));
  for (std::size_t i = 0; i < n.size(); ++i) CHECK(t[i] < n[i]);
}

TEST_CASE("upper bound energy") {
  const auto& m = minimizer();
  for (double n : {1.0, 32.0, 1e5}) {
    CHECK(upper_bound_energy(n, m.profile) == doctest::Approx(std::pow(n, 1.4) * m.energy).epsilon(1e-10));
  }
  CHECK_THROWS_AS(upper_bound_energy(0.0, m.profile), DomainError);
}

TEST_CASE("coherent frames") {
  Engine rng(3);
  const auto frame = CoherentFrame::random(4, 9, rng);
  CHECK(frame.tightness_residual() <= 1e-12);
  CHECK(frame.weights().sum() == doctest::Approx(4.0).epsilon(1e-12));
  CHECK_THROWS_AS(CoherentFrame(Eigen::MatrixXd::Identity(3, 3), Eigen::VectorXd::Constant(3, 0.5)),
                  PreconditionError);
  CHECK_THROWS_AS(CoherentFrame::random(3, 2, rng), DomainError);
}

TEST_CASE("concave function names") {
  for (auto xi : {ConcaveFunction::Sqrt, ConcaveFunction::SqrtTTPlusOne, ConcaveFunction::Identity,
                  ConcaveFunction::Log1p}) {
    CHECK(concave_function_from_name(name(xi)) == xi);
  }
  CHECK(apply(ConcaveFunction::SqrtTTPlusOne, 3.0) == doctest::Approx(std::sqrt(12.0)));
  CHECK_THROWS_AS(concave_function_from_name("cube"), DomainError);
}

TEST_CASE("berezin-lieb holds on random frames") {
  Engine rng(11);
  for (int t = 0; t < 200; ++t) {
    const int d = uniform_int(rng, 2, 6);
    const int m = uniform_int(rng, d, 3 * d);
    const auto frame = CoherentFrame::random(d, m, rng);
    const auto f = random_occupations(m, rng);
    const Eigen::MatrixXd y = random_psd(d, rng);
    for (auto xi : {ConcaveFunction::Sqrt, ConcaveFunction::SqrtTTPlusOne, ConcaveFunction::Log1p}) {
      CHECK(berezin_lieb_check(frame, f, y, xi).holds);
    }
    const auto linear = berezin_lieb_check(frame, f, y, ConcaveFunction::Identity);
    CHECK(std::abs(linear.lhs - linear.rhs) <= 1e-10 * std::max(1.0, std::abs(linear.lhs)));
  }
}

TEST_CASE("berezin-lieb is an equality on an orthonormal basis") {
  const CoherentFrame basis(Eigen::MatrixXd::Identity(3, 3), Eigen::VectorXd::Ones(3));
  Engine rng(12);
  const std::vector<double> f{0.5, 2.0, 7.0};
  const auto r = berezin_lieb_check(basis, f, random_psd(3, rng), ConcaveFunction::Sqrt);
  CHECK(std::abs(r.lhs - r.rhs) <= 1e-12 * std::abs(r.lhs));
}

TEST_CASE("berezin-lieb preconditions") {
  const CoherentFrame basis(Eigen::MatrixXd::Identity(2, 2), Eigen::VectorXd::Ones(2));
  const std::vector<double> f{1.0, 2.0};
  Eigen::MatrixXd indefinite(2, 2);
  indefinite << 1.0, 0.0, 0.0, -1.0;
  CHECK_THROWS_AS(berezin_lieb_check(basis, f, indefinite, ConcaveFunction::Sqrt), PreconditionError);
  const std::vector<double> negative{1.0, -2.0};
  CHECK_THROWS_AS(berezin_lieb_check(basis, negative, Eigen::MatrixXd::Identity(2, 2), ConcaveFunction::Sqrt),
                  PreconditionError);
}
