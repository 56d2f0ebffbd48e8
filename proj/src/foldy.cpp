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

#include "dysonlab/foldy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dysonlab/errors.hpp"

namespace dysonlab::foldy {

namespace {

// -(1 / (2 (2 pi)^3)) * 4 pi, the angular prefactor of every local-energy integral.
constexpr double kMomentumPrefactor = -4.0 * kPi / (2.0 * 8.0 * kPi * kPi * kPi);

double peak_location(const RealFunction& integrand, double scale) {
  double best_p = scale;
  double best = -1.0;
  for (int i = 0; i <= 800; ++i) {
    const double p = scale * std::pow(10.0, -4.0 + 8.0 * i / 800.0);
    const double v = integrand(p);
    if (v > best) {
      best = v;
      best_p = p;
    }
  }
  return best_p;
}

}  // namespace

void CutoffSpec::validate() const {
  if (!(mu_long >= 0.0)) throw DomainError("CutoffSpec: mu_long must be >= 0");
  if (!(mu_short > mu_long)) throw DomainError("CutoffSpec: mu_short must exceed mu_long");
  if (!(s > 0.0)) throw DomainError("CutoffSpec: s must be positive");
  if (!(ell > 0.0)) throw DomainError("CutoffSpec: ell must be positive");
}

double pair_gap(double a, double b) {
  const double sum = a + b;
  if (sum == 0.0) return 0.0;
  return b * b / (sum + std::sqrt(a * a + 2.0 * a * b));
}

double j_integrand(double x) {
  const double x2 = x * x;
  const double x4 = x2 * x2;
  // (1 + x^4)^2 - x^4 (x^4 + 2) = 1
  return 1.0 / (1.0 + x4 + x2 * std::sqrt(x4 + 2.0));
}

double j_from_integral(double tol) {
  const QuadratureResult r = integrate_1d(j_integrand, 0.0, kInf, tol);
  return std::pow(2.0 / kPi, 0.75) * r.value;
}

double j_closed_form() {
  return std::pow(4.0 / kPi, 0.75) * gamma(0.5) * gamma(0.75) / (5.0 * gamma(1.25));
}

const FoldyConstant& foldy_constant() {
  static const FoldyConstant constant = [] {
    const double tol = 1e-12;
    const double closed = j_closed_form();
    const double integral = j_from_integral(tol);
    const double rel = std::abs(closed - integral) / closed;
    if (rel > 1e-9) {
      std::ostringstream msg;
      msg << "Foldy constant routes disagree: " << closed << " vs " << integral;
      throw ConsistencyError(msg.str());
    }
    const int digits = rel == 0.0 ? 16 : static_cast<int>(std::floor(-std::log10(rel)));
    return FoldyConstant{closed, integral, "gamma", tol, std::min(digits, 16)};
  }();
  return constant;
}

double kinetic_symbol(double p, const CutoffSpec& spec) {
  if (!(p >= 0.0)) throw DomainError("kinetic_symbol: p must be >= 0");
  const double p2 = p * p;
  const double ell3 = spec.ell * spec.ell * spec.ell;
  return 0.5 * ell3 * p2 * p2 / (p2 + spec.ell / (spec.s * spec.s));
}

double potential_hat(double p, const CutoffSpec& spec) {
  if (!(p >= 0.0)) throw DomainError("potential_hat: p must be >= 0");
  const double p2 = p * p;
  const double a = p2 + spec.mu_long * spec.mu_long;
  const double b = p2 + spec.mu_short * spec.mu_short;
  // 1/a - 1/b written as a single fraction; a == 0 only for p = mu_long = 0.
  if (a == 0.0) return kInf;
  return 4.0 * kPi * (b - a) / (a * b);
}

LocalEnergyResult local_energy(double nu, const CutoffSpec& spec, double tol) {
  if (!(nu >= 0.0)) throw DomainError("local_energy: nu must be >= 0");
  spec.validate();
  LocalEnergyResult result;
  if (nu == 0.0) {
    result.quadrature = {0.0, 0.0, 1};
    return result;
  }
  auto integrand = [&](double p) {
    if (p == 0.0) return 0.0;
    return p * p * pair_gap(kinetic_symbol(p, spec), nu * potential_hat(p, spec));
  };
  const double ell3 = spec.ell * spec.ell * spec.ell;
  const double balance = std::pow(8.0 * kPi * nu / ell3, 0.25);
  std::vector<double> breaks = {balance, spec.mu_long, spec.mu_short,
                                std::sqrt(spec.ell) / spec.s};
  result.quadrature = integrate_half_line(integrand, breaks, tol);
  result.value = kMomentumPrefactor * result.quadrature.value;
  result.integrand_peak_p = peak_location(integrand, balance);
  return result;
}

QuadratureResult local_energy_simplified_quadrature(double nu, double ell, double tol) {
  if (!(nu >= 0.0)) throw DomainError("local_energy_simplified: nu must be >= 0");
  if (!(ell > 0.0)) throw DomainError("local_energy_simplified: ell must be positive");
  if (nu == 0.0) return {0.0, 0.0, 1};
  const double ell3 = ell * ell * ell;
  auto integrand = [=](double p) {
    if (p == 0.0) return 4.0 * kPi * nu;  // limit of p^2 * (4 pi nu / p^2)
    const double p2 = p * p;
    return p2 * pair_gap(0.5 * ell3 * p2, 4.0 * kPi * nu / p2);
  };
  QuadratureResult r = integrate_half_line(integrand, {std::pow(8.0 * kPi * nu / ell3, 0.25)}, tol);
  r.value *= kMomentumPrefactor;
  r.error_estimate *= -kMomentumPrefactor;
  return r;
}

double local_energy_simplified(double nu, double ell, double tol) {
  const QuadratureResult quad = local_energy_simplified_quadrature(nu, ell, tol);
  if (nu == 0.0) return 0.0;
  const double closed = -foldy_constant().value * std::pow(nu, 1.25) * std::pow(ell, -0.75);
  if (std::abs(quad.value - closed) > 1e-5 * std::abs(closed)) {
    std::ostringstream msg;
    msg << "local_energy_simplified: quadrature " << quad.value << " vs closed form " << closed;
    throw ConsistencyError(msg.str());
  }
  return closed;
}

}  // namespace dysonlab::foldy
