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

#include "dysonlab/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dysonlab/errors.hpp"
#include "dysonlab/numerics.hpp"

namespace dysonlab::correlation {

double distance(const Vec3& a, const Vec3& b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  const double dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

ParticleConfiguration::ParticleConfiguration(std::vector<Vec3> positions, std::vector<double> charges)
    : positions_(std::move(positions)), charges_(std::move(charges)) {
  if (positions_.empty()) throw PreconditionError("ParticleConfiguration: no particles");
  if (positions_.size() != charges_.size()) {
    throw PreconditionError("ParticleConfiguration: positions and charges differ in length");
  }
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    for (double c : positions_[i]) {
      if (!std::isfinite(c)) throw PreconditionError("ParticleConfiguration: non-finite position");
    }
    if (!std::isfinite(charges_[i])) throw PreconditionError("ParticleConfiguration: non-finite charge");
    for (std::size_t j = 0; j < i; ++j) {
      if (!(distance(positions_[i], positions_[j]) > 1e-12)) {
        std::ostringstream msg;
        msg << "ParticleConfiguration: particles " << j << " and " << i << " coincide";
        throw DomainError(msg.str());
      }
    }
  }
}

double yukawa(double r, double mu) {
  if (!(r > 0.0)) throw DomainError("yukawa: r must be positive");
  if (!(mu >= 0.0)) throw DomainError("yukawa: mu must be >= 0");
  return std::exp(-mu * r) / r;
}

double pair_energy(const ParticleConfiguration& config, double mu) {
  const auto& x = config.positions();
  const auto& z = config.charges();
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      sum += z[i] * z[j] * yukawa(distance(x[i], x[j]), mu);
    }
  }
  return sum;
}

std::vector<double> nearest_opposite_distances(const ParticleConfiguration& config) {
  const auto& x = config.positions();
  const auto& z = config.charges();
  std::vector<double> d(x.size(), kInf);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (z[i] * z[j] < 0.0) d[i] = std::min(d[i], distance(x[i], x[j]));
    }
  }
  return d;
}

InequalityReport onsager_check(const ParticleConfiguration& config, double mu) {
  const double lhs = pair_energy(config, mu);
  const auto d = nearest_opposite_distances(config);
  const auto& z = config.charges();
  double rhs = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (std::isinf(d[i])) continue;
    const double dm = d[i] * mu;
    rhs -= z[i] * z[i] * (dm * dm / 12.0 + 0.5 * dm + 1.0) * yukawa(d[i], mu);
  }
  return InequalityReport::compare(lhs, rhs);
}

InequalityReport baxter_check(const ParticleConfiguration& config) {
  const auto& z = config.charges();
  for (double zi : z) {
    if (zi < 0.0 && zi != -1.0) throw PreconditionError("baxter_check: negative charges must equal -1");
  }
  const double zmax = *std::max_element(z.begin(), z.end());
  const double lhs = pair_energy(config, 0.0);
  const auto d = nearest_opposite_distances(config);
  double rhs = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (z[i] < 0.0 && !std::isinf(d[i])) rhs -= (1.0 + 2.0 * zmax) / d[i];
  }
  return InequalityReport::compare(lhs, rhs);
}

InequalityReport yukawa_positivity_check(const ParticleConfiguration& config, double mu) {
  if (!(mu > 0.0)) throw DomainError("yukawa_positivity_check: mu must be positive");
  const auto& x = config.positions();
  const auto& z = config.charges();
  double lhs = 0.0;
  double rhs = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    rhs -= z[i] * z[i] * mu / 2.0;
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double r = distance(x[i], x[j]);
      lhs += z[i] * z[j] * (-std::expm1(-mu * r) / r);
    }
  }
  return InequalityReport::compare(lhs, rhs);
}

PolynomialBump::PolynomialBump(int order) : order_(order) {
  if (order < 1) throw DomainError("PolynomialBump: order must be >= 1");
  const double line = integrate_1d([this](double s) { return profile(s) * profile(s); }, -0.5, 0.5, 1e-14).value;
  norm_squared_ = line * line * line;
}

double PolynomialBump::profile(double s) const {
  if (std::abs(s) >= 0.5) return 0.0;
  return std::pow(1.0 - 4.0 * s * s, order_);
}

double PolynomialBump::operator()(const Vec3& x) const {
  return profile(x[0]) * profile(x[1]) * profile(x[2]);
}

namespace {

// int ds chi(a - s) chi(b - s) over the common support, by an n-point rule.
double axis_overlap(const PolynomialBump& chi, double a, double b, const GaussRule& rule) {
  const double lo = std::max(a, b) - 0.5;
  const double hi = std::min(a, b) + 0.5;
  if (!(hi > lo)) return 0.0;
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double s = c + h * rule.nodes[k];
    sum += rule.weights[k] * chi.profile(a - s) * chi.profile(b - s);
  }
  return h * sum;
}

double cly_localized_energy(const ParticleConfiguration& config, double mu_eff, const PolynomialBump& chi,
                            const GaussRule& rule, double& magnitude) {
  const auto& x = config.positions();
  const auto& z = config.charges();
  double sum = 0.0;
  magnitude = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      double weight = 1.0;
      for (int k = 0; k < 3 && weight != 0.0; ++k) weight *= axis_overlap(chi, x[i][k], x[j][k], rule);
      if (weight == 0.0) continue;
      const double term = z[i] * z[j] * yukawa(distance(x[i], x[j]), mu_eff) * weight;
      sum += term;
      magnitude += std::abs(term);
    }
  }
  return sum;
}

}  // namespace

InequalityReport cly_localization_check(const ParticleConfiguration& config, double mu, double omega,
                                        const PolynomialBump& chi, const ProductQuadrature& y_grid) {
  if (!(mu >= 0.0)) throw DomainError("cly_localization_check: mu must be >= 0");
  if (!(omega > 0.0)) throw DomainError("cly_localization_check: omega must be positive");
  if (y_grid.points_per_axis < 1) throw DomainError("cly_localization_check: need >= 1 point per axis");
  const GaussRule coarse = gauss_legendre(y_grid.points_per_axis);
  const GaussRule fine = gauss_legendre(2 * y_grid.points_per_axis);
  double magnitude = 0.0;
  const double rhs_coarse = cly_localized_energy(config, mu + omega, chi, coarse, magnitude);
  const double rhs = cly_localized_energy(config, mu + omega, chi, fine, magnitude);
  const double quad_tol = std::abs(rhs - rhs_coarse) + 1e-12 * magnitude;
  const double lhs = chi.l2_norm_squared() * pair_energy(config, mu) +
                     static_cast<double>(config.size()) * omega;
  return InequalityReport::compare(lhs, rhs, std::min(kInequalitySlack, -quad_tol));
}

OmegaSweep cly_omega_sweep(const ParticleConfiguration& config, double mu, std::span<const double> omegas,
                           const PolynomialBump& chi, const ProductQuadrature& y_grid) {
  OmegaSweep sweep{{}, kInf};
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    if (i > 0 && !(omegas[i] > omegas[i - 1])) throw DomainError("cly_omega_sweep: omegas must increase");
    sweep.points.push_back({omegas[i], cly_localization_check(config, mu, omegas[i], chi, y_grid)});
  }
  for (std::size_t i = sweep.points.size(); i-- > 0;) {
    if (!sweep.points[i].report.holds) break;
    sweep.threshold = sweep.points[i].omega;
  }
  return sweep;
}

ParticleConfiguration random_configuration(Engine& rng, int n, double box, ChargeMode mode) {
  if (n < 1) throw DomainError("random_configuration: need n >= 1");
  if (!(box > 0.0)) throw DomainError("random_configuration: box must be positive");
  std::vector<Vec3> x;
  x.reserve(n);
  while (static_cast<int>(x.size()) < n) {
    const Vec3 p = {uniform(rng, 0.0, box), uniform(rng, 0.0, box), uniform(rng, 0.0, box)};
    bool separated = true;
    for (const Vec3& q : x) {
      if (distance(p, q) < 1e-9 * box) {
        separated = false;
        break;
      }
    }
    if (separated) x.push_back(p);
  }
  std::vector<double> z(n);
  for (double& zi : z) {
    switch (mode) {
      case ChargeMode::Unit:
        zi = uniform01(rng) < 0.5 ? -1.0 : 1.0;
        break;
      case ChargeMode::Nuclear:
        zi = uniform01(rng) < 0.5 ? -1.0 : static_cast<double>(uniform_int(rng, 1, 3));
        break;
      case ChargeMode::General:
        zi = uniform(rng, -3.0, 3.0);
        break;
    }
  }
  return ParticleConfiguration(std::move(x), std::move(z));
}

}  // namespace dysonlab::correlation
