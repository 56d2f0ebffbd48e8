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

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "dysonlab/inequality.hpp"
#include "dysonlab/random.hpp"

namespace dysonlab::correlation {

using Vec3 = std::array<double, 3>;

double distance(const Vec3& a, const Vec3& b);

/// Point charges z_i at positions x_i. Nonempty, matched lengths, and no
/// two positions closer than 1e-12.
class ParticleConfiguration {
 public:
  ParticleConfiguration(std::vector<Vec3> positions, std::vector<double> charges);

  std::size_t size() const noexcept { return positions_.size(); }
  const std::vector<Vec3>& positions() const noexcept { return positions_; }
  const std::vector<double>& charges() const noexcept { return charges_; }

 private:
  std::vector<Vec3> positions_;
  std::vector<double> charges_;
};

/// exp(-mu r) / r
double yukawa(double r, double mu);

/// sum_{i<j} z_i z_j Y_mu(x_i - x_j)
double pair_energy(const ParticleConfiguration& config, double mu);

/// D_i, the distance from particle i to the nearest particle of opposite
/// sign; +infinity when there is none.
std::vector<double> nearest_opposite_distances(const ParticleConfiguration& config);

/// Onsager: pair_energy >= -sum_i z_i^2 ((D_i mu)^2 / 12 + D_i mu / 2 + 1) Y_mu(D_i).
/// Terms with D_i = infinity contribute zero.
InequalityReport onsager_check(const ParticleConfiguration& config, double mu);

/// Baxter (mu = 0): pair_energy >= -sum_{z_i<0} (1 + 2 max_j z_j) / D_i.
/// Every negative charge must be exactly -1 (PreconditionError otherwise).
InequalityReport baxter_check(const ParticleConfiguration& config);

/// sum_{i<j} z_i z_j (Y_0 - Y_mu)(x_ij) >= -sum_i z_i^2 mu / 2, mu > 0.
InequalityReport yukawa_positivity_check(const ParticleConfiguration& config, double mu);

/// Separable polynomial bump chi(x) = prod_k (1 - 4 x_k^2)^order on the unit
/// cube |x_k| <= 1/2, zero outside. order = 2 is the quartic bump. Values lie
/// in [0, 1]; chi is C^{order-1}. int chi^2 is computed once at construction.
class PolynomialBump {
 public:
  explicit PolynomialBump(int order = 2);

  int order() const noexcept { return order_; }
  double profile(double s) const;  // one-dimensional factor
  double operator()(const Vec3& x) const;
  double l2_norm_squared() const noexcept { return norm_squared_; }

 private:
  int order_;
  double norm_squared_;
};

/// Tensor Gauss-Legendre rule for the y-integral. On each axis the integral
/// of chi(x_i - y) chi(x_j - y) is taken over the overlap interval of the two
/// supports with `points_per_axis` nodes; the 3-d integral is the product.
struct ProductQuadrature {
  int points_per_axis = 8;
};

/// Conlon-Lieb-Yau localization:
///   (int chi^2) sum_{i<j} z_i z_j Y_mu(x_ij) + N omega
///     >= int dy sum_{i<j} z_i z_j chi_y(x_i) Y_{mu+omega}(x_ij) chi_y(x_j).
/// holds compares against the quadrature error estimate (rule vs doubled rule).
InequalityReport cly_localization_check(const ParticleConfiguration& config, double mu, double omega,
                                        const PolynomialBump& chi, const ProductQuadrature& y_grid = {});

struct OmegaSweepPoint {
  double omega;
  InequalityReport report;
};

/// Runs the CLY check over the given ascending omegas and reports the
/// smallest ladder value from which the inequality holds for every larger
/// ladder value (+infinity when the top of the ladder still fails).
struct OmegaSweep {
  std::vector<OmegaSweepPoint> points;
  double threshold;
};
OmegaSweep cly_omega_sweep(const ParticleConfiguration& config, double mu, std::span<const double> omegas,
                           const PolynomialBump& chi, const ProductQuadrature& y_grid = {});

/// Charge assignments for random ensembles.
enum class ChargeMode {
  Unit,      // z = +-1
  Nuclear,   // negatives are -1, positives drawn from {1, 2, 3}
  General,   // real charges uniform in [-3, 3] (not valid for Baxter)
};

/// N particles uniform in [0, box]^3, retried until pairwise separated.
ParticleConfiguration random_configuration(Engine& rng, int n, double box, ChargeMode mode);

}  // namespace dysonlab::correlation
