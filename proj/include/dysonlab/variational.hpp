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

#include <cstdint>
#include <optional>
#include <vector>

#include "dysonlab/numerics.hpp"

namespace dysonlab::variational {

/// Nonnegative radial function sampled on the nodes of a RadialGrid.
class RadialProfile {
 public:
  RadialProfile(RadialGrid grid, std::vector<double> values);

  const RadialGrid& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// integrate_radial(phi^2)
  double norm_squared() const;
  RadialProfile normalized() const;

 private:
  RadialGrid grid_;
  std::vector<double> values_;
};

struct FunctionalEnergy {
  double energy = 0.0;
  double kinetic = 0.0;    // T = (1/2) int |grad phi|^2
  double potential = 0.0;  // V = J int phi^{5/2}
};

/// Kinetic term on the grid.
///
/// The radial derivative is taken at cell faces x_m = m / n with the
/// fourth-order staggered stencil (1, -27, 27, -1) / 24h in the map variable.
/// Cells beyond the origin are even reflections (phi'(0) = 0); cells beyond
/// r_max are odd reflections (phi(r_max) = 0). The face sum is the trapezoid
/// rule for 2 pi int r^2 phi_x^2 / r'(x) dx. The staggered stencil has no
/// odd-even null mode, so T is positive definite.
double kinetic_energy(const RadialProfile& profile);

/// T - V. Throws PreconditionError if |norm^2 - 1| > 1e-6.
FunctionalEnergy functional_energy(const RadialProfile& profile, std::optional<double> j = std::nullopt);

/// phi_lambda(r) = lambda^{3/2} phi(lambda r) on the grid dilated in tandem, so
/// T and V scale exactly as lambda^2 and lambda^{3/4}.
RadialProfile rescale(const RadialProfile& profile, double lambda);

/// lambda* = (3V / 8T)^{4/5}, the minimizer of lambda^2 T - lambda^{3/4} V.
double optimal_dilation(double kinetic, double potential);

/// pi^{-3/4} lambda^{3/2} exp(-(lambda r)^2 / 2), renormalized on the grid.
RadialProfile gaussian_profile(const RadialGrid& grid, double lambda = 1.0);

/// Gaussian dilated by the analytic lambda* of the continuum Gaussian.
RadialProfile default_initial_profile(const RadialGrid& grid);

struct MinimizationResult {
  RadialProfile profile;
  double energy = 0.0;
  double kinetic = 0.0;
  double potential = 0.0;
  int iterations = 0;
  double virial_residual = 0.0;  // |8T - 3V|
  double chemical_potential = 0.0;  // T - 5V/4, Euler-Lagrange multiplier (diagnostic)
  bool converged = false;
  std::vector<double> energy_history;
};

inline constexpr double kDefaultMinimizeStep = 10.0;
inline constexpr double kDefaultMinimizeTol = 1e-15;
inline constexpr int kDefaultMinimizeIterations = 5000;

/// Projected, preconditioned gradient descent of the discrete functional.
///
/// Each step solves (W + dt H_T) d = g - mu W phi, where g is the gradient of
/// T - V, W the grid weights, H_T the Hessian of T and mu makes the residual
/// orthogonal to phi. The trial phi - dt d is clipped at zero and
/// renormalized; dt is halved until the energy does not increase and doubled
/// after every accepted step. Stops when an accepted step lowers the energy
/// by less than `tol`. Hitting `max_iter` returns converged = false.
MinimizationResult minimize(const RadialProfile& init, double step = kDefaultMinimizeStep,
                            double tol = kDefaultMinimizeTol, int max_iter = kDefaultMinimizeIterations,
                            std::optional<double> j = std::nullopt);

/// N^{7/5} e_star.
double asymptotic_energy(double n_particles, double e_star);

}  // namespace dysonlab::variational
