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

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace dysonlab {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

using RealFunction = std::function<double(double)>;

inline constexpr double kDefaultQuadratureTol = 1e-10;
inline constexpr int kDefaultQuadratureBudget = 400000;

/// Adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b].
///
/// `b` may be +infinity; the tail is mapped with the fixed substitution
/// x = a + t / (1 - t), t in [0, 1). Subdivision is global: the interval with
/// the largest local error is bisected until the summed error estimate drops
/// below tol * max(1, |value|). The same inputs always produce the same
/// sequence of evaluations, so results are bit-reproducible.
///
/// Throws ConvergenceError (carrying the partial value) when the evaluation
/// budget is exhausted, DomainError for a non-finite sample or a bad interval.
QuadratureResult integrate_1d(const RealFunction& f, double a, double b,
                              double tol = kDefaultQuadratureTol,
                              int max_evaluations = kDefaultQuadratureBudget);

/// int_0^inf f(p) dp split at the given breakpoints (unsorted, positive).
///
/// The first panel [0, b_1] uses p = b_1 q^2 so that integrable sqrt-type
/// behaviour at the origin becomes smooth; the last panel [b_k, inf) uses the
/// semi-infinite map of integrate_1d. Errors and evaluations are summed.
QuadratureResult integrate_half_line(const RealFunction& f, std::vector<double> breakpoints,
                                     double tol = kDefaultQuadratureTol,
                                     int max_evaluations = kDefaultQuadratureBudget);

/// Gamma function for x > 0. DomainError otherwise.
double gamma(double x);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int order);

/// Cell-centred radial grid on (0, r_max), graded by the map
///   r(x) = r_max * sinh(stretch * x) / sinh(stretch),  x in (0, 1).
///
/// Near the origin the map is linear, further out the spacing grows
/// geometrically. Nodes sit at x_i = (i + 1/2) / count. Weights are
/// 4 pi r_i^2 r'(x_i) / count, so that sum_i w_i f(r_i) is the midpoint rule
/// for 4 pi int r^2 f(r) dr in the x variable. For integrands that extend
/// evenly to r < 0 the midpoint rule keeps its high order at the origin.
///
/// Dilating a grid (`scaled`) changes only r_max, which keeps every
/// discrete integral exactly covariant under r -> r / lambda.
class RadialGrid {
 public:
  static constexpr double kDefaultTolerance = 1e-8;

  RadialGrid(std::size_t count, double r_max, double stretch = 4.0,
             double tolerance = kDefaultTolerance);

  std::size_t size() const noexcept { return nodes_.size(); }
  double r_max() const noexcept { return r_max_; }
  double stretch() const noexcept { return stretch_; }
  double tolerance() const noexcept { return tolerance_; }
  /// Cell width in the computational variable x.
  double cell_width() const noexcept { return 1.0 / static_cast<double>(size()); }

  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

  /// r(x) and dr/dx of the grid map.
  double radius_at(double x) const;
  double jacobian_at(double x) const;

  /// Same grid with every radius divided by lambda.
  RadialGrid scaled(double lambda) const;

  bool operator==(const RadialGrid& other) const = default;

 private:
  double r_max_;
  double stretch_;
  double tolerance_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// sum_i w_i f(r_i). DomainError names the first node where f is not finite.
double integrate_radial(const RealFunction& f, const RadialGrid& grid);
/// Same sum for values already tabulated on the grid nodes.
double integrate_radial(std::span<const double> values, const RadialGrid& grid);

/// Least-squares fit of log y = intercept + slope * log x.
struct PowerLawFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};
PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y);

}  // namespace dysonlab
