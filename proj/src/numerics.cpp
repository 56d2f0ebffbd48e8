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

#include "dysonlab/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "dysonlab/errors.hpp"

namespace dysonlab {

namespace {

// Kronrod 15-point extension of the 7-point Gauss rule on [-1, 1].
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
};

Panel gauss_kronrod(const RealFunction& g, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  auto sample = [&](double x) {
    const double y = g(x);
    if (!std::isfinite(y)) {
      std::ostringstream msg;
      msg << "integrand is not finite at x = " << x;
      throw DomainError(msg.str());
    }
    return y;
  };
  const double fc = sample(centre);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double pair = sample(centre - dx) + sample(centre + dx);
    kronrod += kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate_1d(const RealFunction& f, double a, double b, double tol,
                              int max_evaluations) {
  if (!(tol > 0.0)) throw DomainError("integrate_1d: tol must be positive");
  if (!std::isfinite(a)) throw DomainError("integrate_1d: lower limit must be finite");
  if (std::isnan(b) || b < a) throw DomainError("integrate_1d: need a <= b");
  if (b == a) return {0.0, 0.0, 1};

  RealFunction mapped;
  double lo = a;
  double hi = b;
  if (std::isinf(b)) {
    mapped = [&f, a](double t) {
      const double s = 1.0 - t;
      return f(a + t / s) / (s * s);
    };
    lo = 0.0;
    hi = 1.0;
  }
  const RealFunction& g = mapped ? mapped : f;

  auto by_error = [](const Panel& x, const Panel& y) { return x.error < y.error; };
  std::vector<Panel> heap;
  heap.push_back(gauss_kronrod(g, lo, hi));
  int evaluations = 15;
  double value = heap.front().value;
  double error = heap.front().error;

  while (error > tol * std::max(1.0, std::abs(value))) {
    if (evaluations + 30 > max_evaluations) {
      std::ostringstream msg;
      msg << "integrate_1d: evaluation budget " << max_evaluations
          << " exhausted, error estimate " << error;
      throw ConvergenceError(msg.str(), value, error);
    }
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      // Cannot split any further in floating point; keep the panel as is.
      heap.push_back({worst.lo, worst.hi, worst.value, 0.0});
      std::push_heap(heap.begin(), heap.end(), by_error);
      error -= worst.error;
      continue;
    }
    const Panel left = gauss_kronrod(g, worst.lo, mid);
    const Panel right = gauss_kronrod(g, mid, worst.hi);
    evaluations += 30;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_error);

    // Re-sum from scratch in a fixed order so rounding never accumulates.
    value = 0.0;
    error = 0.0;
    for (const Panel& p : heap) {
      value += p.value;
      error += p.error;
    }
  }
  return {value, error, evaluations};
}

QuadratureResult integrate_half_line(const RealFunction& f, std::vector<double> breakpoints,
                                     double tol, int max_evaluations) {
  std::erase_if(breakpoints, [](double b) { return !(b > 0.0) || !std::isfinite(b); });
  if (breakpoints.empty()) breakpoints.push_back(1.0);
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  QuadratureResult total;
  auto accumulate = [&total](const QuadratureResult& part) {
    total.value += part.value;
    total.error_estimate += part.error_estimate;
    total.evaluations += part.evaluations;
  };
  const double first = breakpoints.front();
  accumulate(integrate_1d([&f, first](double q) { return 2.0 * first * q * f(first * q * q); },
                          0.0, 1.0, tol, max_evaluations));
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    accumulate(integrate_1d(f, breakpoints[i], breakpoints[i + 1], tol, max_evaluations));
  }
  accumulate(integrate_1d(f, breakpoints.back(), kInf, tol, max_evaluations));
  return total;
}

double gamma(double x) {
  if (!(x > 0.0)) throw DomainError("gamma: argument must be positive");
  return std::tgamma(x);
}

GaussRule gauss_legendre(int order) {
  if (order < 1) throw DomainError("gauss_legendre: order must be >= 1");
  if (order == 1) return {{0.0}, {2.0}};
  const int n = order;
  GaussRule rule{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

RadialGrid::RadialGrid(std::size_t count, double r_max, double stretch, double tolerance)
    : r_max_(r_max), stretch_(stretch), tolerance_(tolerance) {
  if (count < 2) throw DomainError("RadialGrid: need at least two nodes");
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw DomainError("RadialGrid: r_max must be positive");
  if (!(stretch > 0.0)) throw DomainError("RadialGrid: stretch must be positive");
  nodes_.resize(count);
  weights_.resize(count);
  const double h = 1.0 / static_cast<double>(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = (static_cast<double>(i) + 0.5) * h;
    const double r = radius_at(x);
    nodes_[i] = r;
    weights_[i] = 4.0 * kPi * r * r * jacobian_at(x) * h;
  }
}

double RadialGrid::radius_at(double x) const {
  return r_max_ * std::sinh(stretch_ * x) / std::sinh(stretch_);
}

double RadialGrid::jacobian_at(double x) const {
  return r_max_ * stretch_ * std::cosh(stretch_ * x) / std::sinh(stretch_);
}

RadialGrid RadialGrid::scaled(double lambda) const {
  if (!(lambda > 0.0)) throw DomainError("RadialGrid::scaled: lambda must be positive");
  return RadialGrid(size(), r_max_ / lambda, stretch_, tolerance_);
}

double integrate_radial(const RealFunction& f, const RadialGrid& grid) {
  std::vector<double> values(grid.size());
  const auto nodes = grid.nodes();
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = f(nodes[i]);
    if (!std::isfinite(values[i])) {
      std::ostringstream msg;
      msg << "integrate_radial: integrand not finite at node " << i << " (r = " << nodes[i] << ")";
      throw DomainError(msg.str());
    }
  }
  return integrate_radial(values, grid);
}

double integrate_radial(std::span<const double> values, const RadialGrid& grid) {
  if (values.size() != grid.size()) throw DomainError("integrate_radial: size mismatch");
  const auto w = grid.weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) sum += w[i] * values[i];
  return sum;
}

PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("fit_power_law: need >= 2 matched points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw DomainError("fit_power_law: data must be positive");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  PowerLawFit fit;
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = std::log(y[i]) - fit.intercept - fit.slope * std::log(x[i]);
    fit.max_residual = std::max(fit.max_residual, std::abs(r));
  }
  return fit;
}

}  // namespace dysonlab
