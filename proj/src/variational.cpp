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

#include "dysonlab/variational.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "dysonlab/errors.hpp"
#include "dysonlab/foldy.hpp"

namespace dysonlab::variational {

namespace {

using SparseMatrix = Eigen::SparseMatrix<double>;

// Face-derivative operator D (faces x_m = m h, m = 1..n) and face weights c_m,
// so that T(phi) = sum_m c_m (D phi)_m^2.
struct KineticStencil {
  SparseMatrix derivative;
  Eigen::VectorXd face_weights;
};

KineticStencil kinetic_stencil(const RadialGrid& grid) {
  const int n = static_cast<int>(grid.size());
  const double h = grid.cell_width();
  constexpr std::array<double, 4> coeff = {1.0, -27.0, 27.0, -1.0};
  std::vector<Eigen::Triplet<double>> triplets;
  for (int m = 1; m <= n; ++m) {
    for (int k = 0; k < 4; ++k) {
      int cell = m - 2 + k;
      double sign = 1.0;
      if (cell < 0) {
        cell = -cell - 1;
      } else if (cell >= n) {
        cell = 2 * n - 1 - cell;
        sign = -1.0;
      }
      triplets.emplace_back(m - 1, cell, sign * coeff[k] / (24.0 * h));
    }
  }
  KineticStencil s{SparseMatrix(n, n), Eigen::VectorXd(n)};
  s.derivative.setFromTriplets(triplets.begin(), triplets.end());
  for (int m = 1; m <= n; ++m) {
    const double x = m * h;
    const double r = grid.radius_at(x);
    s.face_weights[m - 1] = 2.0 * kPi * h * r * r / grid.jacobian_at(x);
  }
  s.face_weights[n - 1] *= 0.5;
  return s;
}

Eigen::Map<const Eigen::VectorXd> as_vector(const std::vector<double>& v) {
  return {v.data(), static_cast<Eigen::Index>(v.size())};
}

double potential_sum(const std::vector<double>& phi, const RadialGrid& grid) {
  const auto w = grid.weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) sum += w[i] * std::pow(phi[i], 2.5);
  return sum;
}

}  // namespace

RadialProfile::RadialProfile(RadialGrid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) throw PreconditionError("RadialProfile: value count differs from grid size");
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) throw PreconditionError("RadialProfile: values must be finite and >= 0");
  }
}

double RadialProfile::norm_squared() const {
  const auto w = grid_.weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) sum += w[i] * values_[i] * values_[i];
  return sum;
}

RadialProfile RadialProfile::normalized() const {
  const double n2 = norm_squared();
  if (!(n2 > 0.0)) throw PreconditionError("RadialProfile: cannot normalize the zero profile");
  std::vector<double> v = values_;
  const double scale = 1.0 / std::sqrt(n2);
  for (double& x : v) x *= scale;
  return RadialProfile(grid_, std::move(v));
}

double kinetic_energy(const RadialProfile& profile) {
  const KineticStencil s = kinetic_stencil(profile.grid());
  const Eigen::VectorXd d = s.derivative * as_vector(profile.values());
  return s.face_weights.dot(d.cwiseProduct(d));
}

FunctionalEnergy functional_energy(const RadialProfile& profile, std::optional<double> j) {
  const double n2 = profile.norm_squared();
  if (std::abs(n2 - 1.0) > 1e-6) {
    std::ostringstream msg;
    msg << "functional_energy: profile is not normalized (norm^2 = " << n2 << ")";
    throw PreconditionError(msg.str());
  }
  const double jj = j.value_or(foldy::foldy_constant().value);
  FunctionalEnergy e;
  e.kinetic = kinetic_energy(profile);
  e.potential = jj * potential_sum(profile.values(), profile.grid());
  e.energy = e.kinetic - e.potential;
  return e;
}

RadialProfile rescale(const RadialProfile& profile, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("rescale: lambda must be positive");
  std::vector<double> v = profile.values();
  const double amp = std::pow(lambda, 1.5);
  for (double& x : v) x *= amp;
  return RadialProfile(profile.grid().scaled(lambda), std::move(v));
}

double optimal_dilation(double kinetic, double potential) {
  if (!(kinetic > 0.0) || !(potential > 0.0)) throw DomainError("optimal_dilation: T and V must be positive");
  return std::pow(3.0 * potential / (8.0 * kinetic), 0.8);
}

RadialProfile gaussian_profile(const RadialGrid& grid, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("gaussian_profile: lambda must be positive");
  std::vector<double> v(grid.size());
  const auto r = grid.nodes();
  const double amp = std::pow(kPi, -0.75) * std::pow(lambda, 1.5);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double lr = lambda * r[i];
    v[i] = amp * std::exp(-0.5 * lr * lr);
  }
  return RadialProfile(grid, std::move(v)).normalized();
}

RadialProfile default_initial_profile(const RadialGrid& grid) {
  // Continuum Gaussian: T = 3/4, V = J pi^{-3/8} (4/5)^{3/2}.
  const double potential = foldy::foldy_constant().value * std::pow(kPi, -0.375) * std::pow(0.8, 1.5);
  return gaussian_profile(grid, optimal_dilation(0.75, potential));
}

MinimizationResult minimize(const RadialProfile& init, double step, double tol, int max_iter,
                            std::optional<double> j) {
  if (!(step > 0.0) || !(tol > 0.0)) throw DomainError("minimize: step and tol must be positive");
  if (max_iter < 1) throw DomainError("minimize: max_iter must be >= 1");
  const double jj = j.value_or(foldy::foldy_constant().value);
  const RadialGrid& grid = init.grid();
  const int n = static_cast<int>(grid.size());
  const KineticStencil stencil = kinetic_stencil(grid);
  // Hessian of T: 2 D^T C D.
  const SparseMatrix hessian =
      SparseMatrix(2.0 * SparseMatrix(stencil.derivative.transpose()) * stencil.face_weights.asDiagonal() *
                   stencil.derivative);
  const Eigen::Map<const Eigen::VectorXd> w(grid.weights().data(), n);

  auto evaluate = [&](const Eigen::VectorXd& phi) {
    const Eigen::VectorXd d = stencil.derivative * phi;
    FunctionalEnergy e;
    e.kinetic = stencil.face_weights.dot(d.cwiseProduct(d));
    double v = 0.0;
    for (int i = 0; i < n; ++i) v += w[i] * std::pow(phi[i], 2.5);
    e.potential = jj * v;
    e.energy = e.kinetic - e.potential;
    return e;
  };
  auto project = [&](Eigen::VectorXd phi) {
    phi = phi.cwiseMax(0.0);
    const double n2 = w.dot(phi.cwiseProduct(phi));
    if (!(n2 > 0.0)) throw ConvergenceError("minimize: iterate collapsed to zero", 0.0, kInf);
    return Eigen::VectorXd(phi / std::sqrt(n2));
  };

  Eigen::VectorXd phi = project(Eigen::Map<const Eigen::VectorXd>(init.values().data(), n));
  if (std::abs(init.norm_squared() - 1.0) > 1e-6) {
    throw PreconditionError("minimize: initial profile is not normalized");
  }
  FunctionalEnergy current = evaluate(phi);
  MinimizationResult result{init, 0.0, 0.0, 0.0, 0, 0.0, 0.0, false, {current.energy}};

  const double dt_max = 1e4 * step;
  const double dt_min = 1e-14 * step;
  double dt = step;
  Eigen::SimplicialLDLT<SparseMatrix> solver;
  SparseMatrix mass(n, n);
  {
    std::vector<Eigen::Triplet<double>> diag;
    for (int i = 0; i < n; ++i) diag.emplace_back(i, i, w[i]);
    mass.setFromTriplets(diag.begin(), diag.end());
  }

  int iter = 0;
  for (; iter < max_iter; ++iter) {
    Eigen::VectorXd grad = hessian * phi;
    for (int i = 0; i < n; ++i) grad[i] -= 2.5 * jj * w[i] * std::pow(phi[i], 1.5);
    const double mu = phi.dot(grad) / w.dot(phi.cwiseProduct(phi));
    const Eigen::VectorXd residual = grad - mu * w.cwiseProduct(phi);

    bool accepted = false;
    FunctionalEnergy trial_energy;
    Eigen::VectorXd trial;
    while (dt >= dt_min) {
      solver.compute(SparseMatrix(mass + dt * hessian));
      if (solver.info() != Eigen::Success) throw ConvergenceError("minimize: preconditioner failed", current.energy, kInf);
      const Eigen::VectorXd direction = solver.solve(residual);
      trial = project(phi - dt * direction);
      trial_energy = evaluate(trial);
      if (trial_energy.energy <= current.energy) {
        accepted = true;
        break;
      }
      dt *= 0.5;
    }
    if (!accepted) {
      // No descent at any step size: stationary to working precision.
      result.converged = true;
      break;
    }
    const double decrease = current.energy - trial_energy.energy;
    phi = trial;
    current = trial_energy;
    result.energy_history.push_back(current.energy);
    dt = std::min(2.0 * dt, dt_max);
    if (decrease < tol && iter >= 2) {
      ++iter;
      result.converged = true;
      break;
    }
  }

  result.iterations = iter;
  result.profile = RadialProfile(grid, std::vector<double>(phi.data(), phi.data() + n));
  result.energy = current.energy;
  result.kinetic = current.kinetic;
  result.potential = current.potential;
  result.virial_residual = std::abs(8.0 * current.kinetic - 3.0 * current.potential);
  result.chemical_potential = current.kinetic - 1.25 * current.potential;
  return result;
}

double asymptotic_energy(double n_particles, double e_star) {
  if (!(n_particles >= 1.0)) throw DomainError("asymptotic_energy: N must be >= 1");
  return std::pow(n_particles, 1.4) * e_star;
}

}  // namespace dysonlab::variational
