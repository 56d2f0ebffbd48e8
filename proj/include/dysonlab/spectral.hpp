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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dysonlab/correlation.hpp"

namespace dysonlab::spectral {

using correlation::Vec3;

enum class PotentialKind { GaussianWell, SquareWell, MultiNucleus };

std::string_view name(PotentialKind kind);
PotentialKind potential_kind_from_name(std::string_view name);

/// Attractive one-body potential.
///   gaussian-well   V(r) = -depth exp(-r^2 / range^2)
///   square-well     V(r) = -depth for r < range
///   multi-nucleus   V(x) = -depth sum_k exp(-|x - c_k|^2 / range^2)
struct PotentialSpec {
  PotentialKind kind = PotentialKind::GaussianWell;
  double depth = 1.0;
  double range = 1.0;
  std::vector<Vec3> centers;  // multi-nucleus only

  void validate() const;
  bool radial() const noexcept { return kind != PotentialKind::MultiNucleus; }
  /// Radial profile; DomainError for the multi-nucleus family.
  double operator()(double r) const;
  double operator()(const Vec3& x) const;
  /// lambda^2 V(lambda x)
  PotentialSpec scaled(double lambda) const;
};

/// Radial runs: `count` interior points of a uniform grid on (0, r_max) with
/// u(0) = u(r_max) = 0, u = r R. 3D runs: `count` interior points per axis of a
/// cube with Dirichlet walls. r_max = 0 picks a family-dependent default.
struct Discretization {
  std::size_t count = 3000;
  double r_max = 0.0;
  int l_max = 400;
  std::size_t count_3d = 15;  // coarsest grid per axis for the multi-nucleus family

  Discretization scaled(double lambda) const;
};

/// int |V|_-^{5/2} d^3x (closed forms for the radial families).
double v_integral(const PotentialSpec& v, const Discretization& grid = {});

struct GroundState {
  double energy = 0.0;      // extrapolated, 0 without negative spectrum
  double coarse = 0.0;      // finest-but-one raw grid value
  double fine = 0.0;        // finest raw grid value
  double refinement = 0.0;  // change between the last two extrapolants
};

/// Lowest eigenvalue of -Delta/2 + V (or 0 if there is no negative one),
/// Richardson-extrapolated in h. AccuracyError if one refinement moves the
/// answer by more than 1e-4 max(1, |E|).
GroundState ground_state(const PotentialSpec& v, const Discretization& grid = {});
double ground_state_energy(const PotentialSpec& v, const Discretization& grid = {});

struct Level {
  int l;
  int degeneracy;  // 2 l + 1
  double energy;
};

struct SpectrumResult {
  std::vector<Level> levels;  // sorted by energy
  double neg_sum = 0.0;       // sum of degeneracy * energy
  double v_integral = 0.0;
  int l_max = 0;              // highest channel examined
  std::string grid_spec;
};

/// All negative eigenvalues over angular channels l = 0, 1, ... until a whole
/// channel contributes nothing (radial families only). AccuracyError if
/// grid.l_max is reached first.
SpectrumResult negative_sum(const PotentialSpec& v, const Discretization& grid = {});

/// -2^{5/2} / (30 pi^2)
double semiclassical_ratio();

struct StabilityBound {
  double v_integral = 0.0;  // int |V|_-^{5/2}
  double lt_term = 0.0;     // -C_LT q int |V|_-^{5/2}
  double r_term = 0.0;      // -N_e (1 + 2 z_max) / R
  double total = 0.0;
  double per_electron = 0.0;
  double r = 0.0;
};

/// V(x) = -(1 + 2 z_max) (1 / D(x) - 1 / R)_+ with D the distance to the
/// nearest nucleus, lower bound -C_LT q int |V|^{5/2} - N_e (1 + 2 z_max) / R.
/// Default R = 1 / (1 + 2 z_max). Charges must be positive.
StabilityBound stability_bound(const std::vector<Vec3>& nuclei, const std::vector<double>& charges, int q,
                               double c_lt, int n_electrons, std::optional<double> r = std::nullopt);

/// int_{|x|<R} (1/|x| - 1/R)^{5/2} d^3x = (5 pi^2 / 4) sqrt(R).
double isolated_nucleus_integral(double r);

}  // namespace dysonlab::spectral
