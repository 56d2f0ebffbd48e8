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

#include "dysonlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Sparse>

#include "dysonlab/errors.hpp"
#include "dysonlab/lanczos.hpp"
#include "dysonlab/numerics.hpp"

namespace dysonlab::spectral {

namespace {

constexpr double kRefinementTol = 1e-4;

double default_r_max(const PotentialSpec& v) {
  if (v.kind == PotentialKind::MultiNucleus) return 4.0 * v.range;  // margin around the centres
  return 8.0 * v.range;
}

double effective_r_max(const PotentialSpec& v, const Discretization& grid) {
  return grid.r_max > 0.0 ? grid.r_max : default_r_max(v);
}

// Eigenvalues below zero of the channel-l radial operator with n interior points.
Eigen::VectorXd channel_eigenvalues(const PotentialSpec& v, int l, std::size_t n, double r_max) {
  double h = r_max / static_cast<double>(n + 1);
  if (v.kind == PotentialKind::SquareWell) {
    // Snap the spacing so the well edge is a node on every refined grid.
    h = v.range / std::max(1.0, std::round(v.range / h));
  }
  const double kinetic = 1.0 / (h * h);
  const double centrifugal = 0.5 * l * (l + 1.0);
  Eigen::VectorXd diag(n), off(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = h * static_cast<double>(i + 1);
    double potential = v(r);
    // A node sitting on the square-well edge takes the mean of both sides.
    if (v.kind == PotentialKind::SquareWell && std::abs(r - v.range) < 1e-9 * h) potential = -0.5 * v.depth;
    diag[i] = kinetic + centrifugal / (r * r) + potential;
  }
  off.setConstant(-0.5 * kinetic);
  return tridiagonal_eigenvalues_below(diag, off, 0.0);
}

double radial_lowest(const PotentialSpec& v, std::size_t n, double r_max) {
  const Eigen::VectorXd below = channel_eigenvalues(v, 0, n, r_max);
  return below.size() > 0 ? below.minCoeff() : 0.0;
}

struct Box {
  Vec3 lo;
  double h;
  std::size_t n;
};

Box make_box(const PotentialSpec& v, std::size_t n, double margin) {
  Vec3 lo = v.centers.front(), hi = v.centers.front();
  for (const Vec3& c : v.centers) {
    for (int k = 0; k < 3; ++k) {
      lo[k] = std::min(lo[k], c[k]);
      hi[k] = std::max(hi[k], c[k]);
    }
  }
  double side = 0.0;
  for (int k = 0; k < 3; ++k) side = std::max(side, hi[k] - lo[k]);
  side += 2.0 * margin;
  Box box{{}, side / static_cast<double>(n + 1), n};
  for (int k = 0; k < 3; ++k) box.lo[k] = 0.5 * (lo[k] + hi[k]) - 0.5 * side;
  return box;
}

double cube_lowest(const PotentialSpec& v, std::size_t n, double margin) {
  const Box box = make_box(v, n, margin);
  const auto idx = [n](std::size_t i, std::size_t j, std::size_t k) { return static_cast<int>((i * n + j) * n + k); };
  // Fourth-order stencil (-1, 16, -30, 16, -1) / 12h^2 per axis; the wall
  // ghost beyond the first interior point is its odd reflection.
  const double c1 = -16.0 / (24.0 * box.h * box.h);
  const double c2 = 1.0 / (24.0 * box.h * box.h);
  const double c0 = 30.0 / (24.0 * box.h * box.h);
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(13 * n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vec3 x{box.lo[0] + box.h * (i + 1.0), box.lo[1] + box.h * (j + 1.0), box.lo[2] + box.h * (k + 1.0)};
        const int row = idx(i, j, k);
        double diag = 3.0 * c0 + v(x);
        const std::size_t pos[3] = {i, j, k};
        for (int axis = 0; axis < 3; ++axis) {
          const auto at = [&](std::size_t m) {
            std::size_t p[3] = {pos[0], pos[1], pos[2]};
            p[axis] = m;
            return idx(p[0], p[1], p[2]);
          };
          const std::size_t a = pos[axis];
          if (a >= 1) entries.emplace_back(row, at(a - 1), c1);
          if (a + 1 < n) entries.emplace_back(row, at(a + 1), c1);
          if (a >= 2) entries.emplace_back(row, at(a - 2), c2);
          if (a + 2 < n) entries.emplace_back(row, at(a + 2), c2);
          if (a == 0) diag -= c2;
          if (a + 1 == n) diag -= c2;
        }
        entries.emplace_back(row, row, diag);
      }
    }
  }
  const int dim = static_cast<int>(n * n * n);
  Eigen::SparseMatrix<double> hamiltonian(dim, dim);
  hamiltonian.setFromTriplets(entries.begin(), entries.end());
  LanczosOptions options;
  options.krylov_dim = 40;
  options.tol = 1e-8;
  return std::min(0.0, lowest_eigenpair(hamiltonian, options).value);
}

// int_0^{rho} r^2 (1/r - 1/R)^{5/2} dr = sqrt(R) * 2 int_0^{sqrt(rho/R)} (1 - t^2)^{5/2} dt
double truncated_radial(double rho, double R) {
  const double theta = std::asin(std::min(1.0, std::sqrt(rho / R)));
  const double antiderivative = 5.0 * theta / 16.0 + 15.0 * std::sin(2.0 * theta) / 64.0 +
                                3.0 * std::sin(4.0 * theta) / 64.0 + std::sin(6.0 * theta) / 192.0;
  return std::sqrt(R) * 2.0 * antiderivative;
}

}  // namespace

std::string_view name(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::GaussianWell:
      return "gaussian-well";
    case PotentialKind::SquareWell:
      return "square-well";
    case PotentialKind::MultiNucleus:
      return "multi-nucleus-regularized";
  }
  return "gaussian-well";
}

PotentialKind potential_kind_from_name(std::string_view n) {
  for (PotentialKind kind : {PotentialKind::GaussianWell, PotentialKind::SquareWell, PotentialKind::MultiNucleus}) {
    if (name(kind) == n) return kind;
  }
  throw DomainError("unknown potential family '" + std::string(n) + "'");
}

void PotentialSpec::validate() const {
  if (!(depth >= 0.0) || !std::isfinite(depth)) throw DomainError("PotentialSpec: depth must be finite and >= 0");
  if (!(range > 0.0) || !std::isfinite(range)) throw DomainError("PotentialSpec: range must be positive");
  if (kind == PotentialKind::MultiNucleus && centers.empty()) {
    throw DomainError("PotentialSpec: multi-nucleus family needs at least one centre");
  }
}

double PotentialSpec::operator()(double r) const {
  switch (kind) {
    case PotentialKind::GaussianWell:
      return -depth * std::exp(-(r * r) / (range * range));
    case PotentialKind::SquareWell:
      return r < range ? -depth : 0.0;
    case PotentialKind::MultiNucleus:
      break;
  }
  throw DomainError("PotentialSpec: multi-nucleus potential is not radial");
}

double PotentialSpec::operator()(const Vec3& x) const {
  if (kind != PotentialKind::MultiNucleus) return (*this)(std::hypot(x[0], x[1], x[2]));
  double sum = 0.0;
  for (const Vec3& c : centers) {
    const double d = correlation::distance(x, c);
    sum += std::exp(-(d * d) / (range * range));
  }
  return -depth * sum;
}

PotentialSpec PotentialSpec::scaled(double lambda) const {
  if (!(lambda > 0.0)) throw DomainError("PotentialSpec::scaled: lambda must be positive");
  PotentialSpec out = *this;
  out.depth *= lambda * lambda;
  out.range /= lambda;
  for (Vec3& c : out.centers) {
    for (double& coord : c) coord /= lambda;
  }
  return out;
}

Discretization Discretization::scaled(double lambda) const {
  Discretization out = *this;
  out.r_max /= lambda;
  return out;
}

double v_integral(const PotentialSpec& v, const Discretization& grid) {
  v.validate();
  const double d52 = std::pow(v.depth, 2.5);
  switch (v.kind) {
    case PotentialKind::GaussianWell:
      return d52 * std::pow(2.0 * kPi * v.range * v.range / 5.0, 1.5);
    case PotentialKind::SquareWell:
      return d52 * 4.0 * kPi * v.range * v.range * v.range / 3.0;
    case PotentialKind::MultiNucleus:
      break;
  }
  // Smooth and negligible at the walls: the plain lattice sum is spectrally accurate.
  const double spacing = v.range / 6.0;
  const double margin = effective_r_max(v, grid);
  Box box = make_box(v, 1, margin);
  const double side = 2.0 * box.h;
  const auto n = static_cast<std::size_t>(std::ceil(side / spacing));
  box.h = side / static_cast<double>(n);
  double sum = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t k = 0; k <= n; ++k) {
        const Vec3 x{box.lo[0] + box.h * i, box.lo[1] + box.h * j, box.lo[2] + box.h * k};
        sum += std::pow(-v(x), 2.5);
      }
    }
  }
  return sum * box.h * box.h * box.h;
}

GroundState ground_state(const PotentialSpec& v, const Discretization& grid) {
  v.validate();
  const double r_max = effective_r_max(v, grid);
  double raw[3];
  std::size_t n = v.radial() ? grid.count : grid.count_3d;
  const double gain = v.radial() ? 4.0 : 16.0;  // 2^order of the stencil
  if (n < 3) throw DomainError("ground_state: need at least 3 grid points");
  for (double& e : raw) {
    e = v.radial() ? radial_lowest(v, n, r_max) : cube_lowest(v, n, r_max);
    n = 2 * n + 1;  // halves h
  }
  GroundState out;
  out.coarse = raw[1];
  out.fine = raw[2];
  const double first = (gain * raw[1] - raw[0]) / (gain - 1.0);
  const double second = (gain * raw[2] - raw[1]) / (gain - 1.0);
  out.energy = std::min(0.0, second);
  out.refinement = std::abs(second - first);
  if (out.refinement > kRefinementTol * std::max(1.0, std::abs(second))) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "ground_state: grid refinement moved the energy by " << out.refinement << " (values " << raw[0] << ", "
        << raw[1] << ", " << raw[2] << "); refine the discretization";
    throw AccuracyError(msg.str());
  }
  return out;
}

double ground_state_energy(const PotentialSpec& v, const Discretization& grid) { return ground_state(v, grid).energy; }

SpectrumResult negative_sum(const PotentialSpec& v, const Discretization& grid) {
  v.validate();
  if (!v.radial()) throw PreconditionError("negative_sum: only radial potential families are supported");
  if (grid.count < 3) throw DomainError("negative_sum: need at least 3 grid points");
  const double r_max = effective_r_max(v, grid);
  SpectrumResult out;
  out.v_integral = v_integral(v, grid);
  bool closed = false;
  for (int l = 0; l <= grid.l_max; ++l) {
    out.l_max = l;
    const Eigen::VectorXd below = channel_eigenvalues(v, l, grid.count, r_max);
    if (below.size() == 0) {
      closed = true;
      break;
    }
    for (double e : below) {
      out.levels.push_back({l, 2 * l + 1, e});
      out.neg_sum += (2.0 * l + 1.0) * e;
    }
  }
  if (!closed) {
    throw AccuracyError("negative_sum: channel l_max = " + std::to_string(grid.l_max) +
                        " still binds; raise l_max");
  }
  std::stable_sort(out.levels.begin(), out.levels.end(),
                   [](const Level& a, const Level& b) { return a.energy < b.energy; });
  std::ostringstream spec;
  spec.precision(17);
  spec << "radial-fd count=" << grid.count << " r_max=" << r_max;
  out.grid_spec = spec.str();
  return out;
}

double semiclassical_ratio() { return -std::pow(2.0, 2.5) / (30.0 * kPi * kPi); }

double isolated_nucleus_integral(double r) {
  if (!(r > 0.0)) throw DomainError("isolated_nucleus_integral: R must be positive");
  return 1.25 * kPi * kPi * std::sqrt(r);
}

StabilityBound stability_bound(const std::vector<Vec3>& nuclei, const std::vector<double>& charges, int q,
                               double c_lt, int n_electrons, std::optional<double> r) {
  if (nuclei.size() != charges.size()) throw PreconditionError("stability_bound: one charge per nucleus");
  if (q < 1) throw DomainError("stability_bound: q must be >= 1");
  if (!(c_lt > 0.0)) throw DomainError("stability_bound: C_LT must be positive");
  if (n_electrons < 1) throw DomainError("stability_bound: need at least one electron");
  double z_max = 0.0;
  for (double z : charges) {
    if (!(z > 0.0)) throw PreconditionError("stability_bound: nuclear charges must be positive");
    z_max = std::max(z_max, z);
  }
  const double strength = 1.0 + 2.0 * z_max;
  const double radius = r.value_or(1.0 / strength);
  if (!(radius > 0.0)) throw DomainError("stability_bound: R must be positive");
  for (std::size_t i = 0; i < nuclei.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (correlation::distance(nuclei[i], nuclei[j]) < 1e-12) throw DomainError("stability_bound: coincident nuclei");
    }
  }

  // Each nucleus owns its Voronoi cell; along a ray the cell ends at the
  // nearest bisecting plane, so the radial integral is available in closed form.
  const GaussRule polar = gauss_legendre(48);
  constexpr int kAzimuthal = 96;
  double integral = 0.0;
  for (std::size_t k = 0; k < nuclei.size(); ++k) {
    double cell = 0.0;
    for (std::size_t a = 0; a < polar.nodes.size(); ++a) {
      const double ct = polar.nodes[a];
      const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      for (int b = 0; b < kAzimuthal; ++b) {
        const double phi = 2.0 * kPi * (b + 0.5) / kAzimuthal;
        const Vec3 dir{st * std::cos(phi), st * std::sin(phi), ct};
        double reach = radius;
        for (std::size_t j = 0; j < nuclei.size(); ++j) {
          if (j == k) continue;
          double along = 0.0, d2 = 0.0;
          for (int c = 0; c < 3; ++c) {
            const double d = nuclei[j][c] - nuclei[k][c];
            along += dir[c] * d;
            d2 += d * d;
          }
          if (along > 0.0) reach = std::min(reach, 0.5 * d2 / along);
        }
        cell += polar.weights[a] * truncated_radial(reach, radius);
      }
    }
    integral += cell * 2.0 * kPi / kAzimuthal;
  }

  StabilityBound out;
  out.r = radius;
  out.v_integral = std::pow(strength, 2.5) * integral;
  out.lt_term = -c_lt * q * out.v_integral;
  out.r_term = -static_cast<double>(n_electrons) * strength / radius;
  out.total = out.lt_term + out.r_term;
  out.per_electron = out.total / n_electrons;
  return out;
}

}  // namespace dysonlab::spectral
