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

#include "dysonlab/bogolubov.hpp"

#include <cmath>
#include <sstream>

#include "dysonlab/errors.hpp"
#include "dysonlab/lanczos.hpp"
#include "dysonlab/numerics.hpp"

namespace dysonlab::bogolubov {

void BogolubovModel::validate() const {
  if (!(t >= 0.0) || !(g_plus >= 0.0) || !(g_minus >= 0.0)) {
    throw DomainError("BogolubovModel: t, g_plus, g_minus must be >= 0");
  }
}

double closed_form_bound(const BogolubovModel& model) {
  model.validate();
  const double g = model.g_plus + model.g_minus;
  const double a = model.t + g;
  // a - sqrt(a^2 - g^2) = g^2 / (a + sqrt(a^2 - g^2)), and a^2 - g^2 = t (t + 2g).
  if (a == 0.0) return 0.0;
  return -g * g / (a + std::sqrt(model.t * (model.t + 2.0 * g)));
}

TruncatedFockOperator::TruncatedFockOperator(int n_max, Eigen::SparseMatrix<double> matrix)
    : n_max_(n_max), matrix_(std::move(matrix)) {}

std::size_t TruncatedFockOperator::index(const std::array<int, 4>& n) const {
  const std::size_t b = static_cast<std::size_t>(n_max_) + 1;
  return n[0] + b * (n[1] + b * (n[2] + b * n[3]));
}

std::array<int, 4> TruncatedFockOperator::occupation(std::size_t index) const {
  const std::size_t b = static_cast<std::size_t>(n_max_) + 1;
  std::array<int, 4> n{};
  for (int& k : n) {
    k = static_cast<int>(index % b);
    index /= b;
  }
  return n;
}

double TruncatedFockOperator::asymmetry() const {
  const Eigen::SparseMatrix<double> diff = Eigen::SparseMatrix<double>(matrix_.transpose()) - matrix_;
  double worst = 0.0;
  for (int k = 0; k < diff.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(diff, k); it; ++it) {
      worst = std::max(worst, std::abs(it.value()));
    }
  }
  return worst;
}

TruncatedFockOperator build_hamiltonian(const BogolubovModel& model, int n_max,
                                        std::size_t dimension_cap) {
  model.validate();
  if (n_max < 1) throw DomainError("build_hamiltonian: n_max must be >= 1");
  const std::size_t b = static_cast<std::size_t>(n_max) + 1;
  const std::size_t dim = b * b * b * b;
  if (dim > dimension_cap) {
    std::ostringstream msg;
    msg << "build_hamiltonian: dimension " << dim << " exceeds cap " << dimension_cap;
    throw ResourceError(msg.str());
  }

  TruncatedFockOperator shape(n_max, Eigen::SparseMatrix<double>(0, 0));
  // Coupling sqrt(g_z g_z') z z' for charge signs z, z' (index 0 is +, 1 is -).
  const std::array<double, 2> g = {model.g_plus, model.g_minus};
  const std::array<double, 2> sign = {1.0, -1.0};
  auto coupling = [&](int z, int zp) { return std::sqrt(g[z] * g[zp]) * sign[z] * sign[zp]; };
  // Mode index for momentum sign tau (0 is +, 1 is -) and charge z.
  auto mode = [](int tau, int z) { return 2 * tau + z; };

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(dim * 12);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::array<int, 4> n = shape.occupation(col);
    double diagonal = model.t * (n[0] + n[1] + n[2] + n[3]);
    for (int z = 0; z < 2; ++z) {
      for (int zp = 0; zp < 2; ++zp) {
        const double c = coupling(z, zp);
        if (c == 0.0) continue;
        // b*_{tau z} b_{tau z'} for both momentum signs.
        for (int tau = 0; tau < 2; ++tau) {
          const int create = mode(tau, z);
          const int destroy = mode(tau, zp);
          if (create == destroy) {
            diagonal += c * n[create];
            continue;
          }
          if (n[destroy] == 0 || n[create] == n_max) continue;
          std::array<int, 4> m = n;
          const double amp = std::sqrt(static_cast<double>(n[destroy])) *
                             std::sqrt(static_cast<double>(n[create] + 1));
          m[destroy] -= 1;
          m[create] += 1;
          triplets.emplace_back(static_cast<int>(shape.index(m)), static_cast<int>(col), c * amp);
        }
        // b*_{+ z} b*_{- z'} and its adjoint b_{+ z} b_{- z'}.
        const int plus = mode(0, z);
        const int minus = mode(1, zp);
        if (n[plus] < n_max && n[minus] < n_max) {
          std::array<int, 4> m = n;
          const double amp = std::sqrt(static_cast<double>(n[plus] + 1)) *
                             std::sqrt(static_cast<double>(n[minus] + 1));
          m[plus] += 1;
          m[minus] += 1;
          triplets.emplace_back(static_cast<int>(shape.index(m)), static_cast<int>(col), c * amp);
        }
        if (n[plus] > 0 && n[minus] > 0) {
          std::array<int, 4> m = n;
          const double amp = std::sqrt(static_cast<double>(n[plus])) *
                             std::sqrt(static_cast<double>(n[minus]));
          m[plus] -= 1;
          m[minus] -= 1;
          triplets.emplace_back(static_cast<int>(shape.index(m)), static_cast<int>(col), c * amp);
        }
      }
    }
    if (diagonal != 0.0) triplets.emplace_back(static_cast<int>(col), static_cast<int>(col), diagonal);
  }
  Eigen::SparseMatrix<double> h(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  h.setFromTriplets(triplets.begin(), triplets.end());
  h.makeCompressed();
  return TruncatedFockOperator(n_max, std::move(h));
}

double ground_energy(const TruncatedFockOperator& op) {
  if (op.dimension() <= kDenseEigenLimit) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op.dense(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw ConvergenceError("ground_energy: dense eigensolver failed", 0.0, kInf);
    }
    return solver.eigenvalues()[0];
  }
  LanczosOptions options;
  options.tol = 1e-10;
  return lowest_eigenpair(op.matrix(), options).value;
}

std::vector<SharpnessRow> sharpness_study(const BogolubovModel& model, std::span<const int> n_max_list) {
  if (n_max_list.empty()) throw DomainError("sharpness_study: empty cut-off list");
  for (std::size_t i = 1; i < n_max_list.size(); ++i) {
    if (n_max_list[i] <= n_max_list[i - 1]) throw DomainError("sharpness_study: cut-offs must increase");
  }
  const double bound = closed_form_bound(model);
  std::vector<SharpnessRow> rows;
  for (int n_max : n_max_list) {
    const double energy = ground_energy(build_hamiltonian(model, n_max));
    SharpnessRow row{n_max, energy, bound, energy - bound};
    if (row.gap < -1e-9) {
      std::ostringstream msg;
      msg << "sharpness_study: ground energy " << energy << " below the bound " << bound
          << " at n_max = " << n_max;
      throw ConsistencyError(msg.str());
    }
    if (!rows.empty() && row.gap > rows.back().gap + 1e-9) {
      std::ostringstream msg;
      msg << "sharpness_study: gap grew from " << rows.back().gap << " to " << row.gap;
      throw ConsistencyError(msg.str());
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dysonlab::bogolubov
