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
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace dysonlab::bogolubov {

/// Couplings of the four-mode quadratic Hamiltonian: kinetic energy `t` of the
/// +/- momentum modes and interaction strengths of the two charge species.
struct BogolubovModel {
  double t = 0.0;
  double g_plus = 0.0;
  double g_minus = 0.0;

  void validate() const;
};

/// -(t + g) + sqrt((t + g)^2 - g^2) with g = g_plus + g_minus.
double closed_form_bound(const BogolubovModel& model);

/// Mode labels (momentum sign, charge sign) in basis order.
enum class Mode : int { PlusPlus = 0, PlusMinus = 1, MinusPlus = 2, MinusMinus = 3 };

/// The quadratic form restricted to occupations n_mode <= n_max, i.e. P H P
/// for P the projector onto the truncated occupation basis. Basis index of
/// |n0 n1 n2 n3> is n0 + b n1 + b^2 n2 + b^3 n3 with b = n_max + 1.
class TruncatedFockOperator {
 public:
  TruncatedFockOperator(int n_max, Eigen::SparseMatrix<double> matrix);

  int n_max() const noexcept { return n_max_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  const Eigen::SparseMatrix<double>& matrix() const noexcept { return matrix_; }
  Eigen::MatrixXd dense() const { return Eigen::MatrixXd(matrix_); }

  std::size_t index(const std::array<int, 4>& occupation) const;
  std::array<int, 4> occupation(std::size_t index) const;

  /// max |A_ij - A_ji|
  double asymmetry() const;

 private:
  int n_max_;
  Eigen::SparseMatrix<double> matrix_;
};

inline constexpr std::size_t kDefaultDimensionCap = 100000;
/// Dense eigensolver up to this dimension, restarted Lanczos above it.
inline constexpr std::size_t kDenseEigenLimit = 700;

/// Throws ResourceError when (n_max + 1)^4 exceeds `dimension_cap`.
TruncatedFockOperator build_hamiltonian(const BogolubovModel& model, int n_max,
                                        std::size_t dimension_cap = kDefaultDimensionCap);

/// Smallest eigenvalue to 1e-10 absolute.
double ground_energy(const TruncatedFockOperator& op);

struct SharpnessRow {
  int n_max = 0;
  double energy = 0.0;
  double bound = 0.0;
  double gap = 0.0;  // energy - bound
};

/// Ground energies over an increasing list of cut-offs. Throws
/// ConsistencyError if a gap is negative beyond 1e-9 or grows with n_max.
std::vector<SharpnessRow> sharpness_study(const BogolubovModel& model, std::span<const int> n_max_list);

}  // namespace dysonlab::bogolubov
