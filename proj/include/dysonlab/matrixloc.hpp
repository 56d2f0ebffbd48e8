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

#include <complex>
#include <filesystem>
#include <vector>

#include <Eigen/Dense>

#include "dysonlab/inequality.hpp"

namespace dysonlab::matrixloc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Hermitian A (to 1e-12), unit psi (to 1e-12) and window length 1 <= M <= N.
class LocalizationProblem {
 public:
  LocalizationProblem(Matrix a, Vector psi, int window);

  const Matrix& a() const noexcept { return a_; }
  const Vector& psi() const noexcept { return psi_; }
  int window() const noexcept { return window_; }
  int dimension() const noexcept { return static_cast<int>(a_.rows()); }

 private:
  Matrix a_;
  Vector psi_;
  int window_;
};

struct LocalizationResult {
  int n = 0;          // zero-based window offset, support is [n, n + M)
  int window = 0;
  Vector phi;
  double value = 0.0;   // <phi, A phi>
  double lambda = 0.0;  // <psi, A psi>
  std::vector<double> d;  // <psi, A^(k) psi>, k = 0..N-1

  /// lambda + (C / M^2) sum_{k<M} k^2 |d_k| + C sum_{k>=M} |d_k|
  double budget(double c) const;
  /// Coefficient of C in budget(C).
  double budget_slope() const;
};

/// Entries with |i - j| = k, zero elsewhere.
Matrix band_component(const Matrix& a, int k);

/// Restriction of psi to every length-M window, renormalized; returns the
/// window minimizing <phi, A phi> (smallest n on ties). Zero-mass windows are
/// skipped; PreconditionError if every window is empty.
LocalizationResult localize(const LocalizationProblem& problem);

struct BudgetReport {
  InequalityReport report;
  /// Smallest C >= 0 with value <= budget(C); infinity if none exists.
  double c_required = 0.0;
};

BudgetReport verify_budget(const LocalizationResult& result, double c);

/// Plain text: a header line "N real" or "N complex", then N*N row-major
/// entries (complex entries as "re im" pairs). Whitespace-separated, '#' starts a comment.
Matrix read_matrix(const std::filesystem::path& path);
/// Same header with N entries.
Vector read_vector(const std::filesystem::path& path);

}  // namespace dysonlab::matrixloc
