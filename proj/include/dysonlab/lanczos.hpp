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

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace dysonlab {

struct ExtremalEigenpair {
  double value = 0.0;
  Eigen::VectorXd vector;
  double residual = 0.0;  // ||A v - value v||, an upper bound on the eigenvalue error
  int matvecs = 0;
};

struct LanczosOptions {
  int krylov_dim = 120;
  int max_restarts = 200;
  double tol = 1e-10;
  unsigned long long seed = 0x5eed;
};

/// Smallest eigenpair of a symmetric sparse matrix by explicitly restarted
/// Lanczos with full reorthogonalization. The start vector is drawn from a
/// fixed-seed stream so repeated calls are deterministic.
/// Throws ConvergenceError (with the best Ritz value and residual) on failure.
ExtremalEigenpair lowest_eigenpair(const Eigen::SparseMatrix<double>& a,
                                   const LanczosOptions& options = {});

/// All eigenvalues of the symmetric tridiagonal matrix (diag, off) strictly
/// below `upper`, ascending, by Sturm-sequence bisection to ~1e-14 relative.
Eigen::VectorXd tridiagonal_eigenvalues_below(const Eigen::VectorXd& diag,
                                              const Eigen::VectorXd& off, double upper);

}  // namespace dysonlab
