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

#include "dysonlab/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "dysonlab/errors.hpp"
#include "dysonlab/random.hpp"

namespace dysonlab {

ExtremalEigenpair lowest_eigenpair(const Eigen::SparseMatrix<double>& a,
                                   const LanczosOptions& options) {
  const Eigen::Index n = a.rows();
  if (n == 0 || a.cols() != n) throw DomainError("lowest_eigenpair: matrix must be square and nonempty");

  Engine rng(options.seed);
  Eigen::VectorXd start(n);
  for (Eigen::Index i = 0; i < n; ++i) start[i] = uniform(rng, -1.0, 1.0);
  start.normalize();

  const Eigen::Index m = std::min<Eigen::Index>(options.krylov_dim, n);
  Eigen::MatrixXd basis(n, m + 1);
  ExtremalEigenpair best;
  best.value = std::numeric_limits<double>::infinity();
  best.residual = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart <= options.max_restarts; ++restart) {
    basis.col(0) = start;
    std::vector<double> alpha;
    std::vector<double> beta;
    Eigen::Index steps = 0;
    for (Eigen::Index j = 0; j < m; ++j) {
      Eigen::VectorXd w = a * basis.col(j);
      ++best.matvecs;
      const double aj = basis.col(j).dot(w);
      alpha.push_back(aj);
      // Two passes of classical Gram-Schmidt against the whole basis.
      for (int pass = 0; pass < 2; ++pass) {
        const Eigen::VectorXd coeff = basis.leftCols(j + 1).transpose() * w;
        w.noalias() -= basis.leftCols(j + 1) * coeff;
      }
      const double bj = w.norm();
      steps = j + 1;
      beta.push_back(bj);
      if (bj <= 1e-14 * std::max(1.0, std::abs(aj))) break;  // invariant subspace
      basis.col(j + 1) = w / bj;
    }

    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(steps, steps);
    for (Eigen::Index i = 0; i < steps; ++i) {
      t(i, i) = alpha[i];
      if (i + 1 < steps) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(t);
    const Eigen::VectorXd s = small.eigenvectors().col(0);
    Eigen::VectorXd ritz = basis.leftCols(steps) * s;
    ritz.normalize();
    const double theta = small.eigenvalues()[0];
    const double residual = (a * ritz - theta * ritz).norm();
    ++best.matvecs;
    if (residual < best.residual) {
      best.value = theta;
      best.vector = ritz;
      best.residual = residual;
    }
    if (residual <= options.tol) return best;
    start = ritz;
  }
  std::ostringstream msg;
  msg << "lowest_eigenpair: no convergence, residual " << best.residual;
  throw ConvergenceError(msg.str(), best.value, best.residual);
}

namespace {

// Number of eigenvalues of the tridiagonal matrix strictly less than x.
Eigen::Index sturm_count(const Eigen::VectorXd& diag, const Eigen::VectorXd& off, double x) {
  Eigen::Index count = 0;
  double q = diag[0] - x;
  if (q < 0) ++count;
  for (Eigen::Index i = 1; i < diag.size(); ++i) {
    if (q == 0.0) q = 1e-300;
    q = diag[i] - x - off[i - 1] * off[i - 1] / q;
    if (q < 0) ++count;
  }
  return count;
}

}  // namespace

Eigen::VectorXd tridiagonal_eigenvalues_below(const Eigen::VectorXd& diag,
                                              const Eigen::VectorXd& off, double upper) {
  const Eigen::Index n = diag.size();
  if (n == 0 || off.size() != n - 1) throw DomainError("tridiagonal_eigenvalues_below: bad shape");
  // Gershgorin lower bound.
  double lower = diag[0];
  for (Eigen::Index i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(off[i - 1]);
    if (i + 1 < n) radius += std::abs(off[i]);
    lower = std::min(lower, diag[i] - radius);
  }
  const Eigen::Index count = sturm_count(diag, off, upper);
  Eigen::VectorXd values(count);
  for (Eigen::Index k = 0; k < count; ++k) {
    double lo = lower - 1.0;
    double hi = upper;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (!(mid > lo && mid < hi)) break;
      if (hi - lo <= 1e-14 * std::max(std::abs(lo), std::abs(hi)) + 1e-300) break;
      if (sturm_count(diag, off, mid) > k) hi = mid; else lo = mid;
    }
    values[k] = 0.5 * (lo + hi);
  }
  return values;
}

}  // namespace dysonlab
