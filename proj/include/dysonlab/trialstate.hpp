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
#include <span>
#include <string_view>

#include <Eigen/Dense>

#include "dysonlab/inequality.hpp"
#include "dysonlab/numerics.hpp"
#include "dysonlab/random.hpp"
#include "dysonlab/variational.hpp"

namespace dysonlab::trialstate {

using variational::RadialProfile;

/// Coherent-state occupation f = ((p^4 + 8 pi rho) / (p^2 sqrt(p^4 + 16 pi rho)) - 1) / 2
/// with rho = 2 lambda0^2 phi0(u)^2. DomainError for p <= 0.
double occupation_f(double rho, double p);

/// (2 pi)^{-3} int d^3p [(p^2/2 + 4 pi rho / p^2) f - (4 pi rho / p^2) sqrt(f (f + 1))],
/// which equals -J rho^{5/4}. Throws ConsistencyError when the quadrature
/// misses -j rho^{5/4} by more than 10 tol relative (`j` defaults to the
/// cached Foldy constant).
double pointwise_pair_energy(double rho, double tol = kDefaultQuadratureTol,
                             std::optional<double> j = std::nullopt);

/// Condensate amplitude lambda0^2 and profile phi0.
struct CondensateSpec {
  double lambda0_sq;
  RadialProfile phi0;
};

/// lambda0^2 = N / 2, phi0(x) = N^{3/10} phi(N^{1/5} x).
CondensateSpec condensate_from_minimizer(double n_particles, const RadialProfile& phi);

/// (2 pi)^{-3} int du int dp f(rho(u), |p|), iterated: an adaptive p-integral
/// at every grid node, then the radial u-sum. The projection orthogonal to
/// phi0 is not applied.
double trace_gamma(const CondensateSpec& spec, double tol = kDefaultQuadratureTol);

/// lambda0^2 int (grad phi0)^2 - J (2 lambda0^2)^{5/4} int phi0^{5/2} with
/// lambda0^2 = N / 2. Throws ConsistencyError unless it equals
/// N^{7/5} functional_energy(phi) to 1e-8 relative.
double upper_bound_energy(double n_particles, const RadialProfile& phi,
                          std::optional<double> j = std::nullopt);

/// Finite tight frame: unit vectors theta_k (columns) with weights w_k,
/// sum_k w_k theta_k theta_k^T = I to 1e-10.
class CoherentFrame {
 public:
  CoherentFrame(Eigen::MatrixXd vectors, Eigen::VectorXd weights);

  /// m Gaussian vectors symmetrized by the inverse square root of their frame operator.
  static CoherentFrame random(int dimension, int count, Engine& rng);

  int dimension() const noexcept { return static_cast<int>(vectors_.rows()); }
  int count() const noexcept { return static_cast<int>(vectors_.cols()); }
  const Eigen::MatrixXd& vectors() const noexcept { return vectors_; }
  const Eigen::VectorXd& weights() const noexcept { return weights_; }
  double tightness_residual() const;

 private:
  Eigen::MatrixXd vectors_;
  Eigen::VectorXd weights_;
};

/// Operator-concave functions on [0, inf) with xi(0) >= 0.
enum class ConcaveFunction { Sqrt, SqrtTTPlusOne, Identity, Log1p };

double apply(ConcaveFunction xi, double t);
std::string_view name(ConcaveFunction xi);
ConcaveFunction concave_function_from_name(std::string_view name);

/// Tr(Y xi(Gamma)) >= sum_k w_k xi(f_k) <theta_k, Y theta_k>, Gamma = sum_k w_k f_k theta_k theta_k^T.
/// PreconditionError if Y is not symmetric PSD (eigenvalue < -1e-10) or f has a negative entry.
InequalityReport berezin_lieb_check(const CoherentFrame& frame, std::span<const double> f_values,
                                    const Eigen::MatrixXd& y, ConcaveFunction xi);

}  // namespace dysonlab::trialstate
