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

#include "dysonlab/trialstate.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "dysonlab/errors.hpp"
#include "dysonlab/foldy.hpp"

namespace dysonlab::trialstate {

namespace {

constexpr double kPhaseSpaceFactor = 1.0 / (8.0 * kPi * kPi * kPi);  // (2 pi)^{-3}

// f - sqrt(f (f + 1)) without cancellation.
double occupation_gap(double f) {
  if (f == 0.0) return 0.0;
  return -f / (f + std::sqrt(f * (f + 1.0)));
}

double transition_momentum(double rho) { return std::pow(16.0 * kPi * rho, 0.25); }

}  // namespace

double occupation_f(double rho, double p) {
  if (!(p > 0.0)) throw DomainError("occupation_f: p must be positive");
  if (!(rho >= 0.0)) throw DomainError("occupation_f: rho must be >= 0");
  const double p2 = p * p;
  const double p4 = p2 * p2;
  const double c = 8.0 * kPi * rho;
  const double root = std::sqrt(p4 + 2.0 * c);
  // (p^4 + c) - p^2 sqrt(p^4 + 2c) = c^2 / ((p^4 + c) + p^2 sqrt(p^4 + 2c))
  return 0.5 * c * c / ((p4 + c) + p2 * root) / (p2 * root);
}

double pointwise_pair_energy(double rho, double tol, std::optional<double> j) {
  if (!(rho >= 0.0)) throw DomainError("pointwise_pair_energy: rho must be >= 0");
  if (rho == 0.0) return 0.0;
  const double coupling = 4.0 * kPi * rho;
  auto integrand = [&](double p) {
    if (p == 0.0) return -0.5 * coupling;  // f ~ 1/p^2, so only the gap term survives
    const double f = occupation_f(rho, p);
    const double p2 = p * p;
    return 0.5 * p2 * p2 * f + coupling * occupation_gap(f);
  };
  const QuadratureResult q = integrate_half_line(integrand, {transition_momentum(rho)}, tol);
  const double value = kPhaseSpaceFactor * 4.0 * kPi * q.value;
  const double expected = -j.value_or(foldy::foldy_constant().value) * std::pow(rho, 1.25);
  if (std::abs(value - expected) > 10.0 * tol * std::abs(expected)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "pointwise_pair_energy: quadrature " << value << " differs from -J rho^{5/4} = " << expected;
    throw ConsistencyError(msg.str());
  }
  return value;
}

CondensateSpec condensate_from_minimizer(double n_particles, const RadialProfile& phi) {
  if (!(n_particles > 0.0)) throw DomainError("condensate_from_minimizer: N must be positive");
  return {0.5 * n_particles, variational::rescale(phi, std::pow(n_particles, 0.2))};
}

double trace_gamma(const CondensateSpec& spec, double tol) {
  if (!(spec.lambda0_sq >= 0.0)) throw DomainError("trace_gamma: lambda0^2 must be >= 0");
  if (spec.lambda0_sq == 0.0) return 0.0;
  const auto& phi = spec.phi0.values();
  std::vector<double> inner(phi.size(), 0.0);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const double rho = 2.0 * spec.lambda0_sq * phi[i] * phi[i];
    if (rho == 0.0) continue;
    auto integrand = [rho](double p) {
      if (p == 0.0) return 0.0;
      return p * p * occupation_f(rho, p);
    };
    inner[i] = 4.0 * kPi * integrate_half_line(integrand, {transition_momentum(rho)}, tol).value;
  }
  return kPhaseSpaceFactor * integrate_radial(inner, spec.phi0.grid());
}

double upper_bound_energy(double n_particles, const RadialProfile& phi, std::optional<double> j) {
  const double jj = j.value_or(foldy::foldy_constant().value);
  const variational::FunctionalEnergy reference = variational::functional_energy(phi, jj);
  const CondensateSpec cond = condensate_from_minimizer(n_particles, phi);
  const auto& phi0 = cond.phi0.values();
  const auto w = cond.phi0.grid().weights();
  double p52 = 0.0;
  for (std::size_t i = 0; i < phi0.size(); ++i) p52 += w[i] * std::pow(phi0[i], 2.5);
  // int (grad phi0)^2 = 2 T(phi0)
  const double kinetic = cond.lambda0_sq * 2.0 * variational::kinetic_energy(cond.phi0);
  const double potential = jj * std::pow(2.0 * cond.lambda0_sq, 1.25) * p52;
  const double value = kinetic - potential;
  const double expected = std::pow(n_particles, 1.4) * reference.energy;
  if (std::abs(value - expected) > 1e-8 * std::abs(expected)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "upper_bound_energy: " << value << " differs from N^{7/5} E = " << expected;
    throw ConsistencyError(msg.str());
  }
  return value;
}

CoherentFrame::CoherentFrame(Eigen::MatrixXd vectors, Eigen::VectorXd weights)
    : vectors_(std::move(vectors)), weights_(std::move(weights)) {
  if (vectors_.rows() < 2) throw PreconditionError("CoherentFrame: dimension must be >= 2");
  if (vectors_.cols() < vectors_.rows()) throw PreconditionError("CoherentFrame: need at least d vectors");
  if (weights_.size() != vectors_.cols()) throw PreconditionError("CoherentFrame: one weight per vector");
  if ((weights_.array() <= 0.0).any()) throw PreconditionError("CoherentFrame: weights must be positive");
  for (Eigen::Index k = 0; k < vectors_.cols(); ++k) {
    if (std::abs(vectors_.col(k).norm() - 1.0) > 1e-12) throw PreconditionError("CoherentFrame: vectors must be unit");
  }
  if (tightness_residual() > 1e-10) throw PreconditionError("CoherentFrame: frame is not tight");
}

CoherentFrame CoherentFrame::random(int dimension, int count, Engine& rng) {
  if (dimension < 2 || count < dimension) throw DomainError("CoherentFrame::random: need count >= dimension >= 2");
  Eigen::MatrixXd raw(dimension, count);
  for (int k = 0; k < count; ++k) {
    for (int i = 0; i < dimension; ++i) raw(i, k) = normal(rng);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> frame_op(raw * raw.transpose());
  const Eigen::MatrixXd inv_sqrt = frame_op.operatorInverseSqrt();
  Eigen::MatrixXd tight = inv_sqrt * raw;
  // Ill-conditioned draws leave a residual near cond * eps; one or two polishing passes remove it.
  for (int pass = 0; pass < 3; ++pass) {
    const Eigen::MatrixXd s = tight * tight.transpose();
    if ((s - Eigen::MatrixXd::Identity(dimension, dimension)).cwiseAbs().maxCoeff() <= 1e-14) break;
    tight = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(s).operatorInverseSqrt() * tight;
  }
  Eigen::VectorXd weights(count);
  for (int k = 0; k < count; ++k) {
    const double len = tight.col(k).norm();
    weights[k] = len * len;
    tight.col(k) /= len;
  }
  return CoherentFrame(std::move(tight), std::move(weights));
}

double CoherentFrame::tightness_residual() const {
  const Eigen::MatrixXd s = vectors_ * weights_.asDiagonal() * vectors_.transpose();
  return (s - Eigen::MatrixXd::Identity(dimension(), dimension())).cwiseAbs().maxCoeff();
}

double apply(ConcaveFunction xi, double t) {
  switch (xi) {
    case ConcaveFunction::Sqrt:
      return std::sqrt(t);
    case ConcaveFunction::SqrtTTPlusOne:
      return std::sqrt(t * (t + 1.0));
    case ConcaveFunction::Identity:
      return t;
    case ConcaveFunction::Log1p:
      return std::log1p(t);
  }
  return t;
}

std::string_view name(ConcaveFunction xi) {
  switch (xi) {
    case ConcaveFunction::Sqrt:
      return "sqrt";
    case ConcaveFunction::SqrtTTPlusOne:
      return "sqrt-t-t1";
    case ConcaveFunction::Identity:
      return "identity";
    case ConcaveFunction::Log1p:
      return "log1p";
  }
  return "identity";
}

ConcaveFunction concave_function_from_name(std::string_view n) {
  for (ConcaveFunction xi : {ConcaveFunction::Sqrt, ConcaveFunction::SqrtTTPlusOne, ConcaveFunction::Identity,
                             ConcaveFunction::Log1p}) {
    if (name(xi) == n) return xi;
  }
  throw DomainError("unknown concave function '" + std::string(n) + "'");
}

InequalityReport berezin_lieb_check(const CoherentFrame& frame, std::span<const double> f_values,
                                    const Eigen::MatrixXd& y, ConcaveFunction xi) {
  const int d = frame.dimension();
  if (static_cast<int>(f_values.size()) != frame.count()) {
    throw PreconditionError("berezin_lieb_check: one f value per frame vector");
  }
  for (double f : f_values) {
    if (!(f >= 0.0)) throw PreconditionError("berezin_lieb_check: f values must be >= 0");
  }
  if (y.rows() != d || y.cols() != d) throw PreconditionError("berezin_lieb_check: Y has the wrong shape");
  if ((y - y.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, y.cwiseAbs().maxCoeff())) {
    throw PreconditionError("berezin_lieb_check: Y is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ysolve(y, Eigen::EigenvaluesOnly);
  if (ysolve.eigenvalues()[0] < -1e-10) throw PreconditionError("berezin_lieb_check: Y is not PSD");

  const Eigen::Map<const Eigen::VectorXd> f(f_values.data(), frame.count());
  const Eigen::MatrixXd& theta = frame.vectors();
  const Eigen::MatrixXd gamma = theta * (frame.weights().cwiseProduct(f)).asDiagonal() * theta.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gsolve(gamma);
  Eigen::VectorXd xi_eigs(d);
  for (int i = 0; i < d; ++i) xi_eigs[i] = apply(xi, std::max(0.0, gsolve.eigenvalues()[i]));
  const Eigen::MatrixXd xi_gamma = gsolve.eigenvectors() * xi_eigs.asDiagonal() * gsolve.eigenvectors().transpose();
  const double lhs = (y * xi_gamma).trace();

  double rhs = 0.0;
  for (int k = 0; k < frame.count(); ++k) {
    rhs += frame.weights()[k] * apply(xi, f[k]) * theta.col(k).dot(y * theta.col(k));
  }
  return InequalityReport::compare(lhs, rhs);
}

}  // namespace dysonlab::trialstate
