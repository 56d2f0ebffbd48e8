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

#include <string>

#include "dysonlab/numerics.hpp"

namespace dysonlab::foldy {

/// Cut-offs of the localized Bogolubov problem in a box of side `ell`.
/// The interaction is V = Y_{mu_long} - Y_{mu_short}; `s` is the kinetic
/// split scale entering t(p).
struct CutoffSpec {
  double mu_long = 0.0;
  double mu_short = 1.0;
  double s = 1.0;
  double ell = 1.0;

  void validate() const;
};

struct LocalEnergyResult {
  double value = 0.0;            // <= 0
  double integrand_peak_p = 0.0; // location of the largest integrand sample
  QuadratureResult quadrature;
};

/// (a + b) - sqrt(a^2 + 2ab) for a, b >= 0, evaluated without cancellation.
double pair_gap(double a, double b);

/// (2/pi)^{3/4} int_0^inf (1 + x^4 - x^2 sqrt(x^4 + 2)) dx.
double j_from_integral(double tol = kDefaultQuadratureTol);
/// (4/pi)^{3/4} Gamma(1/2) Gamma(3/4) / (5 Gamma(5/4)).
double j_closed_form();

/// The integrand of j_from_integral, 1 + x^4 - x^2 sqrt(x^4 + 2), in stable form.
double j_integrand(double x);

/// Foldy's constant, computed once on first use and frozen.
struct FoldyConstant {
  double value;
  double cross_check;   // the other route
  std::string route;    // which route `value` came from
  double tolerance;     // quadrature tolerance of the integral route
  int digits;           // agreed decimal digits between routes
};
const FoldyConstant& foldy_constant();

/// t(p) = ell^3 p^4 / (2 (p^2 + ell s^{-2})).
double kinetic_symbol(double p, const CutoffSpec& spec);
/// Fourier transform of Y_{mu_long} - Y_{mu_short}.
double potential_hat(double p, const CutoffSpec& spec);

/// -(2 (2 pi)^3)^{-1} int_{R^3} (t + nu V^) - sqrt(t^2 + 2 t nu V^) dp.
LocalEnergyResult local_energy(double nu, const CutoffSpec& spec, double tol = kDefaultQuadratureTol);

/// Same integral with t -> ell^3 p^2 / 2 and V^ -> 4 pi / p^2, by quadrature.
QuadratureResult local_energy_simplified_quadrature(double nu, double ell,
                                                    double tol = kDefaultQuadratureTol);

/// Closed form -J nu^{5/4} ell^{-3/4}, cross-checked against the quadrature.
/// Throws ConsistencyError when the two disagree by more than 1e-5 relative.
double local_energy_simplified(double nu, double ell, double tol = kDefaultQuadratureTol);

}  // namespace dysonlab::foldy
