// Copyright 2026 The dysonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated by tests/oracles/oracles.py; do not edit by hand.
#pragma once

namespace oracle {

// Gamma-function form, 40-digit arithmetic
inline constexpr double kJ = 0.5744473532158540286;
// Gamma(5/4) = Gamma(1/4) / 4
inline constexpr double kGammaFiveQuarters = 0.90640247705547707798;
// simplified local energy, nu=2, ell=3, by quadrature
inline constexpr double kLocalSimplified_2_3 = -0.59937246305469750449;
// local energy nu=100 ell=1 mu_long=1 mu_short=10 s=1
inline constexpr double kLocalCutoff_s1 = -101.87756129221102842;
// local energy nu=100 ell=1 mu_long=0.1 mu_short=100 s=10
inline constexpr double kLocalCutoff_s10 = -175.7199438997398034;
// local energy nu=100 ell=1 mu_long=0.1 mu_short=100 s=0.1
inline constexpr double kLocalCutoff_s01 = -225.42455450227073091;
// f(rho=1, p=1)
inline constexpr double kOccupation_1_1 = 1.3249141890745247621;
// f(rho=1, p=10)
inline constexpr double kOccupation_1_10 = 0.0000015712363277742175812;
// 4 pi int p^2 f(1, p) dp
inline constexpr double kOccupationMoment_1 = 36.652890709282499326;
// pointwise pair energy at rho=3 by quadrature
inline constexpr double kPairEnergy_3 = -2.2680457001301806595;
// T of the unit Gaussian
inline constexpr double kGaussianKinetic = 0.75;
// J int phi^{5/2} of the unit Gaussian
inline constexpr double kGaussianPotential = 0.2675802227787452603;
// optimal dilation of the Gaussian
inline constexpr double kGaussianLambda = 0.20005030242308056516;
// best scaled-Gaussian energy
inline constexpr double kGaussianBound = -0.050025154374457501238;
// Dyson-functional minimum from ODE shooting (about 8 digits)
inline constexpr double kDysonEnergy = -0.050341175673713059457;
// kinetic part at the minimizer
inline constexpr double kDysonKinetic = 0.030204705404227209092;
// ground energy t=1 g+=0.7 g-=0.3 n_max=3
inline constexpr double kBogolubovGround_1_07_03_n3 = -0.26780094946867033512;
// ground energy t=2 g+=0.5 g-=0.5 n_max=4
inline constexpr double kBogolubovGround_2_05_05_n4 = -0.17157280170820138343;
// closed-form bound t=1 g+=0.7 g-=0.3
inline constexpr double kBogolubovBound_1_07_03 = -0.26794919243112270647;
// second-difference N=8 M=4 uniform psi: best window value
inline constexpr double kLocalizeValue = 0.5;
// its offset (smallest on ties)
inline constexpr double kLocalizeOffset = 0.0;
// <psi, A psi>
inline constexpr double kLocalizeLambda = 0.24999999999999994449;
// smallest C satisfying the budget
inline constexpr double kLocalizeCRequired = 2.2857142857142864756;
// square well depth 2 radius 1 ground energy (matching condition)
inline constexpr double kSquareWellEnergy = -0.203550741820655665;
// int_{|x|<R} (1/|x| - 1/R)^{5/2}, R = 1/3
inline constexpr double kIsolatedNucleus = 7.1227734472050704645;
// (2 pi)^{-3} int (p^2/2 - 1)_- d^3p
inline constexpr double kSemiclassical = -0.019105305608358542096;

}  // namespace oracle
