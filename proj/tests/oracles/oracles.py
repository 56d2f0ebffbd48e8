# Copyright 2026 The dysonlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent reference values for the C++ tests.

Run once with mpmath, numpy and scipy installed; the output is committed as
tests/unit/oracle_values.hpp and never regenerated by the build.

    python3 tests/oracles/oracles.py > tests/unit/oracle_values.hpp
"""

import itertools

import mpmath as mp
import numpy as np

trapezoid = getattr(np, "trapezoid", None) or np.trapz
from scipy.integrate import solve_ivp

mp.mp.dps = 40

values = {}


def put(name, value, comment):
    values[name] = (mp.mpf(value), comment)


# Foldy constant, both routes at 40 digits.
# 1 + x^4 - x^2 sqrt(x^4 + 2) = 1 / (1 + x^4 + x^2 sqrt(x^4 + 2)) avoids the cancellation.
j_int = (2 / mp.pi) ** mp.mpf(0.75) * mp.quad(lambda x: 1 / (1 + x**4 + x**2 * mp.sqrt(x**4 + 2)), [0, 1, mp.inf])
j_gam = (4 / mp.pi) ** mp.mpf(0.75) * mp.gamma(0.5) * mp.gamma(0.75) / (5 * mp.gamma(1.25))
assert abs(j_int - j_gam) < mp.mpf(10) ** -30
J = j_gam
put("kJ", J, "Gamma-function form, 40-digit arithmetic")
put("kGammaFiveQuarters", mp.gamma(mp.mpf(1) / 4) / 4, "Gamma(5/4) = Gamma(1/4) / 4")


def gap(a, b):
    # (a + b) - sqrt(a^2 + 2ab), rationalized so the far tail keeps its digits.
    return b * b / ((a + b) + mp.sqrt(a * a + 2 * a * b))


def local_energy(nu, ell, mu_long, mu_short, s):
    def integrand(p):
        t = ell**3 * p**4 / (2 * (p**2 + ell / s**2))
        v = 4 * mp.pi * (1 / (p**2 + mu_long**2) - 1 / (p**2 + mu_short**2))
        return p**2 * gap(t, nu * v)

    return -4 * mp.pi / (2 * (2 * mp.pi) ** 3) * mp.quad(integrand, [0, 0.1, 1, 10, 100, mp.inf])


def local_simplified(nu, ell):
    def integrand(p):
        t = ell**3 * p**2 / 2
        v = 4 * mp.pi / p**2
        return p**2 * gap(t, nu * v)

    return -4 * mp.pi / (2 * (2 * mp.pi) ** 3) * mp.quad(integrand, [0, 0.1, 1, 10, 100, mp.inf])


put("kLocalSimplified_2_3", local_simplified(2, 3), "simplified local energy, nu=2, ell=3, by quadrature")
for s_val, mul, mus in [(1, 1, 10), (10, 0.1, 100)]:
    put("kLocalCutoff_s%g" % s_val, local_energy(100, 1, mp.mpf(mul), mus, s_val),
        "local energy nu=100 ell=1 mu_long=%g mu_short=%g s=%g" % (mul, mus, s_val))
put("kLocalCutoff_s01", local_energy(100, 1, mp.mpf("0.1"), 100, mp.mpf("0.1")),
    "local energy nu=100 ell=1 mu_long=0.1 mu_short=100 s=0.1")


# Coherent-state occupation from the defining formula (high precision removes the cancellation).
def occupation(rho, p):
    return ((p**4 + 8 * mp.pi * rho) / (p**2 * mp.sqrt(p**4 + 16 * mp.pi * rho)) - 1) / 2


def occupation_tail(rho, p):
    # Same quantity with the numerator rationalized, for the far tail of the integrals.
    c = 8 * mp.pi * rho
    root = mp.sqrt(p**4 + 2 * c)
    return c**2 / (2 * p**2 * root * ((p**4 + c) + p**2 * root))


put("kOccupation_1_1", occupation(1, mp.mpf(1)), "f(rho=1, p=1)")
put("kOccupation_1_10", occupation(1, mp.mpf(10)), "f(rho=1, p=10)")
put("kOccupationMoment_1", 4 * mp.pi * mp.quad(lambda p: p**2 * occupation_tail(1, p), [0, 1, 10, mp.inf]),
    "4 pi int p^2 f(1, p) dp")


def pair_energy(rho):
    def integrand(p):
        f = occupation_tail(rho, p)
        return p**2 * ((p**2 / 2 + 4 * mp.pi * rho / p**2) * f - 4 * mp.pi * rho / p**2 * mp.sqrt(f * (f + 1)))

    return 4 * mp.pi / (2 * mp.pi) ** 3 * mp.quad(integrand, [0, 1, 10, mp.inf])


put("kPairEnergy_3", pair_energy(3), "pointwise pair energy at rho=3 by quadrature")

# Best Gaussian: phi = pi^{-3/4} exp(-r^2/2).
T = mp.mpf(3) / 4
V = J * mp.pi ** mp.mpf(-15 / 8.0) * (4 * mp.pi / 5) ** mp.mpf(1.5)
lam = (3 * V / (8 * T)) ** mp.mpf(0.8)
put("kGaussianKinetic", T, "T of the unit Gaussian")
put("kGaussianPotential", V, "J int phi^{5/2} of the unit Gaussian")
put("kGaussianLambda", lam, "optimal dilation of the Gaussian")
put("kGaussianBound", lam**2 * T - lam ** mp.mpf(0.75) * V, "best scaled-Gaussian energy")


# Dyson minimizer by shooting on  -psi''/2 - psi'/r - psi^{3/2} + psi = 0.
def shoot(a, r_end=40.0):
    def rhs(r, y):
        psi, dpsi = y
        return [dpsi, -2 * dpsi / r + 2 * psi - 2 * max(psi, 0.0) ** 1.5]

    def crossed(r, y):
        return y[0]

    def turned(r, y):
        return y[1]

    crossed.terminal = True
    turned.terminal = True
    r0 = 1e-6
    # Series start: psi = a + c r^2 with c = (a - a^{3/2}) / 3.
    c = (a - a**1.5) / 3
    sol = solve_ivp(rhs, [r0, r_end], [a + c * r0**2, 2 * c * r0], events=[crossed, turned],
                    rtol=1e-13, atol=1e-15, dense_output=True)
    if sol.t_events[0].size:
        return 1, sol
    if sol.t_events[1].size:
        return -1, sol
    return 0, sol


lo, hi = 1.5, 6.0
for _ in range(200):
    mid = 0.5 * (lo + hi)
    side, _ = shoot(mid)
    if side > 0:
        hi = mid
    else:
        lo = mid
    if hi - lo < 1e-15:
        break
a_star = 0.5 * (lo + hi)
_, sol = shoot(a_star)
r_cut = sol.t[-1]
r = np.linspace(1e-6, r_cut * 0.999, 400001)
psi, dpsi = sol.sol(r)
psi = np.maximum(psi, 0.0)
w = 4 * np.pi * r**2
norm = trapezoid(w * psi**2, r)
grad = trapezoid(w * dpsi**2, r)
p52 = trapezoid(w * psi**2.5, r)
Jf = float(J)
A = ((1.25 * Jf) ** 1.5 / norm) ** 0.8
B = np.sqrt(1.25 * Jf * np.sqrt(A))
kin = 0.5 * A**2 / B * grad
pot = Jf * A**2.5 / B**3 * p52
assert abs(A**2 / B**3 * norm - 1) < 1e-12
put("kDysonEnergy", kin - pot, "Dyson-functional minimum from ODE shooting (about 8 digits)")
put("kDysonKinetic", kin, "kinetic part at the minimizer")

# Bogolubov: four-mode truncated Fock matrix from Kronecker products.
def bogolubov_ground(t, gp, gm, n_max):
    b = n_max + 1
    a = np.diag(np.sqrt(np.arange(1, b)), 1)
    eye = np.eye(b)

    def op(single, mode):
        mats = [eye] * 4
        mats[mode] = single
        out = mats[0]
        for m_ in mats[1:]:
            out = np.kron(out, m_)
        return out

    # Kronecker order puts mode 0 slowest; the C++ basis is irrelevant to the spectrum.
    ann = [op(a, k) for k in range(4)]
    g = [gp, gm]
    sign = [1.0, -1.0]
    h = t * sum(x.T @ x for x in ann)
    for z, zp in itertools.product(range(2), repeat=2):
        c = np.sqrt(g[z] * g[zp]) * sign[z] * sign[zp]
        for tau in range(2):
            h = h + c * ann[2 * tau + z].T @ ann[2 * tau + zp]
        pair = ann[z].T @ ann[2 + zp].T
        h = h + c * (pair + pair.T)
    return np.linalg.eigvalsh(h)[0]


def bound(t, gp, gm):
    g = gp + gm
    return -g**2 / ((t + g) + mp.sqrt(t * (t + 2 * g)))


put("kBogolubovGround_1_07_03_n3", bogolubov_ground(1.0, 0.7, 0.3, 3), "ground energy t=1 g+=0.7 g-=0.3 n_max=3")
put("kBogolubovGround_2_05_05_n4", bogolubov_ground(2.0, 0.5, 0.5, 4), "ground energy t=2 g+=0.5 g-=0.5 n_max=4")
put("kBogolubovBound_1_07_03", bound(1, mp.mpf("0.7"), mp.mpf("0.3")), "closed-form bound t=1 g+=0.7 g-=0.3")

# Localization of the second-difference matrix, N=8, M=4, uniform psi, by brute force.
N, M = 8, 4
A = 2 * np.eye(N) - np.eye(N, k=1) - np.eye(N, k=-1)
psi = np.ones(N) / np.sqrt(N)
best = None
for n in range(N - M + 1):
    phi = np.zeros(N)
    phi[n:n + M] = psi[n:n + M]
    phi /= np.linalg.norm(phi)
    val = phi @ A @ phi
    if best is None or val < best[1] - 1e-15:
        best = (n, val)
lam_loc = psi @ A @ psi
d = [sum(psi[i] * A[i, i + k] * psi[i + k] * (1 if k == 0 else 2) for i in range(N - k)) for k in range(N)]
slope = sum(k * k * abs(d[k]) for k in range(1, M)) / M**2 + sum(abs(d[k]) for k in range(M, N))
put("kLocalizeValue", best[1], "second-difference N=8 M=4 uniform psi: best window value")
put("kLocalizeOffset", best[0], "its offset (smallest on ties)")
put("kLocalizeLambda", lam_loc, "<psi, A psi>")
put("kLocalizeCRequired", (best[1] - lam_loc) / slope, "smallest C satisfying the budget")

# Square well depth 2, radius 1: k cot k = -kappa with k^2 = 2(V0 + E), kappa^2 = -2E.
V0 = mp.mpf(2)
E0 = mp.findroot(lambda e: mp.sqrt(2 * (V0 + e)) * mp.cot(mp.sqrt(2 * (V0 + e))) + mp.sqrt(-2 * e), -0.3)
put("kSquareWellEnergy", E0, "square well depth 2 radius 1 ground energy (matching condition)")

# Stability: isolated nucleus integral by quadrature.
R = mp.mpf(1) / 3
put("kIsolatedNucleus", 4 * mp.pi * mp.quad(lambda x: x**2 * (1 / x - 1 / R) ** 2.5, [0, R]),
    "int_{|x|<R} (1/|x| - 1/R)^{5/2}, R = 1/3")
put("kSemiclassical", -mp.mpf(2) ** 2.5 / (30 * mp.pi**2), "(2 pi)^{-3} int (p^2/2 - 1)_- d^3p")

with open(__file__) as self_file:
    for line in self_file.read().splitlines()[:13]:
        print("//" + line[1:])
print()
print("// Generated by tests/oracles/oracles.py; do not edit by hand.")
print("#pragma once")
print()
print("namespace oracle {")
print()
for name, (value, comment) in values.items():
    print("// %s" % comment)
    print("inline constexpr double %s = %s;" % (name, mp.nstr(value, 20, min_fixed=-30, max_fixed=30)))
print()
print("}  // namespace oracle")
