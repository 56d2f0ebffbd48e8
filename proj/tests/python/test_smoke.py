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

"""Smoke tests for the Python bindings."""

import math

import numpy as np
import pytest

import dysonlab

J = 0.5744473532158540286


def test_foldy_constant():
    assert abs(dysonlab.j_closed_form() - J) < 1e-14
    assert abs(dysonlab.j_from_integral(1e-10) - J) < 1e-8
    assert dysonlab.foldy_constant() == pytest.approx(J, rel=1e-14)


def test_simplified_local_energy():
    value = dysonlab.local_energy_simplified(100.0, 1.0)
    assert value == pytest.approx(-J * 100.0 ** 1.25, rel=1e-6)


def test_bogolubov():
    bound = dysonlab.closed_form_bound(1.0, 1.0, 0.0)
    assert bound == pytest.approx(math.sqrt(3.0) - 2.0, rel=1e-12)
    rows = dysonlab.sharpness_study(1.0, 1.0, 0.0, [2, 4])
    assert [r["n_max"] for r in rows] == [2, 4]
    assert all(r["energy"] >= r["bound"] - 1e-9 for r in rows)


def test_correlation():
    dipole = [(0.0, 0.0, 0.0), (1.0, 0.0, 0.0)]
    assert dysonlab.pair_energy(dipole, [1.0, -1.0]) == pytest.approx(-1.0)
    onsager = dysonlab.onsager_check(dipole, [1.0, -1.0])
    assert onsager["holds"] and onsager["rhs"] == pytest.approx(-2.0)
    assert dysonlab.baxter_check(dipole, [1.0, -1.0])["rhs"] == pytest.approx(-3.0)
    with pytest.raises(dysonlab.DomainError):
        dysonlab.pair_energy([(0.0, 0.0, 0.0), (0.0, 0.0, 0.0)], [1.0, -1.0])


def test_minimizer_and_trial_state():
    m = dysonlab.minimize()
    assert m["converged"]
    assert m["energy"] == pytest.approx(-0.0503411757, abs=1e-8)
    assert len(m["r"]) == len(m["phi"]) == 400
    energy, kinetic, potential = dysonlab.functional_energy(m["phi"])
    assert energy == pytest.approx(m["energy"], abs=1e-14)
    assert dysonlab.upper_bound_energy(32.0, m["phi"]) == pytest.approx(128.0 * m["energy"], rel=1e-8)
    n = np.array([1e3, 1e4, 1e5])
    t = np.array([dysonlab.trace_gamma(x, m["phi"]) for x in n])
    slope = np.polyfit(np.log(n), np.log(t), 1)[0]
    assert slope == pytest.approx(0.6, abs=1e-3)


def test_pair_energy_identity():
    assert dysonlab.pointwise_pair_energy(1.0) == pytest.approx(-J, rel=1e-6)
    with pytest.raises(dysonlab.ConsistencyError):
        dysonlab.pointwise_pair_energy(1.0, j=J + 1e-3)


def test_berezin_lieb():
    vectors, weights = dysonlab.random_frame(3, 7, seed=4)
    rng = np.random.default_rng(1)
    g = rng.normal(size=(3, 3))
    report = dysonlab.berezin_lieb_check(vectors, weights, list(rng.uniform(0, 3, 7)), g @ g.T, "sqrt")
    assert report["holds"]


def test_localize():
    a = 2 * np.eye(8) - np.eye(8, k=1) - np.eye(8, k=-1)
    psi = np.ones(8) / math.sqrt(8)
    r = dysonlab.localize(a.astype(complex), psi.astype(complex), 4)
    assert r["n"] == 0
    assert r["value"] == pytest.approx(0.5)
    assert sum(r["d"]) == pytest.approx(r["lambda"], abs=1e-12)


def test_spectral():
    assert dysonlab.ground_state_energy("square-well", 1.0, 1.0) == 0.0
    assert dysonlab.ground_state_energy("square-well", 2.0, 1.0) == pytest.approx(-0.2035507418, abs=1e-4)
    assert dysonlab.semiclassical_ratio() == pytest.approx(-(2 ** 2.5) / (30 * math.pi ** 2), rel=1e-14)
    s = dysonlab.negative_sum("gaussian-well", 50.0, 1.0)
    assert s["neg_sum"] < 0 and s["v_integral"] > 0
    b = dysonlab.stability_bound([(0.0, 0.0, 0.0)], [1.0], 2, 0.04, 4)
    assert b["R"] == pytest.approx(1.0 / 3.0)
    assert b["total"] < 0


def test_run(tmp_path):
    code, text, message = dysonlab.run("foldy-j", output=str(tmp_path))
    assert code == 0, message
    assert text.startswith("dysonlab-record/1\n")
    assert (tmp_path / "foldy-j.record").read_text() == text
    code, _, message = dysonlab.run("foldy-j", {"bogus": "1"})
    assert code == 2 and "bogus" in message
    assert "verify" in dysonlab.subcommands()
