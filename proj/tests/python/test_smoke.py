# Copyright 2026 The noetherlab Authors
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

import json
import os
import subprocess

import numpy as np
import pytest

import noetherlab as nl


def test_module_doc():
    assert "covariant" in nl._core.__doc__


def test_universal_not_factor():
    E = nl.extremal_channel(1, 1, 2)
    jx, jy, jz = nl.spin_operators(1)
    for J in (jx, jy, jz):
        np.testing.assert_allclose(E.apply_adjoint(J), -J / 3, atol=1e-12)


def test_representations_round_trip():
    E = nl.random_channel(2, 3, 2, seed=5)
    F = nl.QuantumChannel.from_jamiolkowski(E.jamiolkowski(), 2, 3)
    G = nl.QuantumChannel.from_liouville(E.liouville(), 2, 3)
    rho = np.array([[0.7, 0.2j], [-0.2j, 0.3]])
    np.testing.assert_allclose(E.apply(rho), F.apply(rho), atol=1e-12)
    np.testing.assert_allclose(E.apply(rho), G.apply(rho), atol=1e-12)
    H = nl.QuantumChannel.from_json(E.to_json("liouville"))
    np.testing.assert_allclose(E.apply(rho), H.apply(rho), atol=1e-12)


def test_invalid_channel_raises():
    swap = np.zeros((4, 4))
    for b in range(2):
        for a in range(2):
            swap[b * 2 + a, a * 2 + b] = 0.5
    with pytest.raises(ValueError, match="CP"):
        nl.QuantumChannel.from_jamiolkowski(swap, 2, 2)


def test_unitarity_and_deviation():
    E = nl.extremal_channel(1, 1, 2)
    assert nl.unitarity(E) == pytest.approx(1 / 9)
    assert nl.unitarity_complementary(E) == pytest.approx(1 / 9)
    assert nl.deviation_spin(E, 1, 1) == pytest.approx(4 / 9)
    assert nl.unitarity_su2_closed(2, [0, 1, 0]) == pytest.approx(0.25)
    mean, se = nl.mc_unitarity(E, 20000, 42)
    assert abs(mean - 1 / 9) < 4 * se


def test_kappa_and_fidelity():
    k = nl.kappa_extrema(1, 2)
    assert k["kappa_plus_exact"] == "4/3"
    assert k["two_L_plus"] == 1
    assert nl.time_reversal_fidelity(1) == pytest.approx(2 / 3)


def test_u1():
    flip = np.array([[0.0, 1.0], [1.0, 0.0]])
    F = nl.u1_extremal([0, 1], flip)
    assert nl.unitarity(F) == pytest.approx(1 / 3)
    assert nl.deviation_energy(F, [0, 1]) == pytest.approx(1 / 3)
    assert nl.unitarity(nl.u1_dephasing([0, 1, 2], 1.0)) == pytest.approx(1 / 4)


def test_bounds():
    (lo_lhs, lo_rhs, lo_ok), (up_lhs, up_rhs, up_ok) = nl.su2_bounds(1, [0, 1])
    assert lo_lhs == pytest.approx(2 / 9)
    assert up_lhs == pytest.approx(up_rhs)
    assert lo_ok and up_ok


def _schema():
    path = os.environ.get("NOETHERLAB_SCHEMA") or os.path.join(
        os.path.dirname(__file__), "..", "..", "docs", "tradeoff.schema.json")
    with open(path) as f:
        return json.load(f)


def test_sweeps_match_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema = _schema()
    su2 = nl.su2_tradeoff(2, 0.25)
    jsonschema.validate(su2, schema)
    assert su2["all_ok"]
    assert len(su2["records"]) == 15
    u1 = nl.u1_tradeoff([0, 1], 0.5)
    jsonschema.validate(u1, schema)
    assert all(r["bound_lower"] is None for r in u1["records"])


@pytest.mark.skipif("NOETHERLAB_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_json_matches_schema(tmp_path):
    jsonschema = pytest.importorskip("jsonschema")
    out = tmp_path / "su2.json"
    subprocess.run([os.environ["NOETHERLAB_CLI"], "su2", "tradeoff", "--two-j", "3", "--grid", "0.1",
                    "--format", "json", "--out", str(out)], check=True)
    doc = json.loads(out.read_text())
    jsonschema.validate(doc, _schema())
    assert doc["seed"] == 42


def test_verify_all():
    rep = nl.verify_all(seed=7, samples=2000)
    assert rep["passed"], [c for c in rep["checks"] if not c["pass"]]
