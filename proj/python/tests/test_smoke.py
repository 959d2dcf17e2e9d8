# Copyright 2026 The qdeg Authors
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
import math

import numpy as np
import pytest

import qdeg


def test_td_channel_action():
    t = -0.4
    c = qdeg.td_channel(2, t)
    rho = np.array([[0.7, 0.1 - 0.2j], [0.1 + 0.2j, 0.3]])
    expected = t * rho.T + (1 - t) / 2 * np.eye(2)
    np.testing.assert_allclose(c(rho), expected, atol=1e-12)
    assert c.d_in == 2 and c.d_out == 2
    assert c.choi.shape == (4, 4)
    assert c.superop.shape == (4, 4)


def test_kraus_constructor_and_complement():
    c = qdeg.Channel([np.eye(2, dtype=complex)], "id")
    assert c.label == "id"
    env = qdeg.complement(c)
    assert env.d_out == 1


def test_invalid_inputs_raise():
    with pytest.raises(ValueError):
        qdeg.td_channel(2, 0.9)
    with pytest.raises(ValueError):
        qdeg.parse_channel("td:d=2")
    with pytest.raises(ValueError):
        qdeg.decide(qdeg.td_channel(2, 0.0), "antidegradable", search=True)


def test_decide_verdicts():
    yes = qdeg.decide(qdeg.td_channel(2, -1.0), "degradable")
    assert yes.status == "YES" and yes.unique
    no = qdeg.decide(qdeg.td_channel(2, 0.2), "degradable")
    assert no.status == "NO" and no.certificate is None
    found = qdeg.decide(qdeg.parse_channel("td:d=2,t=-2/3"), "antidegradable",
                        search=True, seed=7)
    assert found.status == "YES"
    assert found.kernel_dim == 48
    doc = json.loads(found.to_json())
    assert doc["status"] == "YES" and doc["certificate"] is not None


def test_screen():
    report = qdeg.ecd_screen(qdeg.td_channel(2, 0.1))
    assert report["hopeless"]
    assert report["reasons"]


def test_capacities():
    assert qdeg.td_complement_capacity(2, 1 / 3)["value"] == pytest.approx(
        math.log2(3) - 1, abs=1e-10)
    assert qdeg.td_complement_capacity(3, 0.25)["value"] == pytest.approx(
        math.log(2, 3), abs=1e-10)
    env = qdeg.td_complement_qubit(0.0)
    assert qdeg.coherent_information(env, np.eye(2) / 2) == pytest.approx(1.0, abs=1e-10)
    assert qdeg.covariant_capacity(env)["value"] == pytest.approx(1.0, abs=1e-10)
    best = qdeg.one_shot_optimize(env, seed=1, restarts=3)
    assert best["value"] >= 1.0 - 1e-9
    assert qdeg.von_neumann_entropy(np.eye(4) / 4) == pytest.approx(2.0, abs=1e-12)
