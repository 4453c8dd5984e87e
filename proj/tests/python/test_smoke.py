# Copyright 2026 The MCBeth Authors
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

import pytest

import mcbeth

TELEPORT = "Input 0;\nPrepList [1,2];\nJ 0 0 1;\nJ 0 1 2;\n"


def test_validate():
    assert mcbeth.validate(TELEPORT) == []
    violations = mcbeth.validate("Prep 0;\nMeasure 0 0 [] [];\nXCorrect 0 [];\n")
    assert violations
    assert violations[0][0] == 2


def test_standardize():
    standard = mcbeth.standardize(TELEPORT)
    lines = [l for l in standard.splitlines() if l]
    assert lines[3] == "Entangle 0 1;"
    assert lines[-1] == "XCorrect 2 [1];"


def test_json_round_trip():
    encoded = mcbeth.to_json(TELEPORT)
    commands = json.loads(encoded)
    assert isinstance(commands, list)
    assert mcbeth.validate(encoded) == []


def test_weak_simulate_teleports_input():
    ket = (0.6, 0.8j)
    result = mcbeth.weak_simulate(TELEPORT, inputs={0: ket}, seed=5)
    assert result["order"] == [2]
    amps = result["state"]
    fidelity = abs(
        amps[0] * complex(ket[0]).conjugate() + amps[1] * complex(ket[1]).conjugate()
    )
    assert fidelity == pytest.approx(1.0, abs=1e-9)


def test_strong_simulate_distribution():
    program = mcbeth.corpus.grover2("01", variant="six")
    result = mcbeth.strong_simulate(program)
    assert result["distribution"]["01"] == pytest.approx(1.0, abs=1e-9)


def test_empirical_distribution():
    dist = mcbeth.empirical_distribution("Prep 0;\nReadOut 0 Z;\n", 2000, seed=3)
    assert dist["0"] == pytest.approx(0.5, abs=0.05)
    assert math.isclose(sum(dist.values()), 1.0)


def test_compile_qasm():
    qasm = mcbeth.compile_qasm(TELEPORT, mode="cc")
    assert qasm.startswith("OPENQASM 2.0;")
    assert "if (c0==1)" in qasm or "if (c1==1)" in qasm
    deferred = mcbeth.compile_qasm(TELEPORT, mode="deferred")
    assert "cz" in deferred or "cx" in deferred


def test_corpus_programs_validate():
    for text in (
        mcbeth.corpus.teleport(),
        mcbeth.corpus.deutsch_jozsa(3, "constant"),
        mcbeth.corpus.grover2("11"),
    ):
        assert mcbeth.validate(text) == []


def test_errors_raise():
    with pytest.raises(Exception):
        mcbeth.weak_simulate("Prep zero;\n")
