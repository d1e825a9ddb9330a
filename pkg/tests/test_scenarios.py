import math

import numpy as np
import pytest

from retroframes.errors import BadDimension, UnknownScenario
from retroframes.scenarios import DEFAULT_N, list_scenarios, run_scenario

NAMES = ["ex2_1", "ex3_6", "ex3_7", "ex3_9", "prop3_11", "circle", "mercedes"]


def test_registry():
    specs = list_scenarios()
    assert [s.name for s in specs] == NAMES
    anchors = {s.name: s.anchor for s in specs}
    assert anchors["ex3_6"] == "Example 3.6"
    assert anchors["circle"] == "Def 2.2 continuous measure"
    assert {s.name for s in specs if s.extension} == {"circle", "mercedes"}


@pytest.mark.parametrize("name", NAMES)
@pytest.mark.parametrize("n", [3, 4, 7, 12])
def test_all_scenarios_pass(name, n):
    rep = run_scenario(name, n)
    failed = [c.name for c in rep.checks if not c.passed]
    assert rep.passed, failed
    assert rep.checks


@pytest.mark.parametrize("name", NAMES)
def test_deterministic(name):
    assert run_scenario(name).as_dict() == run_scenario(name).as_dict()


def test_defaults_cover_registry():
    assert set(DEFAULT_N) == set(NAMES)


def test_errors():
    with pytest.raises(UnknownScenario):
        run_scenario("ex9_9", 5)
    with pytest.raises(BadDimension):
        run_scenario("ex3_6", 2)
    with pytest.raises(BadDimension):
        run_scenario("ex3_6", 4.0)


def test_ex2_1_reports_literal_sequences():
    rep = run_scenario("ex2_1", 8)
    m = rep.measurements
    assert m["repeated_e2_sequence_residual"] > 0.5
    assert m["interleaved_zero_sequence_residual"] > 0.5
    assert len(rep.notes) == 2


def test_ex3_7_a0_zero_for_all_sizes():
    for n in range(4, 12):
        assert run_scenario("ex3_7", n).measurements["a0"] < 1e-12


def test_prop3_11_a0_decreasing():
    a = [run_scenario("prop3_11", n).measurements["a0"] for n in (4, 8, 16)]
    assert a[0] > a[1] > a[2]
    np.testing.assert_allclose(a, [4.0**-4, 8.0**-4, 16.0**-4], rtol=1e-10)


def test_circle_converged_from_eight_nodes():
    for m in range(8, 40):
        b = run_scenario("circle", m).measurements["bounds"]
        assert abs(b[0] - math.pi) < 1e-12 and abs(b[1] - math.pi) < 1e-12


def test_ex3_9_reports_residuals_without_claiming():
    rep = run_scenario("ex3_9", 6)
    m = rep.measurements
    assert m["max_residual_by_omega0"]["empty"] == 1.0
    assert m["shifted_reading_residual"] == 0.0
    assert "ambiguous" in rep.notes[0]


def test_rows_shape():
    rows = run_scenario("mercedes", 3).rows()
    assert rows and set(rows[0]) == {"scenario", "name", "passed", "measured", "expected", "tol", "comparison"}
