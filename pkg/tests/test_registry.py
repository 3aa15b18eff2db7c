import json
import math
import re
from fractions import Fraction as F

import pytest

from circlekit.errors import BackendUnsupported, UnknownCheck
from circlekit.registry import get_check, list_checks, run_check
from circlekit.registry.core import sample_scene, transform_scene

MUTATION_CONTROLS = ("L3.P1", "DF1.T3", "LU.T3", "AU.T3", "HQ.ALL")


def test_catalog_shape():
    checks = list_checks()
    ids = [c.id for c in checks]
    assert len(ids) == 49
    assert len(set(ids)) == len(ids)
    for c in checks:
        assert re.fullmatch(r"[A-Z0-9]+\.[A-Z0-9]+", c.id), c.id
        assert c.statement and "\n" not in c.statement
        assert c.backend_support in ("float", "rational", "both")


def test_mutation_controls_are_declared():
    assert {c.id for c in list_checks() if c.mutation} == set(MUTATION_CONTROLS)


def test_run_check_df2():
    rep = run_check("DF2.T1", seed=1, trials=300, backend="float", threshold=1e-7)
    assert rep.failures == 0 and rep.trials == 300 and rep.passed
    assert rep.max_residual < 1e-7


def test_float_only_check_rejects_rational():
    with pytest.raises(BackendUnsupported):
        run_check("AK.T1", seed=3, trials=5, backend="rational")


def test_unknown_id():
    with pytest.raises(UnknownCheck):
        run_check("NOPE.X")
    with pytest.raises(UnknownCheck):
        get_check("NOPE.X")


def test_deterministic():
    a = run_check("L1.T1", seed=9, trials=20)
    b = run_check("L1.T1", seed=9, trials=20)
    assert a.to_json() == b.to_json()
    c = run_check("L1.T1", seed=10, trials=20)
    assert c.max_residual != a.max_residual


def test_rational_backend_is_exact():
    rep = run_check("DF2.T1", seed=2, trials=20, backend="rational")
    assert isinstance(rep.max_residual, F) and rep.max_residual == 0
    d = rep.to_dict()
    assert d["max_residual_exact"] == "0"


def test_report_json_roundtrips():
    rep = run_check("N.P1", seed=4, trials=5)
    d = json.loads(rep.to_json())
    assert set(d) >= {"id", "trials", "max_residual", "mean_residual", "failures", "worst_scene", "seed"}
    assert d["worst_scene"]["version"] == "1"


@pytest.mark.parametrize("cid", MUTATION_CONTROLS)
def test_mutants_fail(cid):
    rep = run_check(cid, seed=42, trials=40, mutant=True)
    assert rep.failures >= 39


def test_mutant_needs_control():
    with pytest.raises(ValueError):
        run_check("L1.T1", trials=1, mutant=True)


@pytest.mark.parametrize("check", [c for c in list_checks() if "float" in c.backends], ids=lambda c: c.id)
def test_residual_scale_invariant(check):
    for trial in range(3):
        scene, res = sample_scene(check, 11, trial, False)
        # directions stored as scalars do not rotate with the points
        angle = 2.1 if all(hasattr(v, "x") for v in scene.values()) else 0.0
        moved = check.residual(transform_scene(scene, 37.0, angle, (-400.0, 90.0)), False)
        assert moved < 1e-7 and res < 1e-7
        tiny = check.residual(transform_scene(scene, 1e-3, -angle / 5, (0.01, 0.0)), False)
        assert tiny < 1e-7


@pytest.mark.parametrize("check", [c for c in list_checks() if "rational" in c.backends], ids=lambda c: c.id)
def test_rational_checks_short_run(check):
    rep = run_check(check.id, seed=5, trials=5, backend="rational")
    assert rep.failures == 0
    assert rep.max_residual == 0 and isinstance(rep.max_residual, F)


def test_non_finite_residual_counts_as_failure():
    rep = run_check("L1.T1", seed=1, trials=3, threshold=-1.0)
    assert rep.failures == 3
    assert math.isfinite(rep.to_dict()["max_residual"])
