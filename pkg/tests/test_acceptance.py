"""One line per acceptance criterion; run with ``pytest -s`` or as a script to see the report."""

import contextlib
import io
import json
import math
import random
import time
from fractions import Fraction as F

import pytest

from circlekit.centers import CenterId, Triangle, center, cevian_foot_rank_k, harmonic_conjugate
from circlekit.circles import (
    droz_farny,
    lemoine_circle,
    lucas_circle,
    neuberg_circle,
    radical_circle_excircles,
)
from circlekit.cli.main import main
from circlekit.errors import RightAngleCase
from circlekit.kernel import Circle, Point, circles_orthogonal, cross, dist, dist2, dot, power_of_point, rot90
from circlekit.registry import (
    Sampler,
    equal_incircle_cevian,
    fixed_point,
    fixed_point_residual,
    parallelogram_residual,
    run_check,
)
from circlekit.registry.solvers import _bisect_cevian
from circlekit.ruler import BUILTINS, audit, builtin, execute, sample_givens, verify

TOL = 1e-12
REF = (Point(0, 3), Point(0, 0), Point(4, 0))
REF_EXACT = tuple(Point(F(P.x), F(P.y)) for P in REF)


def near(x, y, tol=TOL):
    return abs(x - y) <= tol


def criterion_1():
    t0 = time.perf_counter()
    T = Triangle(*REF)
    res = lemoine_circle(T, "first")
    m = res.metadata
    rl2 = math.sqrt(lemoine_circle(T, "second").circle.r2)
    rl1 = math.sqrt(res.circle.r2)
    ok = (
        near(rl2, 1.2)
        and near(T.tan_omega, 0.48)
        and near(T.R * T.tan_omega, rl2)
        and near(rl1, 0.5 * math.sqrt(7.69))
        and near(m["R_L1_closed_form"], rl1)
        and near(m["R_L1_power_route"], rl1)
    )
    elapsed = time.perf_counter() - t0
    return ok and elapsed < 1, f"R_L2={rl2:.15g} tan={T.tan_omega:.15g} R_L1={rl1:.15g} ({elapsed * 1000:.1f} ms)"


def criterion_2():
    T = Triangle(*REF)
    r1 = math.sqrt(droz_farny(T, "first").circle.r2)
    r2 = math.sqrt(droz_farny(T, "second").circle.r2)
    return near(r1, 2.5) and near(r2, 2.5), f"r1={r1:.15g} r2={r2:.15g}"


def criterion_3():
    c = radical_circle_excircles(Triangle(*REF)).circle
    ok = near(c.center.x, 1.5) and near(c.center.y, 1.0) and near(math.sqrt(c.r2), 0.5 * math.sqrt(37))
    powers = radical_circle_excircles(Triangle(*REF_EXACT)).metadata["powers"]
    exact = all(isinstance(p, F) for p in powers) and powers[0] == powers[1] == powers[2]
    return ok and exact, f"center=({c.center.x:g}, {c.center.y:g}) r={math.sqrt(c.r2):.15g} powers={[str(p) for p in powers]}"


def criterion_4():
    T = Triangle(*REF)
    n = neuberg_circle(T, "A")
    ok_n = (
        near(n.circle.center.x, 2)
        and near(n.circle.center.y, 25 / 6)
        and near(math.sqrt(n.circle.r2), math.sqrt(193) / 6)
        and near(n.metadata["ON"], 8 / 3)
    )
    lu = lucas_circle(T, "A").metadata
    ok_l = near(lu["l_from_height"], 15 / 14) and near(lu["l_from_sides"], 15 / 14) and near(lu["l"], 15 / 14)
    return ok_n and ok_l, f"N_a={n.circle.center.x:.15g},{n.circle.center.y:.15g} ON_a={n.metadata['ON']:.15g} lucas={lu['l']:.15g}"


def criterion_5():
    out = io.StringIO()
    t0 = time.perf_counter()
    with contextlib.redirect_stdout(out):
        code = main(["check", "all", "--seed", "42", "--trials", "300", "--threshold", "1e-7", "--json"])
    elapsed = time.perf_counter() - t0
    reports = [json.loads(l) for l in out.getvalue().splitlines() if l.strip()]
    failures = sum(r["failures"] for r in reports)
    ok = code == 0 and failures == 0 and elapsed <= 120
    return ok, f"exit {code}, {len(reports)} checks, {failures} failures, {elapsed:.1f} s"


MUTATION_CONTROLS = ("L3.P1", "DF1.T3", "LU.T3", "AU.T3", "HQ.ALL")


def criterion_6():
    counts = {cid: run_check(cid, seed=42, trials=300, mutant=True).failures for cid in MUTATION_CONTROLS}
    return all(v >= 295 for v in counts.values()), " ".join(f"{k}:{v}/300" for k, v in counts.items())


def _exact_residuals(T):
    """Identities that must vanish exactly on a rational triangle."""
    A, B, C = T.vertices
    O, H = center(T, CenterId.CIRCUMCENTER), center(T, CenterId.ORTHOCENTER)
    K = center(T, CenterId.SYMMEDIAN_POINT)
    out = {}
    # H from the Sylvester relation must sit on all three altitudes
    out["sylvester"] = max(abs(dot(H - A, C - B)), abs(dot(H - B, A - C)), abs(dot(H - C, B - A)))
    # the circle about a point of the tangent at A through A cuts the circumcircle orthogonally
    X = A + rot90(O - A) * F(3, 7)
    out["orthogonal"] = abs(circles_orthogonal(T.circumcircle(), Circle(X, dist2(X, A))))
    out["df2"] = abs(droz_farny(T, "second").circle.r2 - (T.R2 + dist2(O, H)) / 2) + abs(
        5 * T.R2 - T.sum_sq / 2 - (T.R2 + dist2(O, H)) / 2
    )
    rl2 = T.a2 * T.b2 * T.c2 / T.sum_sq**2
    first = lemoine_circle(T, "first").circle
    out["power_K"] = abs(power_of_point(K, first) + rl2)
    return out


def _rank_k_residuals(T, k):
    A, B, C = T.vertices
    feet = [cevian_foot_rank_k(T, v, k) for v in "ABC"]
    Da, Db, Dc = feet
    ceva = abs(dist2(B, Da) * dist2(C, Db) * dist2(A, Dc) - dist2(Da, C) * dist2(Db, A) * dist2(Dc, B))
    ext = [harmonic_conjugate(X, P, Q) for X, (P, Q) in zip(feet, ((B, C), (C, A), (A, B)))]
    if any(E.at_infinity for E in ext):
        return ceva, F(0)
    E1, E2, E3 = ext
    return ceva, abs(cross(E2 - E1, E3 - E1))


def criterion_7():
    worst = {}
    bad_type = 0
    for i in range(100):
        rng = random.Random(f"acceptance-7:{i}")
        T = Triangle(*Sampler(rng, exact=True).triangle("acute"))
        H = Triangle(*Sampler(rng, exact=True).heronian_triangle("scalene"))
        vals = _exact_residuals(T)
        for k in (1, 2, 3):
            vals[f"ceva_k{k}"], vals[f"menelaus_k{k}"] = _rank_k_residuals(H, k)
        for name, v in vals.items():
            bad_type += not isinstance(v, F)
            worst[name] = max(worst.get(name, F(0)), v)
    ok = bad_type == 0 and all(v == 0 for v in worst.values())
    return ok, f"100 triangles, nonzero: {[k for k, v in worst.items() if v != 0] or 'none'}, non-rational: {bad_type}"


def criterion_8():
    reports = {name: verify(builtin(name), trials=300, seed=42) for name in sorted(BUILTINS)}
    verified = all(r.failures == 0 for r in reports.values())
    audited = all(audit(builtin(name)) for name in BUILTINS)
    p = builtin("parallel_to_diameter")
    spread = 0.0
    for cfg in range(5):
        givens, _ = sample_givens("parallel_to_diameter", random.Random(f"acceptance-8:{cfg}"))
        ref = execute(p, givens, seed=0).objects["mn"]
        for seed in range(1, 50):
            l = execute(p, givens, seed=seed).objects["mn"]
            spread = max(spread, abs(l.a - ref.a), abs(l.b - ref.b), abs(l.c - ref.c))
    ok = verified and audited and spread <= 1e-10
    worst = max(float(r.max_residual) for r in reports.values())
    return ok, f"5 builtins x 300 trials, worst residual {worst:.2e}; free-choice spread {spread:.2e}"


def criterion_9():
    worst = 0.0
    for i in range(300):
        T = Triangle(*Sampler(random.Random(f"acceptance-9:{i}")).triangle())
        D, _ = equal_incircle_cevian(T)
        ref = _bisect_cevian(*T.vertices)
        worst = max(worst, dist(D, ref) / math.sqrt(T.a2))
    iso = Triangle(Point(F(1), F(5)), Point(F(-2), F(1)), Point(F(4), F(1)))
    D, _ = equal_incircle_cevian(iso)
    exact_mid = D == Point(F(1), F(1))
    return worst <= 1e-9 and exact_mid, f"max |D - D_bisect|/a = {worst:.2e}; isosceles midpoint exact: {exact_mid}"


def criterion_10():
    A, B = Point(-1.0, 0.0), Point(1.0, 0.0)
    worst = 0.0
    for deg in (30, 60, 120, 150):
        g = math.radians(deg)
        O = Point(0.0, 1 / math.tan(g))
        R = 1 / math.sin(g)
        lo = math.atan2(-O.y, 1.0)
        rng = random.Random(f"acceptance-10:{deg}")
        for _ in range(100):
            phi = lo + rng.uniform(0.02, 0.98) * (math.pi - 2 * lo)
            C = O + Point(math.cos(phi), math.sin(phi)) * R
            worst = max(worst, fixed_point_residual(A, B, C))
    try:
        fixed_point(A, B, math.pi / 2)
        raised = False
    except RightAngleCase:
        raised = True
    rng = random.Random("acceptance-10:90")
    para = max(parallelogram_residual(A, B, Point(math.cos(t), math.sin(t))) for t in (rng.uniform(0.05, 3.09) for _ in range(100)))
    ok = worst <= 1e-8 and raised and para <= 1e-8
    return ok, f"max mediator residual {worst:.2e}; 90 deg raises: {raised}; parallelogram residual {para:.2e}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _report(n, fn):
    ok, detail = fn()
    line = f"ACCEPTANCE {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    return ok, line


@pytest.mark.parametrize("n", range(1, 11))
def test_acceptance(n, capsys):
    ok, line = _report(n, CRITERIA[n - 1])
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    for i, fn in enumerate(CRITERIA, 1):
        print(_report(i, fn)[1])
