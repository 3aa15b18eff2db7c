"""Target predicates of ruler programs, their givens samplers, and the verification loop."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Any, Callable

from ..errors import GeometryError, RulerError
from ..kernel import Circle, Line, Point, cross, dist2, dot, join, line_circle_intersections, line_through, meet_lines
from ..registry.core import MAX_REJECTIONS, CheckReport
from ..registry.sampling import triangle_ok
from .interpreter import RulerScene, execute
from .program import Program


class _Resample(Exception):
    pass


def _sine(u: Point, v: Point) -> float:
    return abs(cross(u, v)) / math.sqrt(dot(u, u) * dot(v, v))


def _off(P: Point, l: Line, unit: float) -> float:
    return abs(l.a * P.x + l.b * P.y + l.c) / math.hypot(l.a, l.b) / unit


def _cmul(u: Point, v: Point) -> Point:
    return Point(u.x * v.x - u.y * v.y, u.x * v.y + u.y * v.x)


def _conj(u: Point) -> Point:
    return Point(u.x, -u.y)


def _second(l: Line, circle: Circle, P: Point) -> Point:
    hits = line_circle_intersections(l, circle)
    return max(hits, key=lambda X: dist2(X, P))


def _turn(u: Point, side: Point) -> Point:
    """Complex number whose argument is the directed angle from ``side`` to ``u``."""
    return _cmul(u, _conj(side))


def _equal_turns(M: Point, feet, sides) -> float:
    turns = [_turn(F - M, s) for F, s in zip(feet, sides)]
    return max(_sine(turns[0], t) for t in turns[1:])


# predicates: residual(objects, output name) -> float

def _parallel_through(objs, out, P, Q):
    l, M, c = objs[out], objs["M"], objs["c"]
    R = math.sqrt(c.r2)
    return max(_sine(l.direction, objs[Q] - objs[P]), _off(M, l, R))


def _parallel_to_diameter(objs, out):
    return _parallel_through(objs, out, "A", "B")


def _parallel_to_line(objs, out):
    return _parallel_through(objs, out, "E", "F")


def _equal_angles(objs, out):
    A, B, C, M = (objs[k] for k in ("A", "B", "C", "M"))
    feet = [objs[k] for k in ("A1", "B1", "C1")]
    R = math.sqrt(objs["c"].r2)
    t = objs[out]
    return max(
        _equal_turns(M, feet, (C - B, A - C, B - A)),
        max(_off(F, t, R) for F in feet),
    )


def _concurrent_on_circle(objs, out):
    c = objs["c"]
    A, B, C, M = (objs[k] for k in ("A", "B", "C", out))
    feet = [objs[k] for k in ("A1", "B1", "C1")]
    R = math.sqrt(c.r2)
    d = feet[1] - feet[0]
    res = [abs(dist2(M, c.center) - c.r2) / c.r2]
    for V, F in zip((A, B, C), feet):
        Vp = _second(line_through(V, d), c, V)
        if dist2(Vp, F) > 1e-12 * c.r2:
            res.append(_off(M, join(F, Vp), R))
    res.append(_equal_turns(M, feet, (C - B, A - C, B - A)))
    return max(res)


def _isogonal(objs, out):
    A, B, C, Ap, A1 = (objs[k] for k in ("A", "B", "C", "Ap", out))
    # reflection of AA' in the bisector at A
    mirror = _cmul(_cmul(B - A, C - A), _conj(Ap - A))
    return _sine(mirror, A1 - A)


# samplers: rng -> (givens, case)

def _circle(rng):
    O = Point(rng.uniform(-1, 1), rng.uniform(-1, 1))
    return O, Circle(O, rng.uniform(0.5, 2.0) ** 2)


def _at(c: Circle, th: float) -> Point:
    r = math.sqrt(c.r2)
    return Point(c.center.x + r * math.cos(th), c.center.y + r * math.sin(th))


def _gap(a: float, b: float) -> float:
    d = abs(a - b) % (2 * math.pi)
    return min(d, 2 * math.pi - d)


def _angles(rng, n, avoid=(), gap=0.15):
    out: list[float] = []
    while len(out) < n:
        th = rng.uniform(0, 2 * math.pi)
        if all(_gap(th, x) > gap for x in list(avoid) + out):
            out.append(th)
    return out


def _triangle(rng, c):
    for _ in range(1000):
        ths = _angles(rng, 3)
        A, B, C = (_at(c, t) for t in ths)
        if cross(B - A, C - A) < 0:
            B, C = C, B
            ths = [ths[0], ths[2], ths[1]]
        if triangle_ok(A, B, C):
            return (A, B, C), ths
    raise _Resample()


def _sample_diameter(rng):
    O, c = _circle(rng)
    a, m = _angles(rng, 2, gap=0.2)
    if _gap(m, a + math.pi) < 0.2:
        raise _Resample()
    A = _at(c, a)
    return {"c": c, "O": O, "A": A, "B": O * 2 - A, "M": _at(c, m)}, None


def _sample_line(rng):
    O, c = _circle(rng)
    R = math.sqrt(c.r2)
    E = O + Point(rng.uniform(-2, 2), rng.uniform(-2, 2)) * R
    F = O + Point(rng.uniform(-2, 2), rng.uniform(-2, 2)) * R
    M = O + Point(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)) * R
    if dist2(E, F) < 0.25 * c.r2 or _off(M, join(E, F), R) < 0.1:
        raise _Resample()
    return {"c": c, "O": O, "E": E, "F": F, "M": M}, None


def _sample_problem1(rng):
    O, c = _circle(rng)
    (A, B, C), ths = _triangle(rng, c)
    (m,) = _angles(rng, 1, avoid=ths)
    return {"c": c, "O": O, "A": A, "B": B, "C": C, "M": _at(c, m)}, None


def _sample_problem2(rng):
    O, c = _circle(rng)
    (A, B, C), _ = _triangle(rng, c)
    t, s = rng.uniform(-0.6, 1.6), rng.uniform(-0.6, 1.6)
    if min(abs(t), abs(t - 1), abs(s), abs(s - 1)) < 0.1:
        raise _Resample()
    A1, B1 = B + (C - B) * t, C + (A - C) * s
    if _sine(B1 - A1, B - A) < 0.1:
        raise _Resample()
    C1 = meet_lines(join(A1, B1), join(A, B))
    if dist2(C1, O) > 25 * c.r2:
        raise _Resample()
    return {"c": c, "O": O, "A": A, "B": B, "C": C, "A1": A1, "B1": B1, "C1": C1}, None


def _sample_problem3(rng):
    O, c = _circle(rng)
    (A, B, C), ths = _triangle(rng, c)
    (a,) = _angles(rng, 1, avoid=ths)
    Ap = _at(c, a)
    side = cross(C - B, A - B)
    if cross(C - B, Ap - B) * side < 0:
        case = "BC"
    elif cross(B - A, Ap - A) * cross(B - A, C - A) < 0:
        case = "AB"
    else:
        case = "AC"
    return {"c": c, "O": O, "A": A, "B": B, "C": C, "Ap": Ap}, case


@dataclass(frozen=True)
class Predicate:
    id: str
    statement: str
    residual: Callable[[dict[str, Any], str], float]
    sample: Callable[[random.Random], tuple[dict[str, Any], str | None]]


PREDICATES = {
    p.id: p
    for p in (
        Predicate("parallel_to_diameter", "the output line passes through M parallel to AB", _parallel_to_diameter, _sample_diameter),
        Predicate("parallel_to_line", "the output line passes through M parallel to EF", _parallel_to_line, _sample_line),
        Predicate(
            "equal_angles",
            "MA1, MB1, MC1 make equal directed angles with BC, CA, AB and A1, B1, C1 lie on the output line",
            _equal_angles,
            _sample_problem1,
        ),
        Predicate(
            "concurrent_on_circle",
            "M lies on the circle and on A1A', B1B', C1C' (parallels to the transversal), seeing the sides under equal angles",
            _concurrent_on_circle,
            _sample_problem2,
        ),
        Predicate("isogonal", "AA1 is the isogonal of AA'", _isogonal, _sample_problem3),
    )
}


def evaluate(program: Program, scene: RulerScene) -> float:
    if program.output is None:
        raise RulerError("the program declares no output")
    out, pid = program.output
    return PREDICATES[pid].residual(scene.objects, out)


def sample_givens(pid: str, rng: random.Random) -> tuple[dict[str, Any], str | None]:
    pred = PREDICATES[pid]
    for _ in range(MAX_REJECTIONS):
        try:
            return pred.sample(rng)
        except _Resample:
            continue
    raise RulerError(f"could not sample givens for {pid}")


def verify(program: Program, trials: int = 300, seed: int = 42, threshold: float = 1e-7) -> CheckReport:
    """Execute on random admissible givens; degenerate draws are resampled like catalog scenes."""
    if program.output is None:
        raise RulerError("the program declares no output")
    pid = program.output[1]
    if pid not in PREDICATES:
        raise RulerError(f"unknown predicate {pid!r}")
    worst, worst_doc, total, failures = -1.0, {}, 0.0, 0
    for i in range(trials):
        rng = random.Random(f"ruler:{program.name}:{seed}:{i}")
        res, doc = math.inf, {}
        for _ in range(MAX_REJECTIONS):
            givens, case = sample_givens(pid, rng)
            try:
                scene = execute(program, givens, rng.getrandbits(64), case)
                res = evaluate(program, scene)
            except GeometryError:
                continue
            doc = scene.to_document().to_dict()
            break
        failures += not res <= threshold
        total += res
        if res > worst:
            worst, worst_doc = res, doc
    return CheckReport(f"ruler:{program.name}", trials, max(worst, 0.0), total / trials if trials else 0.0, failures, worst_doc, seed)
