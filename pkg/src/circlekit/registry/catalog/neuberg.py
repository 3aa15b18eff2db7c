"""Neuberg circles and the Neuberg triangle."""

from __future__ import annotations

from ...centers import Triangle
from ...kernel import Circle, circles_orthogonal, cross, dist2, midpoint, rot90, sqrt
from ..core import register
from ..residuals import power as rel_power, rel, worst
from .common import O_of, setup, triangle_scene

BOTH = ("float", "rational")


def neuberg(T, v):
    """Center on the perpendicular bisector of the opposite side, seeing it under 2ω, plus radius²."""
    V, P, Q, opp2, _, _ = T.cyclic(v)
    cot = T.cot_omega
    N = midpoint(P, Q) + rot90(Q - P) * (cot / 2)
    return Circle(N, opp2 * (cot * cot - 3) / 4)


def _np1(scene, mutant=False):
    T, s2 = setup(scene)
    O = O_of(T)
    S16 = 16 * T.S * T.S
    res = []
    on2 = {}
    for v in "ABC":
        opp2 = T.cyclic(v)[3]
        on2[v] = dist2(O, neuberg(T, v).center)
        res.append(abs(on2[v] * S16 / (opp2 * opp2 * opp2) - 1))
    res.append(abs(on2["A"] * on2["B"] * on2["C"] / (T.R2 * T.R2 * T.R2) - 1))
    total = sum(sqrt(on2[v] / T.cyclic(v)[3]) for v in "ABC")
    res.append(rel(total - T.cot_omega, T.cot_omega))
    return worst(*res)


register(
    "N.P1",
    "ON_a : ON_b : ON_c = a³ : b³ : c³, ON_a·ON_b·ON_c = R³, Σ ON_a/a = cot ω",
    triangle_scene(),
    BOTH,
)(_np1)


def _np2(scene, mutant=False):
    T, s2 = setup(scene)
    S16 = 16 * T.S * T.S
    res = []
    for u, w in (("A", "B"), ("B", "C"), ("C", "A")):
        x2, y2, z2 = T.cyclic(u)[3], T.cyclic(w)[3], T.sum_sq - T.cyclic(u)[3] - T.cyclic(w)[3]
        closed = ((x2 + y2) * (x2 * x2 + y2 * y2) - x2 * y2 * z2) / S16
        res.append(rel(dist2(neuberg(T, u).center, neuberg(T, w).center) - closed, s2))
    return worst(*res)


register(
    "N.P2",
    "N_aN_b² = ((a²+b²)(a⁴+b⁴) − a²b²c²) / 16S²",
    triangle_scene(),
    BOTH,
)(_np2)


def _np4(scene, mutant=False):
    T, s2 = setup(scene)
    return rel(circles_orthogonal(neuberg(T, "B"), neuberg(T, "C")), s2)


register(
    "N.P4",
    "For a right angle at A the B- and C-Neuberg circles are orthogonal",
    triangle_scene("right"),
    BOTH,
)(_np4)


def _nloc_gen(s):
    A, B, C = s.triangle()
    circle = neuberg(Triangle(A, B, C), "A")
    return {"A": A, "B": B, "C": C, "M": s.on_circle(circle, anchor=A)}


def _nloc(scene, mutant=False):
    T, s2 = setup(scene)
    A, B, C = T.vertices
    M = scene["M"]
    circle = neuberg(T, "A")
    area4 = 2 * abs(cross(B - M, C - M))
    cot_m = (dist2(B, C) + dist2(M, B) + dist2(M, C)) / area4
    return worst(rel_power(M, circle, s2), rel(cot_m - T.cot_omega, T.cot_omega))


register(
    "N.LOC",
    "Points of the A-Neuberg circle form with BC triangles with Brocard angle ω",
    _nloc_gen,
    BOTH,
)(_nloc)
