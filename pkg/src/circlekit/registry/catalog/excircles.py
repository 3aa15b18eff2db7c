"""Excircle radical circle and polars of a radical center."""

from __future__ import annotations

from ...centers import CenterId, center
from ...kernel import (
    Circle,
    circle_through,
    dist2,
    join,
    line_through,
    midpoint,
    polar_line,
    power_of_point,
    radical_center,
    rot90,
)
from ..core import register
from ..residuals import collinear, guard, length, rel, worst
from ..sampling import Reject
from .common import meet, setup, triangle_scene

BOTH = ("float", "rational")


def _et1(scene, mutant=False):
    T, s2 = setup(scene)
    X = radical_center(*(T.excircle(v) for v in "ABC"))
    return length(X, center(T, CenterId.SPIEKER), s2)


register(
    "E.T1",
    "Radical center of the three excircles is the Spieker point",
    triangle_scene("heronian"),
    BOTH,
)(_et1)


def _et2(scene, mutant=False):
    T, s2 = setup(scene)
    A, B, C = T.vertices
    X = radical_center(T.incircle(), T.excircle("B"), T.excircle("C"))
    A1, B1, C1 = midpoint(B, C), midpoint(C, A), midpoint(A, B)
    # medial sides are a/2, b/2, c/2; the A1-excenter has weights (-a, b, c)
    Sa = (A1 * (-T.a) + B1 * T.b + C1 * T.c) / (T.b + T.c - T.a)
    return length(X, Sa, s2)


register(
    "E.T2",
    "Radical center of (I), (Ib), (Ic) is the A1-excenter of the medial triangle",
    triangle_scene("heronian"),
    BOTH,
)(_et2)


def _et3(scene, mutant=False):
    T, s2 = setup(scene)
    Sp = center(T, CenterId.SPIEKER)
    target = (T.r * T.r + T.p * T.p) / 4
    return worst(*(rel(power_of_point(Sp, T.excircle(v)) - target, s2) for v in "ABC"))


register(
    "E.T3",
    "Tangent length from the Spieker point to each excircle is ½√(r²+p²)",
    triangle_scene("heronian"),
    BOTH,
)(_et3)


def _pt1_gen(s):
    A, B, C = s.triangle()
    return {"A": A, "B": B, "C": C, "sa": s.uniform(-1.5, 1.5), "sb": s.uniform(-1.5, 1.5), "sc": s.uniform(-1.5, 1.5)}


def _pt1(scene, mutant=False):
    T, s2 = setup(scene)
    A, B, C = T.vertices
    circles = []
    for (P, Q), k in (((B, C), scene["sa"]), ((C, A), scene["sb"]), ((A, B), scene["sc"])):
        Z = midpoint(P, Q) + rot90(Q - P) * k
        circles.append((Circle(Z, dist2(Z, P)), join(P, Q)))
    R = radical_center(*(c for c, _ in circles))
    if R.at_infinity or any(power_of_point(R, c) <= s2 / 1000 for c, _ in circles):
        raise Reject("radical center not outside all three circles")
    guard(R, ref=A, s2=s2)
    pts = [meet(polar_line(R, c), side) for c, side in circles]
    guard(*pts, ref=A, s2=s2)
    return collinear(*pts)


register(
    "P.T1",
    "Polars of an exterior radical center of circles through (B,C), (C,A), (A,B) cut the sides in collinear points",
    _pt1_gen,
    BOTH,
)(_pt1)


def _pt2_gen(s):
    A, B, C = s.triangle()
    return {"A": A, "B": B, "C": C, "M": s.point(-1.5, 1.5)}


def _pt2(scene, mutant=False):
    T, s2 = setup(scene)
    A, B, C = T.vertices
    M = scene["M"]
    pts = []
    for P, Q in ((B, C), (C, A), (A, B)):
        area = abs((P - M).x * (Q - M).y - (P - M).y * (Q - M).x)
        if area < s2 / 200:
            raise Reject("M too close to a side line")
        Z = circle_through(M, P, Q).center
        pts.append(meet(line_through(M, rot90(Z - M)), join(P, Q)))
    guard(*pts, ref=A, s2=s2)
    return collinear(*pts)


register(
    "P.T2",
    "Tangents at M to circles (MBC), (MCA), (MAB) cut the sides in collinear points",
    _pt2_gen,
    BOTH,
)(_pt2)
