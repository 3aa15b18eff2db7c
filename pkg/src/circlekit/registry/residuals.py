"""Dimensionless residual helpers shared by the catalog.

On the exact backend every helper returns a ``Fraction`` that is zero exactly
when the relation holds; squared forms are used wherever a float residual
would need a square root.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from ..kernel import (
    Circle,
    Line,
    Point,
    Scalar,
    circle_through,
    cross,
    dist2,
    dot,
    is_exact,
    meet_lines,
    norm2,
    power_of_point,
)
from .sampling import Reject


def scale2(points: Iterable[Point]) -> Scalar:
    """Squared diameter of a finite point set (rotation invariant)."""
    pts = [p for p in points if not p.at_infinity]
    best: Scalar = 0
    for P, Q in combinations(pts, 2):
        d = dist2(P, Q)
        if d > best:
            best = d
    return best if best else 1


def scene_scale2(scene: dict) -> Scalar:
    return scale2(v for v in scene.values() if isinstance(v, Point))


def _ratio(num: Scalar, den2: Scalar) -> Scalar:
    """|num| / sqrt(den2) on floats, num² / den2 exactly."""
    if is_exact(num, den2):
        return num * num / den2
    return abs(num) / math.sqrt(den2)


def rel(x: Scalar, unit: Scalar = 1) -> Scalar:
    """|x| / unit (unit already carries the dimension of x)."""
    return abs(x / unit)


def length(P: Point, Q: Point, s2: Scalar) -> Scalar:
    """|PQ| / scale (squared on the exact backend)."""
    d = dist2(P, Q) / s2
    return d if is_exact(d) else math.sqrt(d)


def on_line(P: Point, l: Line, s2: Scalar) -> Scalar:
    v = l.a * P.x + l.b * P.y + l.c
    return _ratio(v, (l.a * l.a + l.b * l.b) * s2)


def on_line_pts(P: Point, Q: Point, R: Point, s2: Scalar) -> Scalar:
    """Distance from P to line QR over scale."""
    return _ratio(cross(R - Q, P - Q), dist2(Q, R) * s2)


def sine(u: Point, v: Point) -> Scalar:
    """|sin| of the angle between two directions (0 when parallel)."""
    return _ratio(cross(u, v), norm2(u) * norm2(v))


def cosine(u: Point, v: Point) -> Scalar:
    """|cos| of the angle between two directions (0 when perpendicular)."""
    return _ratio(dot(u, v), norm2(u) * norm2(v))


def collinear(P: Point, Q: Point, R: Point) -> Scalar:
    """Sine of the angle at P between PQ and PR; well conditioned for far points."""
    best = None
    for X, Y, Z in ((P, Q, R), (Q, R, P), (R, P, Q)):
        u, v = Y - X, Z - X
        d = norm2(u) * norm2(v)
        if best is None or d > best[0]:
            best = (d, u, v)
    d, u, v = best
    if d == 0:
        return 0 * d
    return sine(u, v)


def power(P: Point, C: Circle, s2: Scalar) -> Scalar:
    return abs(power_of_point(P, C)) / s2


def concyclic(points: Sequence[Point], s2: Scalar) -> Scalar:
    """Max |power| of the points with respect to the best-spread circle through three of them."""
    best = None
    for P, Q, R in combinations(points, 3):
        ar = abs(cross(Q - P, R - P))
        if best is None or ar > best[0]:
            best = (ar, P, Q, R)
    if best is None or best[0] == 0:
        raise Reject("points are collinear")
    circ = circle_through(best[1], best[2], best[3])
    return max(abs(power_of_point(X, circ)) for X in points) / s2


def concurrent(l1: Line, l2: Line, l3: Line, s2: Scalar) -> Scalar:
    """Distance from l1 ∩ l2 to l3 over scale; parallel triples use the direction sine."""
    X = meet_lines(l1, l2)
    if X.at_infinity:
        return sine(l3.direction, Point(X.x, X.y))
    return on_line(X, l3, s2)


def equal(values: Sequence[Scalar], unit: Scalar) -> Scalar:
    """Spread of values of one dimension, over ``unit``."""
    return (max(values) - min(values)) / unit


def far(P: Point, ref: Point, s2: Scalar, factor: float = 400.0) -> bool:
    """Point beyond ``sqrt(factor)`` scene diameters from ``ref`` (or at infinity)."""
    return P.at_infinity or float(dist2(P, ref)) > factor * float(s2)


def guard(*points: Point, ref: Point, s2: Scalar, factor: float = 400.0) -> None:
    for P in points:
        if far(P, ref, s2, factor):
            raise Reject("construction point too far away")


def worst(*values: Scalar) -> Scalar:
    return max(values)


def zero_like(x: Scalar) -> Scalar:
    return Fraction(0) if is_exact(x) else 0.0
