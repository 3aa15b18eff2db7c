"""Two constructive problems: the equal-incircle cevian and the fixed point of a PQ mediator."""

from __future__ import annotations

import math

from ..centers import CenterId, Triangle, center
from ..errors import ConstructionMismatch, RightAngleCase
from ..kernel import (
    Circle,
    Point,
    Scalar,
    cross,
    dist,
    dist2,
    dot,
    join,
    line_circle_intersections,
    meet_lines,
    midpoint,
    perpendicular_bisector,
    perpendicular_through,
    rot90,
    second_intersection,
    to_float,
)

AGREEMENT = 1e-9


def _inradius(A: Point, B: Point, C: Point) -> float:
    area = abs(cross(B - A, C - A)) / 2
    return area / ((dist(A, B) + dist(B, C) + dist(C, A)) / 2)


def _float_triangle(T: Triangle) -> tuple[Point, Point, Point]:
    return tuple(Point(to_float(P.x), to_float(P.y)) for P in T.vertices)


def _bisect_cevian(A: Point, B: Point, C: Point, tol: float = 1e-13) -> Point:
    """Root of r(ABD) - r(ACD) along BC; the difference grows with BD."""
    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        t = (lo + hi) / 2
        D = B + (C - B) * t
        if _inradius(A, B, D) < _inradius(A, D, C):
            lo = t
        else:
            hi = t
    return B + (C - B) * ((lo + hi) / 2)


def _construct_cevian(A: Point, B: Point, C: Point) -> Point:
    T = Triangle(A, B, C)
    I = center(T, CenterId.INCENTER)
    circ = T.circumcircle()
    # 1: bisector from A meets the circumcircle again at the arc midpoint P
    P = second_intersection(join(A, I), circ, A)
    # 2-3: circle through B, C tangent to CP at C; A' its point on the bisector on A's side
    O1 = meet_lines(perpendicular_through(join(C, P), C), perpendicular_bisector(B, C))
    side = cross(C - B, A - B)
    hits = [X for X in line_circle_intersections(join(A, I), Circle(O1, dist2(O1, C))) if cross(C - B, X - B) * side > 0]
    A1 = hits[0]
    # 4-5: the homothety about I taking A' to A carries B, C onto BI, CI
    k = dot(A - I, A1 - I) / dist2(A1, I)
    I1 = I + (B - I) * k
    I2 = I + (C - I) * k
    # 6: D on the median AM of I1 A I2
    return meet_lines(join(A, midpoint(I1, I2)), join(B, C))


def equal_incircle_cevian(T: Triangle) -> tuple[Point, Scalar]:
    """Point D of BC with r(ABD) = r(ACD), and that common inradius."""
    A, B, C = T.vertices
    if dist2(A, B) == dist2(A, C) or T.tol.is_zero(dist2(A, B) - dist2(A, C), dim=2):
        D = midpoint(B, C)
        return D, _inradius(*_float_triangle(Triangle(A, B, D)))
    A, B, C = _float_triangle(T)
    D = _construct_cevian(A, B, C)
    D2 = _bisect_cevian(A, B, C)
    if dist(D, D2) > AGREEMENT * dist(B, C):
        raise ConstructionMismatch(f"construction and bisection disagree by {dist(D, D2):.3g}")
    return D, _inradius(A, B, D)


def fixed_point(A: Point, B: Point, gamma: float, toward: Point | None = None) -> Point:
    """Fixed point of the PQ mediators for C seeing AB under ``gamma`` on the side of ``toward``.

    Without ``toward`` the arc lies to the left of A -> B.
    """
    if not 0 < gamma < math.pi:
        raise ValueError("gamma must lie strictly between 0 and pi")
    if math.isclose(gamma, math.pi / 2, abs_tol=1e-12):
        raise RightAngleCase("ABPQ is a parallelogram")
    A, B = Point(to_float(A.x), to_float(A.y)), Point(to_float(B.x), to_float(B.y))
    normal = rot90(B - A)
    if toward is not None and cross(B - A, toward - A) < 0:
        normal = -normal
    # D sees AB under |90 deg - gamma|, across AB from the arc when gamma is acute
    apex = abs(math.pi / 2 - gamma)
    h = dist(A, B) / 2 / math.tan(apex / 2)
    sign = -1 if gamma < math.pi / 2 else 1
    return midpoint(A, B) + normal * (sign * h / dist(A, B))


def fixed_point_figure(A: Point, B: Point, C: Point) -> dict[str, Point]:
    """Incircle contacts E on BC, F on AC, and the points P, Q built from them."""
    T = Triangle(A, B, C)
    A, B, C = (Point(to_float(X.x), to_float(X.y)) for X in (A, B, C))
    I = Point(*(to_float(v) for v in center(T, CenterId.INCENTER)))
    a, b, c = dist(B, C), dist(C, A), dist(A, B)
    p = (a + b + c) / 2
    E = B + (C - B) * ((p - b) / a)
    F = A + (C - A) * ((p - a) / b)
    P = E + (E - I) * ((p - a) / dist(E, I))
    Q = F + (F - I) * ((p - b) / dist(F, I))
    return {"A": A, "B": B, "C": C, "I": I, "E": E, "F": F, "P": P, "Q": Q}


def fixed_point_residual(A: Point, B: Point, C: Point) -> float:
    """Worst of |PB - QA| and the distance from the predicted D to the PQ mediator, over AB."""
    fig = fixed_point_figure(A, B, C)
    A, B, C, P, Q = (fig[k] for k in "ABCPQ")
    c = dist(A, B)
    u, v = A - C, B - C
    gamma = math.acos(max(-1.0, min(1.0, dot(u, v) / (dist(A, C) * dist(B, C)))))
    D = fixed_point(A, B, gamma, toward=C)
    med = perpendicular_bisector(P, Q)
    off = abs(med.a * D.x + med.b * D.y + med.c) / math.hypot(med.a, med.b)
    return max(abs(dist(P, B) - dist(Q, A)) / c, off / c)


def parallelogram_residual(A: Point, B: Point, C: Point) -> float:
    """How far ABPQ is from a parallelogram (zero when the angle at C is right)."""
    fig = fixed_point_figure(A, B, C)
    d = (fig["B"] - fig["A"]) - (fig["P"] - fig["Q"])
    return math.hypot(d.x, d.y) / dist(fig["A"], fig["B"])


def trapezoid_residual(A: Point, B: Point, C: Point) -> float:
    """For C at the arc midpoint: PQ parallel to AB and PB = QA."""
    fig = fixed_point_figure(A, B, C)
    A, B, P, Q = (fig[k] for k in "ABPQ")
    par = abs(cross(B - A, P - Q)) / (dist(A, B) * dist(P, Q))
    return max(par, abs(dist(P, B) - dist(Q, A)) / dist(A, B))
