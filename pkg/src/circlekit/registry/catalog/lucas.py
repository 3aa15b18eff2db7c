"""Lucas inner circles, Apollonius circles and the Lucas triangle."""

from __future__ import annotations

from ...centers import DerivedTriangleId, derived_points
from ...circles import apollonius_rank_k
from ...kernel import (
    Circle,
    Point,
    circle_through,
    dist2,
    foot_on_line,
    is_exact,
    join,
    line_through,
    midpoint,
    parallel_through,
    perpendicular_through,
    sqrt,
)
from ..core import register
from ..residuals import collinear, concurrent, length, power, rel, worst
from .common import O_of, meet, setup, tangent_dir, triangle_scene

BOTH = ("float", "rational")


def lucas(T, v):
    """Circle through V and the two top corners of the square inscribed on the opposite side."""
    V, P, Q, *_ = T.cyclic(v)
    side = join(P, Q)
    A1 = midpoint(V, P)
    B1 = foot_on_line(side, A1)
    u = A1 - B1
    # a small square on the side, scaled from P until its far corner reaches VQ
    C1 = B1 + Point(u.y, -u.x)
    D1 = C1 + u
    Da = meet(join(P, D1), join(V, Q))
    Aa = meet(parallel_through(side, Da), join(V, P))
    return circle_through(V, Aa, Da)


def tangency(C1, C2, external):
    """Tangency defect of two circles; squared form on the exact backend."""
    d2 = dist2(C1.center, C2.center)
    if is_exact(d2, C1.r2, C2.r2):
        x = d2 - C1.r2 - C2.r2 if external else C1.r2 + C2.r2 - d2
        wrong_side = 0 if x > 0 else 1
        return abs(x * x - 4 * C1.r2 * C2.r2) / (4 * C1.r2 * C2.r2) + wrong_side
    d, r1, r2 = sqrt(d2), sqrt(C1.r2), sqrt(C2.r2)
    target = r1 + r2 if external else abs(r1 - r2)
    return abs(d - target) / (r1 + r2)


def _lut1(scene, mutant=False):
    T, s2 = setup(scene)
    L = {v: lucas(T, v) for v in "ABC"}
    circ = T.circumcircle()
    res = [tangency(L[v], circ, external=False) for v in "ABC"]
    res += [tangency(L[u], L[w], external=True) for u, w in (("A", "B"), ("B", "C"), ("C", "A"))]
    return worst(*res)


register(
    "LU.T1",
    "Lucas circles are internally tangent to the circumcircle and pairwise externally tangent",
    triangle_scene(),
    BOTH,
)(_lut1)


def apollonius_from_bisectors(T, v):
    """Circle on the segment between the internal and external bisector feet from v."""
    V, P, Q, _, n2, m2 = T.cyclic(v)
    n, m = sqrt(n2), sqrt(m2)
    # V P has length m (= prev side), V Q has length n
    inner = (P * n + Q * m) / (n + m)
    outer = (P * n - Q * m) / (n - m)
    Z = midpoint(inner, outer)
    return Z, dist2(Z, inner)


def _lut3(scene, mutant=False):
    T, s2 = setup(scene)
    A, B, C = T.vertices
    Lb, Lc = lucas(T, "B"), lucas(T, "C")
    OA = meet(join(Lb.center, Lc.center), join(B, C))
    Z, r2 = apollonius_from_bisectors(T, "A")
    lb, lc = sqrt(Lb.r2), sqrt(Lc.r2)
    # contact point of the B- and C-Lucas circles; control: the midpoint of LbLc
    N1 = midpoint(Lb.center, Lc.center) if mutant else Lb.center + (Lc.center - Lb.center) * (lb / (lb + lc))
    apo = Circle(Z, r2)
    ratio = dist2(OA, B) * T.b2 * T.b2 / (dist2(OA, C) * T.c2 * T.c2)
    return worst(
        length(OA, Z, s2),
        abs(ratio - 1),
        power(N1, apo, s2),
        *(min(tangency(apo, X, True), tangency(apo, X, False)) for X in (Lb, Lc)),
    )


register(
    "LU.T3",
    "A-Apollonius and B-, C-Lucas circles touch at one point N1; O_A B / O_A C = c²/b²",
    triangle_scene("scalene nonright"),
    mutation="take N1 at the midpoint of LbLc instead of the contact point",
)(_lut3)


def _lup1(scene, mutant=False):
    T, s2 = setup(scene)
    A, B, C = T.vertices
    O = O_of(T)
    L = {v: lucas(T, v).center for v in "ABC"}
    res = [concurrent(join(A, L["A"]), join(B, L["B"]), join(C, L["C"]), s2)]
    axis = []
    for v, (u, w) in zip("ABC", (("B", "C"), ("C", "A"), ("A", "B"))):
        X = meet(join(L[u], L[w]), T.side_line(v))
        # Apollonius center: where the tangent at v meets the opposite side
        Z = meet(line_through(T.vertex(v), tangent_dir(T, v)), T.side_line(v))
        res.append(length(X, Z, s2))
        axis.append(X)
    res.append(collinear(*axis))
    res.append(length(meet(join(A, L["A"]), join(B, L["B"])), O, s2))
    return worst(*res)


register(
    "LU.P1",
    "ABC and the Lucas triangle are homological with center O and axis the Apollonius-center line",
    triangle_scene("scalene nonright"),
    BOTH,
)(_lup1)


def _lup2(scene, mutant=False):
    T, s2 = setup(scene)
    L = [lucas(T, v).center for v in "ABC"]
    TT = derived_points(T, DerivedTriangleId.TANGENTIAL)

    def perps(src, dst):
        return [perpendicular_through(join(dst[(i + 1) % 3], dst[(i + 2) % 3]), src[i]) for i in range(3)]

    return worst(concurrent(*perps(TT, L), s2), concurrent(*perps(L, TT), s2))


register(
    "LU.P2",
    "Tangential and Lucas triangles are orthological both ways",
    triangle_scene("scalene nonright"),
    BOTH,
)(_lup2)


def _lur2(scene, mutant=False):
    T, s2 = setup(scene)
    apo = apollonius_rank_k(T, "A", 1).circle
    luc = lucas(T, "A")
    d2 = dist2(apo.center, luc.center)
    return rel(d2 - apo.r2 - luc.r2, s2)


register(
    "LU.R2",
    "The A-Apollonius circle is orthogonal to the A-Lucas circle",
    triangle_scene("heronian scalene"),
    BOTH,
)(_lur2)
