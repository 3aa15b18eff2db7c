"""Apollonius circles of rank k and of second rank."""

from __future__ import annotations

import math

from ...centers import cevian_foot_rank_k, harmonic_conjugate, ratio_power
from ...circles import adjoint_circle, apollonius_rank_k
from ...errors import FootAtInfinity
from ...kernel import (
    circle_circle_intersections,
    circle_through,
    cross,
    dist2,
    foot_on_line,
    is_exact,
    join,
    line_through,
    midpoint,
    power_of_point,
    radical_axis,
    reflect_in_line,
    second_intersection,
)
from ..core import register
from ..residuals import (
    collinear,
    cosine,
    equal,
    guard,
    length,
    on_line_pts,
    power,
    scene_scale2,
    sine,
    worst,
)
from ..sampling import Reject
from .common import K_of, O_of, meet, setup, tangent_dir, tri, triangle_scene
from .ruler import isogonal_dir

BOTH = ("float", "rational")


def _rank_circle(T, v, k):
    try:
        return apollonius_rank_k(T, v, k).circle
    except FootAtInfinity:
        raise Reject("rank-k ratio is 1") from None


def _ak1_gen(s):
    A, B, C = s.triangle("scalene")
    k = s.sign() * s.uniform(0.5, 3.0)
    circle = _rank_circle(tri({"A": A, "B": B, "C": C}), "A", k)
    return {"A": A, "B": B, "C": C, "k": k, "M": s.on_circle(circle)}


def _ak1(scene, mutant=False):
    T, s2 = setup(scene)
    A, B, C = T.vertices
    k, M = scene["k"], scene["M"]
    circle = _rank_circle(T, "A", k)
    guard(circle.center, ref=A, s2=s2, factor=2500)
    target = ratio_power(T.c2, T.b2, 2 * k)
    return worst(power(M, circle, dist2(M, circle.center)), abs(dist2(M, B) / dist2(M, C) / target - 1))


register(
    "AK.T1",
    "The rank-k Apollonius circle is the locus MB/MC = (AB/AC)^k",
    _ak1_gen,
)(_ak1)


def _quad_gen(s):
    A, B, C, D = s.convex_quad()
    return {"A": A, "B": B, "C": C, "D": D}


def complete_quad(scene):
    A, B, C, D = (scene[n] for n in "ABCD")
    E = meet(join(A, B), join(C, D))
    F = meet(join(B, C), join(A, D))
    return A, B, C, D, E, F


def _ak2(scene, mutant=False):
    A, B, C, D, E, F = complete_quad(scene)
    s2 = scene_scale2(scene)
    guard(E, F, ref=A, s2=s2)
    return collinear(midpoint(A, C), midpoint(B, D), midpoint(E, F))


register(
    "AK.T2",
    "Newton-Gauss: the midpoints of the three diagonals of a complete quadrilateral are collinear",
    _quad_gen,
    BOTH,
)(_ak2)


def _coaxal(circles, s2):
    CA, CB, CC = circles
    axis = radical_axis(CA, CB)
    # two well separated points of the A/B radical axis must have equal power to the third circle
    feet = [foot_on_line(axis, Z.center) for Z in circles]
    P, Q = max(((P, Q) for i, P in enumerate(feet) for Q in feet[i + 1 :]), key=lambda pq: dist2(*pq))
    if dist2(P, Q) < s2 / 100:
        Q = P + (axis.direction if is_exact(s2) else axis.direction * math.sqrt(s2))
    res = [abs(power_of_point(X, CC) - power_of_point(X, CA)) / s2 for X in (P, Q)]
    return worst(collinear(*(Z.center for Z in circles)), *res)


def _ak3(scene, mutant=False):
    T, s2 = setup(scene)
    ks = [1, 2, 3]
    if not T.exact:
        ks += [scene["k1"], scene["k2"]]
    res = []
    for k in ks:
        circles = [_rank_circle(T, v, k) for v in "ABC"]
        guard(*(Z.center for Z in circles), ref=T.A, s2=s2, factor=2500)
        res.append(_coaxal(circles, s2))
        if T.exact:
            continue
        sides = [T.a2, T.b2, T.c2]
        for W in circle_circle_intersections(circles[0], circles[1]):
            vals = [math.sqrt(dist2(W, V)) * x ** (k / 2) for V, x in zip(T.vertices, sides)]
            res.append(equal(vals, max(vals)))
    return worst(*res)


def _ak3_gen(s):
    A, B, C = s.triangle("scalene" if not s.exact else "heronian scalene")
    return {"A": A, "B": B, "C": C, "k1": s.sign() * s.uniform(0.5, 3.0), "k2": s.sign() * s.uniform(0.5, 3.0)}


register(
    "AK.T3",
    "The three rank-k Apollonius circles share a radical axis; isodynamic points satisfy W_kA·BC^k = W_kB·CA^k = W_kC·AB^k",
    _ak3_gen,
    BOTH,
)(_ak3)


def _ak7(scene, mutant=False):
    T, s2 = setup(scene)
    A, B, C = T.vertices
    circ = T.circumcircle()
    apo2 = _rank_circle(T, "A", 2)
    A3 = cevian_foot_rank_k(T, "A", 3)
    A3x = harmonic_conjugate(A3, B, C)
    if A3x.at_infinity:
        raise Reject("external cevian parallel to BC")
    guard(A3x, apo2.center, ref=A, s2=s2, factor=2500)
    U = second_intersection(join(A, A3), circ, A)
    V = second_intersection(join(A, A3x), circ, A)
    # the rank-3 cevian is the isogonal of the antibisector (isotomic of the bisector)
    foot1 = cevian_foot_rank_k(T, "A", 1)
    anti = B + C - foot1
    iso = isogonal_dir(A, B, C, anti - A)
    return worst(power(U, apo2, s2), power(V, apo2, s2), sine(iso, A3 - A))


register(
    "AK.T7",
    "The rank-2 Apollonius circle meets the circumcircle on the antibisector's isogonal and on its external cevian",
    triangle_scene("heronian scalene"),
    BOTH,
)(_ak7)


def _a2p1(scene, mutant=False):
    T, s2 = setup(scene)
    A, B, C = T.vertices
    apo2 = _rank_circle(T, "A", 2)
    guard(apo2.center, ref=A, s2=s2, factor=2500)
    pts = circle_circle_intersections(apo2, T.circumcircle())
    if len(pts) != 2:
        raise Reject("circles do not meet")
    side = cross(C - B, A - B)
    Q, P = pts if cross(C - B, pts[0] - B) * side > 0 else pts[::-1]
    S = cevian_foot_rank_k(T, "A", 2)
    qb, qc = math.sqrt(dist2(Q, B)), math.sqrt(dist2(Q, C))
    bis = (B - Q) / qb + (C - Q) / qc
    # symmedian foot of QBC on BC
    F = (B * qc * qc + C * qb * qb) / (qb * qb + qc * qc)
    return worst(sine(bis, S - Q), on_line_pts(P, Q, F, s2))


register(
    "A2.P1",
    "QS bisects angle BQC and QP is a symmedian of QBC",
    triangle_scene("scalene"),
)(_a2p1)


def _a2p2(scene, mutant=False):
    T, s2 = setup(scene)
    A, B, C = T.vertices
    O, K = O_of(T), K_of(T)
    c1, c2 = adjoint_circle(T, "B", "A"), adjoint_circle(T, "C", "A")
    # second common point of the adjoint circles: mirror of A in their line of centers
    A2 = reflect_in_line(join(c1.center, c2.center), A)
    apo2 = _rank_circle(T, "A", 2)
    boc = circle_through(B, O, C)
    X = second_intersection(join(A, K), T.circumcircle(), A)
    Sx = meet(line_through(A, tangent_dir(T, "A")), join(B, C))
    guard(Sx, ref=A, s2=s2, factor=2500)
    return worst(
        power(A2, apo2, s2),
        power(A2, boc, s2),
        cosine(A2 - O, K - A),
        length(A2, midpoint(A, X), s2),
        collinear(O, A2, Sx),
    )


register(
    "A2.P2",
    "Adjoint circles at A, the rank-2 A-Apollonius circle and (BOC) pass through A2; OA2 ⟂ AK; A2 bisects the symmedian chord; O, A2, S' collinear",
    triangle_scene("sharpA scalene"),
    BOTH,
)(_a2p2)
