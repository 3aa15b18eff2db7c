"""Harmonic quadrilaterals and the six-point circle."""

from __future__ import annotations

import math
import random

from ...centers import Triangle, isogonal_conjugate
from ...kernel import (
    Circle,
    cross,
    dist2,
    foot_on_line,
    join,
    line_through,
    midpoint,
    radical_axis,
    rot90,
    second_intersection,
)
from ..core import register
from ..residuals import equal, guard, length, on_line, power, rel, scene_scale2, sine, worst
from ..sampling import Reject
from .common import H_of, K_of, O_of, meet, setup, triangle_scene

BOTH = ("float", "rational")

# 200 fixed convex weights for the minimum-sum test
_WEIGHTS = []
_rng = random.Random(0)
for _ in range(200):
    w = [_rng.random() + 0.02 for _ in range(4)]
    _WEIGHTS.append([x / sum(w) for x in w])
del _rng


def _hq_gen(s):
    A, B, D = s.triangle("scalene")
    return {"A": A, "B": B, "D": D}


def _apollonius(V, P, Q):
    """Apollonius circle of V over segment PQ, built from the two bisector feet."""
    vp, vq = math.sqrt(dist2(V, P)), math.sqrt(dist2(V, Q))
    inner = (P * vq + Q * vp) / (vp + vq)
    outer = (P * vq - Q * vp) / (vq - vp)
    Z = midpoint(inner, outer)
    return Circle(Z, dist2(Z, inner))


def _hq(scene, mutant=False):
    A, B, D = scene["A"], scene["B"], scene["D"]
    s2 = scene_scale2(scene)
    base = Triangle(A, B, D)
    circ = base.circumcircle()
    O = circ.center
    target = midpoint(B, D) if mutant else K_of(base)
    C = second_intersection(join(A, target), circ, A)
    quad = (A, B, C, D)
    for X, Y, Z in ((A, B, D), (C, B, D), (B, A, C), (D, A, C)):
        xy, xz = dist2(X, Y), dist2(X, Z)
        if abs(xy - xz) < 0.1 * max(xy, xz) or min(xy, xz) < 0.01 * s2:
            raise Reject("near-isosceles sub-triangle")
    sides = [(quad[i], quad[(i + 1) % 4]) for i in range(4)]
    lens = [math.sqrt(dist2(P, Q)) for P, Q in sides]
    res = []

    # AB·CD = BC·AD
    res.append(rel(lens[0] * lens[2] - lens[1] * lens[3], lens[0] * lens[2]))

    # each diagonal is a symmedian of the two sub-triangles at its ends
    for V, P, Q, W in ((B, A, C, D), (C, B, D, A), (D, C, A, B), (A, D, B, C)):
        res.append(sine(K_of(Triangle(V, P, Q)) - V, W - V))

    # distances from K to the sides are proportional to the sides
    K = meet(join(A, C), join(B, D))

    def dists(X):
        return [abs(cross(Q - P, X - P)) / L for (P, Q), L in zip(sides, lens)]

    dk = dists(K)
    ratios = [d / L for d, L in zip(dk, lens)]
    res.append(equal(ratios, sum(ratios) / 4))

    # the sum of squared distances is least at K
    area = abs(cross(C - A, D - B)) / 2
    fk = sum(d * d for d in dk)
    res.append(rel(fk - 4 * area * area / sum(L * L for L in lens), fk))
    low = min(sum(d * d for d in dists(A * w[0] + B * w[1] + C * w[2] + D * w[3])) for w in _WEIGHTS)
    res.append(max(0.0, (fk - low) / fk))

    # tangents at the ends of one diagonal meet on the other
    def tangent(V):
        return line_through(V, rot90(O - V))

    P = meet(tangent(B), tangent(D))
    Q = meet(tangent(A), tangent(C))
    guard(P, Q, ref=O, s2=s2, factor=2500)
    res.append(on_line(P, join(A, C), s2))
    res.append(on_line(Q, join(B, D), s2))

    # O is the orthocenter of PKQ
    res.append(length(H_of(Triangle(P, K, Q)), O, s2))

    # the A-Apollonius circle is centred at the external symmedian foot and passes through C
    apo_a = _apollonius(A, B, D)
    Sx = meet(tangent(A), join(B, D))
    guard(Sx, apo_a.center, ref=O, s2=s2, factor=2500)
    res.append(length(apo_a.center, Sx, s2))
    res.append(power(C, apo_a, s2))

    # Apollonius circles of the two ends of a diagonal coincide
    apo_c = _apollonius(C, B, D)
    apo_b = _apollonius(B, A, C)
    apo_d = _apollonius(D, A, C)
    guard(apo_c.center, apo_b.center, apo_d.center, ref=O, s2=s2, factor=2500)
    for X, Y in ((apo_a, apo_c), (apo_b, apo_d)):
        res.append(length(X.center, Y.center, s2))
        res.append(rel(X.r2 - Y.r2, s2))
    axis = radical_axis(apo_a, apo_b)
    res.append(on_line(O, axis, s2))
    res.append(on_line(K, axis, s2))
    return worst(*res)


register(
    "HQ.ALL",
    "Harmonic quadrilateral: products of opposite sides, symmedian diagonals, least-squares point K, tangent meets, PKQ orthocenter, Apollonius circles",
    _hq_gen,
    mutation="C taken on the median through A instead of the symmedian",
)(_hq)


def _sp_gen(s):
    A, B, C = s.triangle("any")
    return {"A": A, "B": B, "C": C, "P1": s.interior(A, B, C, margin=0.08)}


def _feet(T, X):
    return [foot_on_line(T.side_line(v), X) for v in "ABC"]


def _spt1(scene, mutant=False):
    T, s2 = setup(scene)
    P1 = scene["P1"]
    P2 = isogonal_conjugate(T, P1)
    Z = midpoint(P1, P2)
    d = [dist2(Z, F) for F in _feet(T, P1) + _feet(T, P2)]
    return equal(d, s2)


register(
    "SP.T1",
    "Projections of an interior point and its isogonal conjugate on the sides lie on a circle centred at their midpoint",
    _sp_gen,
    BOTH,
)(_spt1)


def _spp2(scene, mutant=False):
    T, s2 = setup(scene)
    H, O = H_of(T), O_of(T)
    Z = midpoint(H, O)
    pts = _feet(T, H) + _feet(T, O) + [midpoint(V, H) for V in T.vertices]
    circle = Circle(Z, dist2(Z, pts[0]))
    return worst(*(power(X, circle, s2) for X in pts))


register(
    "SP.P2",
    "For P1 = H the six projections and the midpoints of AH, BH, CH are concyclic about the nine-point center",
    triangle_scene("acute"),
    BOTH,
)(_spp2)
