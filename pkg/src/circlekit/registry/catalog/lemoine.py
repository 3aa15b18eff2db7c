"""Lemoine circles: constructions, radii, radical axis, generalized circles."""

from __future__ import annotations

from ...kernel import (
    Circle,
    circle_through,
    dist2,
    join,
    line_through,
    midpoint,
    parallel_through,
    radical_axis,
)
from ..core import register
from ..residuals import concyclic, cosine, equal, length, on_line, on_line_pts, scale2, sine, worst
from ..sampling import Reject
from .common import G_of, K_of, O_of, antiparallel, meet, setup, tangent_dir, triangle_scene

BOTH = ("float", "rational")


def first_chain(T, K):
    """Parallel / antiparallel chain through K: A1A2 ∥ BC, A2B1 anti AB, B1B2 ∥ AC, B2C1 anti BC, C1C2 ∥ AB."""
    A, B, C = T.vertices
    AB, BC, CA = join(A, B), join(B, C), join(C, A)
    l1 = parallel_through(BC, K)
    A1, A2 = meet(l1, AB), meet(l1, CA)
    B1 = meet(antiparallel(T, "C", A2), BC)
    l2 = parallel_through(CA, B1)
    B2 = meet(l2, AB)
    C1 = meet(antiparallel(T, "A", B2), CA)
    l3 = parallel_through(AB, C1)
    C2 = meet(l3, BC)
    return (A1, A2, B1, B2, C1, C2), (l2, l3)


def second_chain(T, K):
    """A1A2 anti BC through K, A2B1 ∥ AB, B1B2 anti AC, B2C1 ∥ BC, C1C2 anti AB."""
    A, B, C = T.vertices
    AB, BC, CA = join(A, B), join(B, C), join(C, A)
    l1 = antiparallel(T, "A", K)
    A1, A2 = meet(l1, AB), meet(l1, CA)
    B1 = meet(parallel_through(AB, A2), BC)
    l2 = antiparallel(T, "B", B1)
    B2 = meet(l2, AB)
    C1 = meet(parallel_through(BC, B2), CA)
    l3 = antiparallel(T, "C", C1)
    C2 = meet(l3, BC)
    return (A1, A2, B1, B2, C1, C2), (l2, l3)


def side_points_first(T, K):
    """For each vertex V (cyclic V, P, Q): points of side PQ on the parallels through K to VP and VQ."""
    out = {}
    for v in "ABC":
        V, P, Q, *_ = T.cyclic(v)
        side = join(P, Q)
        X = meet(parallel_through(join(V, P), K), side)
        Y = meet(parallel_through(join(V, Q), K), side)
        out[v] = (V, P, Q, X, Y)
    return out


def side_points_second(T, K):
    out = {}
    for v in "ABC":
        V, P, Q, *_ = T.cyclic(v)
        side = join(P, Q)
        # antiparallel to VQ has the direction of the tangent at P, and vice versa
        X = meet(line_through(K, tangent_dir(T, _name(T, Q))), side)
        Y = meet(line_through(K, tangent_dir(T, _name(T, P))), side)
        out[v] = (V, P, Q, X, Y)
    return out


def _name(T, P):
    return next(n for n, V in zip("ABC", T.vertices) if V is P)


def _l1t1(scene, mutant=False):
    T, s2 = setup(scene)
    K = K_of(T)
    (A1, A2, B1, B2, C1, C2), (l2, l3) = first_chain(T, K)
    return worst(
        sine(A1 - C2, tangent_dir(T, "B")),
        on_line(K, l2, s2),
        on_line(K, l3, s2),
        concyclic([A1, A2, B1, B2, C1, C2], s2),
    )


register(
    "L1.T1",
    "First Lemoine construction: C2A1 antiparallel to AC, the chain closes through K, six points concyclic",
    triangle_scene(),
    BOTH,
)(_l1t1)


def _l1t2(scene, mutant=False):
    T, s2 = setup(scene)
    K = K_of(T)
    A, B, C = T.vertices
    pts, (l2, l3) = second_chain(T, K)
    A1, A2, B1, B2, C1, C2 = pts
    d = [dist2(K, X) for X in pts]
    return worst(
        sine(A1 - C2, C - A),
        on_line(K, l2, s2),
        on_line(K, l3, s2),
        equal(d, s2),
    )


register(
    "L1.T2",
    "Second Lemoine antiparallel chain closes through K; six points concyclic about K",
    triangle_scene("scalene"),
    BOTH,
)(_l1t2)


def _l1r(scene, mutant=False):
    T, s2 = setup(scene)
    K, O = K_of(T), O_of(T)
    (A1, A2, B1, B2, C1, C2), _ = first_chain(T, K)
    L = circle_through(A1, B1, C1).center
    return length(L, midpoint(O, K), s2)


register("L1.R", "First Lemoine center is the midpoint of OK", triangle_scene(), BOTH)(_l1r)


def _l2t1(scene, mutant=False):
    T, s2 = setup(scene)
    sig = T.sum_sq
    res = []
    for V, P, Q, X, Y in side_points_first(T, K_of(T)).values():
        a2, p2, q2 = dist2(P, Q), dist2(V, P), dist2(V, Q)
        # PX / VP² = XY / PQ² = YQ / VQ² = PQ / Σ, compared as squares
        res.append(abs(dist2(P, X) * sig * sig / (a2 * p2 * p2) - 1))
        res.append(abs(dist2(X, Y) * sig * sig / (a2 * a2 * a2) - 1))
        res.append(abs(dist2(Y, Q) * sig * sig / (a2 * q2 * q2) - 1))
    return worst(*res)


register(
    "L2.T1",
    "First Lemoine circle divides each side as BC2/c² = C2B1/a² = B1C/b²",
    triangle_scene(),
    BOTH,
)(_l2t1)


def _l2c2(scene, mutant=False):
    T, s2 = setup(scene)
    q = []
    for V, P, Q, X, Y in side_points_first(T, K_of(T)).values():
        a2 = dist2(P, Q)
        q.append(dist2(X, Y) / (a2 * a2 * a2))
    return equal(q, max(q))


register("L2.C2", "First Lemoine chords are proportional to the cubes of the sides", triangle_scene(), BOTH)(_l2c2)


def _l2p3(scene, mutant=False):
    T, s2 = setup(scene)
    q = []
    for V, P, Q, X, Y in side_points_second(T, K_of(T)).values():
        a2, p2, q2 = dist2(P, Q), dist2(V, P), dist2(V, Q)
        cos_num = p2 + q2 - a2
        # chord² / cos² of the opposite angle
        q.append(dist2(X, Y) * 4 * p2 * q2 / (cos_num * cos_num))
    return equal(q, max(q))


register(
    "L2.P3",
    "Second Lemoine chords are proportional to the cosines of the opposite angles",
    triangle_scene("scalene nonright"),
    BOTH,
)(_l2p3)


def _l3p1(scene, mutant=False):
    T, s2 = setup(scene)
    K, O = K_of(T), O_of(T)
    if dist2(O, K) < s2 / 400:
        raise Reject("O and K nearly coincide")
    (A1, _, B1, _, C1, _), _ = first_chain(T, K)
    first = circle_through(A1, B1, C1)
    (P1, *_), _ = second_chain(T, K)
    second = Circle(K, dist2(K, P1))
    axis = radical_axis(first, second)
    # control: claim the axis is perpendicular to OG at the centroid instead
    X = G_of(T) if mutant else K
    return worst(on_line(X, axis, s2), cosine(axis.direction, X - O))


register(
    "L3.P1",
    "Radical axis of the two Lemoine circles is perpendicular to OK at K",
    triangle_scene("scalene"),
    BOTH,
    mutation="use the centroid G in place of K in the conclusion",
)(_l3p1)


def _l3p2_gen(s):
    O1, O2 = s.point(), s.point()
    if dist2(O1, O2) < 0.01:
        raise Reject("centers too close")
    return {"O1": O1, "O2": O2, "u": s.uniform(0.1, 2.0)}


def _l3p2(scene, mutant=False):
    O1, O2, u = scene["O1"], scene["O2"], scene["u"]
    d2 = dist2(O1, O2)
    s2 = scale2([O1, O2])
    # premise power(O1, C2) = -R1²
    C1 = Circle(O1, u * d2)
    C2 = Circle(O2, d2 * (1 + u))
    axis = radical_axis(C1, C2)
    return worst(on_line(O1, axis, s2), cosine(axis.direction, O2 - O1))


register(
    "L3.P2",
    "If power(O1, C2) = -R1² the radical axis is perpendicular to O1O2 at O1",
    _l3p2_gen,
    BOTH,
)(_l3p2)


def _l4l1(scene, mutant=False):
    T, s2 = setup(scene)
    A, B, C = T.vertices
    K = K_of(T)
    AB, AC = join(A, B), join(A, C)
    # forward: antiparallel MN, midpoint on AK
    M = A + (B - A) * scene["s"]
    N = meet(antiparallel(T, "A", M), AC)
    fwd = on_line_pts(midpoint(M, N), A, K, s2)
    # converse: P on AK is the midpoint of a segment MN with ends on AB, AC; MN is antiparallel
    P = A + (K - A) * scene["t"]
    N2 = meet(parallel_through(AB, P * 2 - A), AC)
    M2 = P * 2 - N2
    conv = worst(on_line(M2, AB, s2), sine(N2 - M2, tangent_dir(T, "A")))
    return worst(fwd, conv)


register(
    "L4.L1",
    "Midpoint of an antiparallel to BC lies on the A-symmedian, and conversely",
    triangle_scene("scalene", s=(0.2, 0.9), t=(0.2, 1.5)),
    BOTH,
)(_l4l1)


def _l4t2(scene, mutant=False):
    T, s2 = setup(scene)
    A, B, C = T.vertices
    K, O = K_of(T), O_of(T)
    if dist2(O, K) < s2 / 400:
        raise Reject("O and K nearly coincide")
    AB, BC, CA = join(A, B), join(B, C), join(C, A)
    M = A + (K - A) * scene["t"]
    lMN, lMP = parallel_through(AB, M), parallel_through(CA, M)
    N, P = meet(lMN, join(B, K)), meet(lMP, join(C, K))
    lNP = join(N, P)
    pts = [meet(lMN, BC), meet(lMN, CA), meet(lMP, AB), meet(lMP, BC), meet(lNP, AB), meet(lNP, CA)]
    if scale2(pts) < s2 / 100:
        raise Reject("six points bunched together")
    Z = circle_through(pts[0], pts[2], pts[4]).center
    return worst(sine(P - N, C - B), concyclic(pts, s2), on_line_pts(Z, O, K, s2))


register(
    "L4.T2",
    "Parallels through M on AK: NP ∥ BC, six concyclic points, center on OK",
    triangle_scene("scalene", t=(0.1, 0.9)),
    BOTH,
)(_l4t2)
