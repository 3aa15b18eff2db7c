"""Parallels through the vertices: generalized Simson line, Aubert, M'Kensie, Beltrami."""

from __future__ import annotations

from ...kernel import Point, dist2, join, line_through, second_intersection
from ..core import register
from ..residuals import collinear, concurrent, guard, power, sine, worst
from ..sampling import Reject
from .common import meet, setup, tri

BOTH = ("float", "rational")


def cmul(u: Point, v: Point) -> Point:
    return Point(u.x * v.x - u.y * v.y, u.x * v.y + u.y * v.x)


def conj(u: Point) -> Point:
    return Point(u.x, -u.y)


def isogonal_dir(V: Point, P: Point, Q: Point, d: Point) -> Point:
    """Reflection of direction d in the bisector of angle PVQ."""
    return cmul(cmul(P - V, Q - V), conj(d))


def _spread(*pts):
    """The two points farthest apart."""
    best = None
    for i, P in enumerate(pts):
        for Q in pts[i + 1 :]:
            d = dist2(P, Q)
            if best is None or d > best[0]:
                best = (d, P, Q)
    return best[1], best[2]


def _away(X, pts, s2, frac=400):
    if any(dist2(X, V) < s2 / frac for V in pts):
        raise Reject("point too close to a vertex")


def _circle_gen(*, direction: bool = False, phi: bool = False):
    def gen(s):
        A, B, C = s.triangle()
        T = tri({"A": A, "B": B, "C": C})
        scene = {"A": A, "B": B, "C": C, "M": s.on_circle(T.circumcircle(), anchor=A)}
        if phi:
            u = s.unit(15, 165)
            scene["cos_phi"], scene["sin_phi"] = u.x, u.y
        if direction:
            u = s.unit(0, 180)
            scene["dir_x"], scene["dir_y"] = u.x, u.y
        return scene

    return gen


def _rot(d, c, s):
    return Point(c * d.x - s * d.y, s * d.x + c * d.y)


def _equal_angle_points(scene):
    T, s2 = setup(scene)
    A, B, C = T.vertices
    M = scene["M"]
    _away(M, T.vertices, s2)
    c, s = scene["cos_phi"], scene["sin_phi"]
    pts = []
    for P, Q in ((B, C), (C, A), (A, B)):
        pts.append(meet(line_through(M, _rot(Q - P, c, s)), join(P, Q)))
    guard(*pts, ref=A, s2=s2)
    return T, s2, M, pts


def _rl1(scene, mutant=False):
    _, _, _, pts = _equal_angle_points(scene)
    return collinear(*pts)


register(
    "R.L1",
    "Lines from a circumcircle point at equal directed angles to the sides meet them in collinear points",
    _circle_gen(phi=True),
    BOTH,
)(_rl1)


def _rl2(scene, mutant=False):
    T, s2, M, (A1, B1, C1) = _equal_angle_points(scene)
    A = T.A
    if dist2(M, A1) < s2 / 1e4:
        raise Reject("A1 at M")
    A2 = second_intersection(join(M, A1), T.circumcircle(), M)
    if dist2(A, A2) < s2 / 1e4:
        raise Reject("A' at A")
    P, Q = _spread(A1, B1, C1)
    return sine(A2 - A, Q - P)


register(
    "R.L2",
    "With A' the second intersection of MA1 and the circumcircle, AA' ∥ A1B1",
    _circle_gen(phi=True),
    BOTH,
)(_rl2)


def _direction(scene):
    return Point(scene["dir_x"], scene["dir_y"])


def _rt1(scene, mutant=False):
    T, s2 = setup(scene)
    A, B, C = T.vertices
    M, d = scene["M"], _direction(scene)
    circ = T.circumcircle()
    primes = [second_intersection(line_through(V, d), circ, V) for V in T.vertices]
    for X in primes:
        _away(X, [M], s2)
    _away(M, T.vertices, s2)
    pts = [meet(join(M, X), join(P, Q)) for X, (P, Q) in zip(primes, ((B, C), (C, A), (A, B)))]
    guard(*pts, ref=A, s2=s2)
    P, Q = _spread(*pts)
    return worst(collinear(*pts), sine(Q - P, d))


register(
    "R.T1",
    "Aubert: parallels AA', BB', CC' and M on the circle give MA'∩BC, MB'∩CA, MC'∩AB collinear on a parallel to AA'",
    _circle_gen(direction=True),
    BOTH,
)(_rt1)


def _rt2_gen(s):
    A, B, C = s.triangle()
    return {"A": A, "B": B, "C": C, "P1": s.point(-1.5, 1.5), "P2": s.point(-1.5, 1.5)}


def _rt2(scene, mutant=False):
    T, s2 = setup(scene)
    A, B, C = T.vertices
    P1, P2 = scene["P1"], scene["P2"]
    if dist2(P1, P2) < s2 / 25:
        raise Reject("transversal points too close")
    l = join(P1, P2)
    d = l.direction
    circ = T.circumcircle()
    feet = [meet(l, join(P, Q)) for P, Q in ((B, C), (C, A), (A, B))]
    guard(*feet, ref=A, s2=s2)
    lines = []
    for V, X in zip(T.vertices, feet):
        Vp = second_intersection(line_through(V, d), circ, V)
        _away(Vp, [X], s2)
        lines.append(join(X, Vp))
    M = meet(lines[0], lines[1])
    guard(M, ref=A, s2=s2)
    return worst(concurrent(*lines, s2), power(M, circ, s2))


register(
    "R.T2",
    "M'Kensie: chords through the vertices parallel to a transversal give lines A1A', B1B', C1C' concurrent on the circumcircle",
    _rt2_gen,
    BOTH,
)(_rt2)


def _rt3(scene, mutant=False):
    T, s2 = setup(scene)
    A, B, C = T.vertices
    d, M = _direction(scene), scene["M"]
    _away(M, T.vertices, s2)
    tri_ = ((A, B, C), (B, C, A), (C, A, B))
    lines = [line_through(V, isogonal_dir(V, P, Q, d)) for V, P, Q in tri_]
    X = meet(lines[0], lines[1])
    guard(X, ref=A, s2=s2)
    forward = worst(concurrent(*lines, s2), power(X, T.circumcircle(), s2))
    # converse: isogonals of AM, BM, CM are parallel
    dirs = [isogonal_dir(V, P, Q, M - V) for V, P, Q in tri_]
    converse = worst(sine(dirs[0], dirs[1]), sine(dirs[1], dirs[2]))
    return worst(forward, converse)


register(
    "R.T3",
    "Beltrami: isogonals of three parallels through the vertices concur on the circumcircle, and conversely",
    _circle_gen(direction=True),
    BOTH,
)(_rt3)
