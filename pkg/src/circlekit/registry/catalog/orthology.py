"""Orthological triangles, the dual orthocenter theorems and Bobillier transversals."""

from __future__ import annotations

from ...centers import Triangle
from ...kernel import dist2, join, line_through, midpoint, perpendicular_through, rot90
from ..core import register
from ..residuals import collinear, concurrent, cosine, guard, on_line, scale2, worst
from ..sampling import Reject
from .common import G_of, H_of, O_of, meet, setup, tangent_dir, triangle_scene

BOTH = ("float", "rational")


def bobillier(V, M, s2):
    """Points where the perpendiculars at M to MX meet the side opposite X, for each vertex X."""
    out = []
    for i in range(3):
        X, Y, Z = V[i], V[(i + 1) % 3], V[(i + 2) % 3]
        if (M - X).x == 0 and (M - X).y == 0:
            raise Reject("M on a vertex")
        P = meet(line_through(M, rot90(M - X)), join(Y, Z))
        guard(P, ref=M, s2=s2, factor=2500)
        out.append(P)
    return out


def _orp(scene, mutant=False):
    T, s2 = setup(scene)
    A, B, C = T.vertices
    O = O_of(T)
    N9 = midpoint(O, H_of(T))
    tan = {v: line_through(T.vertex(v), tangent_dir(T, v)) for v in "ABC"}
    # tangential vertex opposite v: tangents at the other two vertices
    Tv = {v: meet(tan[w], tan[u]) for v, w, u in (("A", "B", "C"), ("B", "C", "A"), ("C", "A", "B"))}
    guard(*Tv.values(), ref=O, s2=s2, factor=2500)
    Mv = {"A": midpoint(B, C), "B": midpoint(C, A), "C": midpoint(A, B)}
    res = []
    res.append(worst(*(on_line(N9, perpendicular_through(tan[v], Mv[v]), s2) for v in "ABC")))
    res.append(worst(*(on_line(O, perpendicular_through(T.side_line(v), Tv[v]), s2) for v in "ABC")))
    axis_pts = []
    for v, w, u in (("A", "B", "C"), ("B", "C", "A"), ("C", "A", "B")):
        X = meet(join(Mv[w], Mv[u]), join(Tv[w], Tv[u]))
        axis_pts.append(X)
    guard(*axis_pts, ref=O, s2=s2, factor=2500)
    res.append(collinear(*axis_pts))
    far_pair = max(((axis_pts[i], axis_pts[j]) for i, j in ((0, 1), (1, 2), (0, 2))), key=lambda p: dist2(*p))
    res.append(cosine(far_pair[0] - far_pair[1], N9 - O))
    return worst(*res)


register(
    "OR.P",
    "Medial and tangential triangles are orthological with centers O9 and O; the Euler line is perpendicular to their homology axis",
    triangle_scene("scalene nonright"),
    BOTH,
)(_orp)


def _point_gen(kind):
    def gen(s):
        A, B, C = s.triangle(kind)
        return {"A": A, "B": B, "C": C, "Q": s.point(-1.2, 1.2)}

    return gen


def _dot1(scene, mutant=False):
    T, s2 = setup(scene)
    Q = scene["Q"]
    H = H_of(T)
    pts = []
    for v in "ABC":
        V = T.vertex(v)
        if V == Q:
            raise Reject("Q on a vertex")
        X = meet(perpendicular_through(join(V, Q), H), T.side_line(v))
        pts.append(X)
    guard(*pts, ref=H, s2=s2, factor=2500)
    return collinear(*pts)


register(
    "DO.T1",
    "Perpendiculars from H to three concurrent cevians meet the opposite sides in collinear points",
    _point_gen("nonright"),
    BOTH,
)(_dot1)


def _dot2_gen(s):
    A, B, C = s.triangle("any")
    return {"A": A, "B": B, "C": C, "O": s.point(-1.2, 1.2), "U": s.point(-1.5, 1.5), "W": s.point(-1.5, 1.5)}


def _dot2(scene, mutant=False):
    T, s2 = setup(scene)
    O = scene["O"]
    if scene["U"] == scene["W"]:
        raise Reject("transversal undefined")
    trans = join(scene["U"], scene["W"])
    V = T.vertices
    first = bobillier(V, O, s2)
    line1 = join(first[0], first[1]) if first[0] != first[1] else join(first[0], first[2])
    second = [meet(trans, T.side_line(v)) for v in "ABC"]
    guard(*second, ref=O, s2=s2, factor=2500)
    third = []
    for P in second:
        if P == O:
            raise Reject("transversal through O")
        X = meet(perpendicular_through(join(O, P), O), line1)
        third.append(X)
    guard(*third, ref=O, s2=s2, factor=2500)
    cevians = [join(Vx, X) for Vx, X in zip(V, third) if Vx != X]
    if len(cevians) < 3:
        raise Reject("cevian through its own vertex")
    return concurrent(*cevians, s2=s2)


register(
    "DO.T2",
    "Perpendiculars at O to OA2, OB2, OC2 meet the Bobillier transversal of O in A3, B3, C3 with AA3, BB3, CC3 concurrent",
    _dot2_gen,
    BOTH,
)(_dot2)


def _aut1(scene, mutant=False):
    T, s2 = setup(scene)
    return collinear(*bobillier(T.vertices, scene["Q"], s2))


register(
    "AU.T1",
    "Perpendiculars at M to MA, MB, MC meet the opposite sides in three collinear points",
    _point_gen("any"),
    BOTH,
)(_aut1)


def _quad_gen(with_point):
    def gen(s):
        A, B, C, D = s.convex_quad()
        scene = {"A": A, "B": B, "C": C, "D": D}
        if with_point:
            scene["M"] = s.point(-1.2, 1.2)
        return scene

    return gen


def _aut3(scene, mutant=False):
    A, B, C, D = (scene[k] for k in "ABCD")
    s2 = scale2([A, B, C, D])
    E = meet(join(A, B), join(C, D))
    F = meet(join(B, C), join(A, D))
    guard(E, F, ref=A, s2=s2, factor=2500)
    tris = [Triangle(A, B, F), Triangle(A, E, D), Triangle(B, C, E), Triangle(C, D, F)]
    hs = [H_of(t) for t in tris]
    if mutant:
        hs[0] = G_of(tris[0])
    guard(*hs, ref=A, s2=s2, factor=2500)
    newton = midpoint(A, C) - midpoint(B, D)
    pairs = [(hs[i], hs[j]) for i in range(4) for j in range(i + 1, 4)]
    P, Q = max(pairs, key=lambda p: dist2(*p))
    rest = [X for X in hs if X is not P and X is not Q]
    return worst(*(collinear(P, Q, X) for X in rest), cosine(Q - P, newton))


register(
    "AU.T3",
    "The orthocenters of the four triangles of a complete quadrilateral are collinear, on a line perpendicular to the Newton-Gauss line",
    _quad_gen(False),
    BOTH,
    mutation="centroid in place of the orthocenter of ABF",
)(_aut3)


def _aut4(scene, mutant=False):
    A, B, C, D, M = (scene[k] for k in "ABCDM")
    s2 = scale2([A, B, C, D, M])
    lines = []
    for V in ((A, B, C), (B, C, D), (C, D, A), (D, A, B)):
        P, Q, _ = bobillier(V, M, s2)
        if P == Q:
            raise Reject("transversal undefined")
        lines.append(join(P, Q))
    return worst(concurrent(lines[0], lines[1], lines[2], s2), concurrent(lines[0], lines[1], lines[3], s2))


register(
    "AU.T4",
    "The Bobillier transversals of M in the four triangles of a quadrilateral are concurrent",
    _quad_gen(True),
    BOTH,
)(_aut4)
