"""Droz-Farny circles and their generalizations."""

from __future__ import annotations

from ...kernel import Circle, dist2, foot_on_line, join, line_circle_intersections, midpoint
from ..core import register
from ..residuals import concyclic, equal, rel, worst
from ..sampling import Reject
from .common import G_of, H_of, O_of, setup, triangle_scene

# a perturbed (non-qualifying) configuration must miss concyclicity by this much
COUNTER_MARGIN = 1e-6


def _cut(circle, side):
    pts = line_circle_intersections(side, circle)
    if len(pts) != 2:
        raise Reject("circle misses its side")
    return pts


def _perturb_gen(kind, lo, hi):
    def gen(s):
        A, B, C = s.triangle(kind)
        scene = {"A": A, "B": B, "C": C, "u": s.uniform(lo, hi)}
        for i in (1, 2, 3):
            scene[f"e{i}"] = s.sign() * s.uniform(0.05, 0.3)
        return scene

    return gen


def _df1t1_gen(s):
    A, B, C = s.triangle("nonright")
    return {"A": A, "B": B, "C": C, "u": s.uniform(0.05, 2.0)}


def _df1t1(scene, mutant=False):
    T, s2 = setup(scene)
    H, O = H_of(T), O_of(T)
    mids = []
    for v in "ABC":
        V, P, Q, *_ = T.cyclic(v)
        mids.append((V, join(midpoint(V, P), midpoint(V, Q))))
    D2 = max(dist2(H, foot_on_line(l, H)) for _, l in mids)
    RH2 = D2 * (1 + scene["u"])
    target = RH2 + (T.R2 - dist2(O, H)) / 2
    res = []
    for V, l in mids:
        for X in _cut(Circle(H, RH2), l):
            res.append(rel(dist2(V, X) - target, s2))
    return worst(*res)


register(
    "DF1.T1",
    "A circle about H cuts the midlines in points equidistant from the vertices: AP1² = R_H² + ½(R² − OH²)",
    _df1t1_gen,
)(_df1t1)


def _feet(T):
    out = []
    for v in "ABC":
        V, P, Q, *_ = T.cyclic(v)
        side = join(P, Q)
        out.append((foot_on_line(side, V), side))
    return out


def _df1t3(scene, mutant=False):
    T, s2 = setup(scene)
    H, O = H_of(T), O_of(T)
    # control: circles through the centroid instead of O
    through = G_of(T) if mutant else O
    pts = []
    for F, side in _feet(T):
        pts.extend(_cut(Circle(F, dist2(F, through)), side))
    target = (T.R2 + dist2(O, H)) / 2
    return worst(concyclic(pts, s2), *(rel(dist2(H, X) - target, s2) for X in pts))


register(
    "DF1.T3",
    "Circles at the altitude feet through O cut the sides in six points of the first Droz-Farny circle",
    triangle_scene("acute"),
    mutation="circles through the centroid G instead of O",
)(_df1t3)


def _six(T, centers, r2s):
    pts = []
    for (F, side), r2 in zip(centers, r2s):
        pts.extend(_cut(Circle(F, r2), side))
    return pts


def _df1t4(scene, mutant=False):
    T, s2 = setup(scene)
    H, O = H_of(T), O_of(T)
    feet = _feet(T)
    k = scene["u"] * min(dist2(F, O) for F, _ in feet)
    # power of O is -k for all three circles, so O is their radical center
    r2s = [dist2(F, O) + k for F, _ in feet]
    pts = _six(T, feet, r2s)
    forward = worst(concyclic(pts, s2), equal([dist2(H, X) for X in pts], s2))
    bent = [r2 * (1 + scene[f"e{i}"]) for i, r2 in zip((1, 2, 3), r2s)]
    counter = concyclic(_six(T, feet, bent), s2)
    return forward + max(0.0, COUNTER_MARGIN - counter)


register(
    "DF1.T4",
    "Altitude-feet circles with radical center O cut the sides in six points concyclic about H",
    _perturb_gen("acute", -0.5, 2.0),
)(_df1t4)


def _mids(T):
    out = []
    for v in "ABC":
        V, P, Q, *_ = T.cyclic(v)
        out.append((midpoint(P, Q), join(P, Q)))
    return out


def _df2t1(scene, mutant=False):
    T, s2 = setup(scene)
    H, O = H_of(T), O_of(T)
    R22 = 5 * T.R2 - T.sum_sq / 2
    res = [rel(R22 - (T.R2 + dist2(O, H)) / 2, s2)]
    for M, side in _mids(T):
        # X on the side with MX = MH, and OM ⟂ side, so OX² = OM² + MH²
        res.append(rel(dist2(O, M) + dist2(M, H) - R22, s2))
        if not T.exact:
            res.extend(rel(dist2(O, X) - R22, s2) for X in _cut(Circle(M, dist2(M, H)), side))
    return worst(*res)


register(
    "DF2.T1",
    "Midpoint circles through H cut the sides in six points concyclic about O, R2² = 5R² − ½Σa²",
    triangle_scene("nonright"),
    ("float", "rational"),
)(_df2t1)


def _df2p2(scene, mutant=False):
    T, s2 = setup(scene)
    O = O_of(T)
    mids = _mids(T)
    sides2 = [dist2(side_pt, M) * 4 for (M, _), side_pt in zip(mids, (T.B, T.C, T.A))]
    k = scene["u"] * min(sides2)
    r2s = [(k + a2) / 4 for a2 in sides2]
    pts = _six(T, mids, r2s)
    forward = worst(concyclic(pts, s2), equal([dist2(O, X) for X in pts], s2))
    bent = [r2 * (1 + scene[f"e{i}"]) for i, r2 in zip((1, 2, 3), r2s)]
    counter = concyclic(_six(T, mids, bent), s2)
    return forward + max(0.0, COUNTER_MARGIN - counter)


register(
    "DF2.P2",
    "Circles at the midpoints with radii ½√(k+a²), ½√(k+b²), ½√(k+c²) give six concyclic points",
    _perturb_gen("any", -0.5, 3.0),
)(_df2p2)
