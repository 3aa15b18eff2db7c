"""Named circles of a triangle, each returned with the points that certify it."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .centers import (
    CenterId,
    Triangle,
    antiparallel_through,
    barycentrics_of,
    center,
    cevian_foot_rank_k,
    harmonic_conjugate,
    isogonal_conjugate,
    lucas_center,
    lucas_ratio,
    ratio_power,
)
from .errors import (
    ConstructionMismatch,
    DegenerateTriangle,
    FootAtInfinity,
    IsoscelesUndefined,
    PointOutsideTriangle,
)
from .kernel import (
    Circle,
    Point,
    circle_through,
    cross,
    Scalar,
    dist2,
    foot_on_line,
    is_exact,
    join,
    line_circle_intersections,
    meet_lines,
    midpoint,
    parallel_through,
    points_close,
    perpendicular_bisector,
    perpendicular_through,
    power_of_point,
    rot90,
    sqrt,
)

WITNESS_TOLERANCE = 1e-9


@dataclass(frozen=True)
class NamedCircleResult:
    circle: Circle
    witnesses: tuple[tuple[str, Point], ...] = ()
    metadata: dict[str, Any] = field(default_factory=dict)

    def witness(self, label: str) -> Point:
        for name, P in self.witnesses:
            if name == label:
                return P
        raise KeyError(label)

    def witness_residual(self, scale: float = 1.0) -> Scalar:
        """Largest |power| of a witness; float values are divided by scale²."""
        worst: Scalar = 0
        for _, P in self.witnesses:
            pw = abs(power_of_point(P, self.circle))
            if not is_exact(pw):
                pw = pw / (scale * scale)
            worst = max(worst, pw)
        return worst


def _certify(T: Triangle, result: NamedCircleResult) -> NamedCircleResult:
    res = result.witness_residual(T.tol.scale)
    bad = res != 0 if is_exact(res) else res > WITNESS_TOLERANCE
    if bad:
        raise ConstructionMismatch(f"witness off the circle by {float(res):.3e}")
    return result


def _cut(line, T: Triangle, side_vertex: str) -> Point:
    """Intersection of ``line`` with the side line opposite ``side_vertex``."""
    return meet_lines(line, T.side_line(side_vertex), T.tol)


def _lemoine_radius_squares(T: Triangle) -> tuple[Scalar, Scalar]:
    RL2_sq = T.a2 * T.b2 * T.c2 / (T.sum_sq * T.sum_sq)
    return (T.R2 + RL2_sq) / 4, RL2_sq


def lemoine_circle(T: Triangle, order: str = "first") -> NamedCircleResult:
    """First (parallels through K) or second (antiparallels through K) Lemoine circle."""
    K = center(T, CenterId.SYMMEDIAN_POINT)
    O = center(T, CenterId.CIRCUMCENTER)
    A, B, C = T.vertices
    RL1_sq, RL2_sq = _lemoine_radius_squares(T)
    sigma = T.sum_sq
    meta: dict[str, Any] = {
        "tan_omega": T.tan_omega,
        "R": T.R,
        "R_L2": sqrt(RL2_sq),
        "R_L2_from_tan": T.R * T.tan_omega,
        "R_L1": sqrt(RL1_sq),
        # the same radius written over the common denominator
        "R_L1_closed_form": sqrt((T.R2 * sigma * sigma + T.a2 * T.b2 * T.c2) / (4 * sigma * sigma)),
    }
    if order == "first":
        pa, pb, pc = (parallel_through(T.side_line(v), K) for v in "ABC")
        wit = (
            ("C2", _cut(pc, T, "A")),
            ("B1", _cut(pb, T, "A")),
            ("A2", _cut(pa, T, "B")),
            ("C1", _cut(pc, T, "B")),
            ("B2", _cut(pb, T, "C")),
            ("A1", _cut(pa, T, "C")),
        )
        L = midpoint(O, K)
        circle = Circle(L, RL1_sq)
        # second route: the power of B equals BC2 * BB1 along BC
        C2, B1 = wit[0][1], wit[1][1]
        t2 = (C2 - B).x * (C - B).x + (C2 - B).y * (C - B).y
        t1 = (B1 - B).x * (C - B).x + (B1 - B).y * (C - B).y
        meta["R_L1_power_route"] = sqrt(abs(dist2(B, L) - t1 * t2 / T.a2))
        meta["R_L1_formula"] = meta["R_L1_closed_form"]
    elif order == "second":
        pa, pb, pc = (antiparallel_through(T, side, K) for side in ("BC", "CA", "AB"))
        wit = (
            ("C2", _cut(pc, T, "A")),
            ("B1", _cut(pb, T, "A")),
            ("A2", _cut(pa, T, "B")),
            ("C1", _cut(pc, T, "B")),
            ("B2", _cut(pb, T, "C")),
            ("A1", _cut(pa, T, "C")),
        )
        circle = Circle(K, RL2_sq)
    else:
        raise ValueError("order must be 'first' or 'second'")
    return _certify(T, NamedCircleResult(circle, wit, meta))


def generalized_lemoine(T: Triangle, t: Scalar) -> NamedCircleResult:
    """Circle through the six side points of the parallels MN, MP, NP (M on AK at parameter t)."""
    A, B, C = T.vertices
    K = center(T, CenterId.SYMMEDIAN_POINT)
    if t <= 0:
        raise PointOutsideTriangle("t must be positive")
    M = A + (K - A) * t
    if any(x <= 0 or T.tol.is_zero(x, dim=2) for x in barycentrics_of(T, M)):
        raise PointOutsideTriangle("M is not inside the triangle")
    AB, AC, BC = join(A, B), join(A, C), join(B, C)
    lMN = parallel_through(AB, M)
    lMP = parallel_through(AC, M)
    N = meet_lines(lMN, join(B, K), T.tol)
    P = meet_lines(lMP, join(C, K), T.tol)
    # at M = K the three points coincide and NP is the parallel to BC through K
    lNP = parallel_through(BC, N) if points_close(N, P, T.tol) else join(N, P)
    wit = (
        ("R", meet_lines(lMN, BC, T.tol)),
        ("S", meet_lines(lMN, AC, T.tol)),
        ("W", meet_lines(lMP, AB, T.tol)),
        ("V", meet_lines(lMP, BC, T.tol)),
        ("T", meet_lines(lNP, AB, T.tol)),
        ("U", meet_lines(lNP, AC, T.tol)),
    )
    pts = [p for _, p in wit]
    circle = circle_through(pts[0], pts[1], pts[2], T.tol)
    meta = {"M": M, "N": N, "P": P, "np_cross_bc": cross(N - P, C - B) / T.a2}
    return _certify(T, NamedCircleResult(circle, wit, meta))


def droz_farny(T: Triangle, order: str = "first") -> NamedCircleResult:
    """First (center H, altitude-feet circles through O) or second (center O, midpoint circles through H)."""
    O = center(T, CenterId.CIRCUMCENTER)
    H = center(T, CenterId.ORTHOCENTER)
    r2 = 5 * T.R2 - T.sum_sq / 2
    meta = {"R_squared_half_form": (T.R2 + dist2(O, H)) / 2}
    wit = []
    for v in "ABC":
        V, P, Q, *_ = T.cyclic(v)
        side = join(P, Q)
        if order == "first":
            F = foot_on_line(side, V)
            through = O
        elif order == "second":
            F = midpoint(P, Q)
            through = H
        else:
            raise ValueError("order must be 'first' or 'second'")
        pts = line_circle_intersections(side, Circle(F, dist2(F, through)), T.tol)
        for i, X in enumerate(pts, 1):
            wit.append((f"{v}{i}", X))
    circle = Circle(H if order == "first" else O, r2)
    return _certify(T, NamedCircleResult(circle, tuple(wit), meta))


def droz_farny_family(T: Triangle, rho: Scalar) -> NamedCircleResult:
    """Circle about H met by three congruent circles of radius rho at the vertices."""
    H = center(T, CenterId.ORTHOCENTER)
    r2 = rho * rho + 4 * T.R2 - T.sum_sq / 2
    wit = []
    for v in "ABC":
        V, P, Q, *_ = T.cyclic(v)
        midline = join(midpoint(V, P), midpoint(V, Q))
        for i, X in enumerate(line_circle_intersections(midline, Circle(V, rho * rho), T.tol), 1):
            wit.append((f"P{v}{i}", X))
    return _certify(T, NamedCircleResult(Circle(H, r2), tuple(wit), {"rho": rho}))


def radical_circle_excircles(T: Triangle) -> NamedCircleResult:
    Sp = center(T, CenterId.SPIEKER)
    r2 = (T.r * T.r + T.p * T.p) / 4
    excircles = {v: T.excircle(v) for v in "ABC"}
    meta = {
        "excircles": excircles,
        "powers": tuple(power_of_point(Sp, excircles[v]) for v in "ABC"),
    }
    return NamedCircleResult(Circle(Sp, r2), (), meta)


def neuberg_circle(T: Triangle, vertex: str = "A") -> NamedCircleResult:
    V, P, Q, opp2, _, _ = T.cyclic(vertex)
    cot = T.cot_omega
    Na = midpoint(P, Q) + rot90(Q - P) * (cot / 2)
    r2 = opp2 / 4 * (cot * cot - 3)
    mirror = V + (Q - P) * (2 * ((midpoint(P, Q) - V).x * (Q - P).x + (midpoint(P, Q) - V).y * (Q - P).y) / opp2)
    meta = {
        "ON_squared": opp2 * opp2 * opp2 / (16 * T.S * T.S),
        "ON": sqrt(opp2 * opp2 * opp2 / (16 * T.S * T.S)),
        "cot_omega": cot,
    }
    wit = ((vertex, V), (vertex + "'", mirror))
    return _certify(T, NamedCircleResult(Circle(Na, r2), wit, meta))


def lucas_circle(T: Triangle, vertex: str = "A") -> NamedCircleResult:
    V, P, Q, opp2, _, _ = T.cyclic(vertex)
    k = lucas_ratio(T, vertex)
    L = lucas_center(T, vertex)
    r2 = T.R2 * k * k
    # square with one side on PQ, one corner on VP; scale it from P onto VQ
    A1 = midpoint(V, P)
    side = join(P, Q)
    B1 = foot_on_line(side, A1)
    u = A1 - B1
    C1 = B1 + Point(u.y, -u.x)
    D1 = C1 + u
    Da = meet_lines(join(P, D1), join(V, Q), T.tol)
    Aa = meet_lines(parallel_through(side, Da), join(V, P), T.tol)
    h = 2 * T.S / sqrt(opp2)
    meta = {
        "l": sqrt(r2),
        "l_from_height": T.R * h / (sqrt(opp2) + h),
        "l_from_sides": T.R / (1 + 2 * sqrt(opp2) * T.R / (sqrt(T.cyclic(vertex)[4]) * sqrt(T.cyclic(vertex)[5]))),
    }
    wit = ((vertex, V), (vertex + "_a", Aa), ("D_" + vertex.lower(), Da))
    return _certify(T, NamedCircleResult(Circle(L, r2), wit, meta))


def apollonius_rank_k(T: Triangle, vertex: str, k: Scalar) -> NamedCircleResult:
    """Circle on the diameter joining the rank-k cevian foot and its harmonic conjugate."""
    V, P, Q, _, n2, m2 = T.cyclic(vertex)
    if T.tol.is_zero(n2 - m2, dim=2):
        raise IsoscelesUndefined("adjacent sides are equal")
    lam2 = ratio_power(m2, n2, 2 * k)
    if T.tol.is_zero(lam2 - 1, dim=0):
        raise FootAtInfinity("ratio is 1: the external foot is at infinity")
    # locus MP / MQ = lam
    Ck = (P - Q * lam2) / (1 - lam2)
    r2 = lam2 * dist2(P, Q) / ((1 - lam2) * (1 - lam2))
    foot = cevian_foot_rank_k(T, vertex, k)
    ext = harmonic_conjugate(foot, P, Q, T.tol)
    if ext.at_infinity:
        raise FootAtInfinity("external foot at infinity")
    meta = {"ratio": ratio_power(m2, n2, k), "ratio_squared": lam2}
    wit = (("internal", foot), ("external", ext))
    return _certify(T, NamedCircleResult(Circle(Ck, r2), wit, meta))


def six_point_circle(T: Triangle, P1: Point) -> NamedCircleResult:
    if any(x <= 0 or T.tol.is_zero(x, dim=2) for x in barycentrics_of(T, P1)):
        raise PointOutsideTriangle("P1 must be interior")
    P2 = isogonal_conjugate(T, P1)
    Z = midpoint(P1, P2)
    wit = []
    for i, X in ((1, P1), (2, P2)):
        for v in "ABC":
            wit.append((f"{v}{i}", foot_on_line(T.side_line(v), X)))
    r2 = dist2(Z, wit[0][1])
    return _certify(T, NamedCircleResult(Circle(Z, r2), tuple(wit), {"P2": P2}))


def adjoint_circle(T: Triangle, through: str, tangent_at: str) -> Circle:
    """Circle through both vertices, tangent at ``tangent_at`` to the side toward the third vertex."""
    if through == tangent_at or {through, tangent_at} - set("ABC"):
        raise DegenerateTriangle("adjoint circle needs two distinct vertices")
    third = ({"A", "B", "C"} - {through, tangent_at}).pop()
    X, Y, Z = T.vertex(through), T.vertex(tangent_at), T.vertex(third)
    O = meet_lines(perpendicular_through(join(Y, Z), Y), perpendicular_bisector(X, Y), T.tol)
    return Circle(O, dist2(O, Y))


def circumcircle(T: Triangle) -> NamedCircleResult:
    return NamedCircleResult(T.circumcircle(), tuple(zip("ABC", T.vertices)), {"R": T.R})


def nine_point_circle(T: Triangle) -> NamedCircleResult:
    N = center(T, CenterId.NINE_POINT)
    A, B, C = T.vertices
    wit = (("Ma", midpoint(B, C)), ("Mb", midpoint(C, A)), ("Mc", midpoint(A, B)))
    return _certify(T, NamedCircleResult(Circle(N, T.R2 / 4), wit, {}))


__all__ = [
    "NamedCircleResult",
    "lemoine_circle",
    "generalized_lemoine",
    "droz_farny",
    "droz_farny_family",
    "radical_circle_excircles",
    "neuberg_circle",
    "lucas_circle",
    "apollonius_rank_k",
    "six_point_circle",
    "adjoint_circle",
    "circumcircle",
    "nine_point_circle",
]
