"""Triangles, remarkable points and derived triangles."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Union

from .errors import (
    AtEndpoint,
    AtVertex,
    DegenerateTriangle,
    IsoscelesDegenerate,
    NotOnLine,
    OnCircumcircle,
    OnSideLine,
    OutsideAngle,
    RightAngle,
)
from .kernel import (
    Circle,
    Line,
    Point,
    Scalar,
    ToleranceContext,
    dist2,
    dot,
    foot_on_line,
    is_exact,
    join,
    line_through,
    midpoint,
    points_close,
    power_of_point,
    rot90,
    signed_area2,
    sqrt,
)

VERTICES = ("A", "B", "C")
SIDES = {"BC": "A", "CA": "B", "AB": "C", "CB": "A", "AC": "B", "BA": "C"}


class CenterId(str, Enum):
    CENTROID = "centroid"
    CIRCUMCENTER = "circumcenter"
    ORTHOCENTER = "orthocenter"
    INCENTER = "incenter"
    EXCENTER_A = "excenter_A"
    EXCENTER_B = "excenter_B"
    EXCENTER_C = "excenter_C"
    NINE_POINT = "nine_point"
    SYMMEDIAN_POINT = "symmedian_point"
    SPIEKER = "spieker"
    BROCARD_1 = "brocard_1"
    BROCARD_2 = "brocard_2"


class DerivedTriangleId(str, Enum):
    MEDIAL = "medial"
    TANGENTIAL = "tangential"
    SECOND_BROCARD = "second_brocard"
    EXCENTRAL = "excentral"
    LUCAS = "lucas"


@dataclass(frozen=True, eq=False)
class Triangle:
    """A nondegenerate triangle, reoriented counterclockwise at construction.

    Side names follow the usual convention: ``a = |BC|``, ``b = |CA|``,
    ``c = |AB|``.  Squares and the (positive) area are exact on rational input.
    """

    A: Point
    B: Point
    C: Point
    tol: ToleranceContext = field(default=None, repr=False)  # type: ignore[assignment]
    a2: Scalar = field(init=False, repr=False)
    b2: Scalar = field(init=False, repr=False)
    c2: Scalar = field(init=False, repr=False)
    S: Scalar = field(init=False, repr=False)

    def __post_init__(self) -> None:
        A, B, C = self.A, self.B, self.C
        if A.at_infinity or B.at_infinity or C.at_infinity:
            raise DegenerateTriangle("vertex at infinity")
        tol = self.tol or ToleranceContext.for_points((A, B, C))
        object.__setattr__(self, "tol", tol)
        s2 = signed_area2(A, B, C)
        if s2 < 0:
            B, C = C, B
            object.__setattr__(self, "B", B)
            object.__setattr__(self, "C", C)
            s2 = -s2
        if tol.is_zero(s2, dim=2):
            raise DegenerateTriangle("degenerate triangle: vertices are collinear")
        object.__setattr__(self, "a2", dist2(B, C))
        object.__setattr__(self, "b2", dist2(C, A))
        object.__setattr__(self, "c2", dist2(A, B))
        object.__setattr__(self, "S", s2 / 2)

    @classmethod
    def from_sides(cls, a: Scalar, b: Scalar, c: Scalar) -> Triangle:
        """Canonical placement: B at the origin, C on the positive x-axis, A above."""
        if not (a > 0 and b > 0 and c > 0) or a >= b + c or b >= a + c or c >= a + b:
            raise DegenerateTriangle("degenerate triangle: side lengths violate the triangle inequality")
        x = (a * a + c * c - b * b) / (2 * a)
        y2 = c * c - x * x
        y = sqrt(y2) if y2 > 0 else 0.0
        zero = a - a
        return cls(Point(x, y), Point(zero, zero), Point(a, zero))

    # sides and classical lengths
    @property
    def exact(self) -> bool:
        return is_exact(self.A.x, self.A.y, self.B.x, self.B.y, self.C.x, self.C.y)

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.A, self.B, self.C)

    @property
    def a(self) -> Scalar:
        return sqrt(self.a2)

    @property
    def b(self) -> Scalar:
        return sqrt(self.b2)

    @property
    def c(self) -> Scalar:
        return sqrt(self.c2)

    @property
    def p(self) -> Scalar:
        return (self.a + self.b + self.c) / 2

    @property
    def sum_sq(self) -> Scalar:
        return self.a2 + self.b2 + self.c2

    @property
    def R2(self) -> Scalar:
        return self.a2 * self.b2 * self.c2 / (16 * self.S * self.S)

    @property
    def R(self) -> Scalar:
        return sqrt(self.R2)

    @property
    def r(self) -> Scalar:
        return self.S / self.p

    @property
    def conway(self) -> tuple[Scalar, Scalar, Scalar]:
        """(S_A, S_B, S_C) = half of (b²+c²−a², c²+a²−b², a²+b²−c²)."""
        a2, b2, c2 = self.a2, self.b2, self.c2
        return ((b2 + c2 - a2) / 2, (c2 + a2 - b2) / 2, (a2 + b2 - c2) / 2)

    @property
    def cot_omega(self) -> Scalar:
        return self.sum_sq / (4 * self.S)

    @property
    def tan_omega(self) -> Scalar:
        return 4 * self.S / self.sum_sq

    def vertex(self, name: str) -> Point:
        return {"A": self.A, "B": self.B, "C": self.C}[name]

    def cyclic(self, name: str) -> tuple[Point, Point, Point, Scalar, Scalar, Scalar]:
        """(V, V+, V-, opposite², next², prev²) starting at vertex ``name``."""
        if name == "A":
            return self.A, self.B, self.C, self.a2, self.b2, self.c2
        if name == "B":
            return self.B, self.C, self.A, self.b2, self.c2, self.a2
        if name == "C":
            return self.C, self.A, self.B, self.c2, self.a2, self.b2
        raise ValueError(f"unknown vertex {name!r}")

    def circumcircle(self) -> Circle:
        return Circle(center(self, CenterId.CIRCUMCENTER), self.R2)

    def incircle(self) -> Circle:
        return Circle(center(self, CenterId.INCENTER), self.r * self.r)

    def excircle(self, name: str) -> Circle:
        V, _, _, opp2, _, _ = self.cyclic(name)
        ra = self.S / (self.p - sqrt(opp2))
        return Circle(center(self, CenterId("excenter_" + name)), ra * ra)

    def side_line(self, name: str) -> Line:
        """Side line opposite vertex ``name``."""
        _, P, Q, *_ = self.cyclic(name)
        return join(P, Q)

    def is_right(self) -> bool:
        return any(self.tol.is_zero(s, dim=2) for s in self.conway)


# -- barycentric machinery ---------------------------------------------------

Weights = tuple[Scalar, Scalar, Scalar]


def from_barycentric(T: Triangle, u: Scalar, v: Scalar, w: Scalar) -> Point:
    s = u + v + w
    x = u * T.A.x + v * T.B.x + w * T.C.x
    y = u * T.A.y + v * T.B.y + w * T.C.y
    if is_exact(s) and s == 0 or not is_exact(s) and abs(s) <= 1e-13 * (abs(u) + abs(v) + abs(w)):
        return Point.infinite(x, y)
    return Point(x / s, y / s)


def barycentrics_of(T: Triangle, P: Point) -> Weights:
    """Unnormalized (signed-area) barycentrics of a finite point."""
    return (signed_area2(P, T.B, T.C), signed_area2(P, T.C, T.A), signed_area2(P, T.A, T.B))


def barycentric_line(T: Triangle, al: Scalar, be: Scalar, ga: Scalar) -> Line:
    """The line al·x + be·y + ga·z = 0 in barycentrics, as a Cartesian line."""
    a = b = c = 0 * al
    for coef, Y, Z in ((al, T.B, T.C), (be, T.C, T.A), (ga, T.A, T.B)):
        a += coef * (Y.y - Z.y)
        b += coef * (Z.x - Y.x)
        c += coef * (Y.x * Z.y - Y.y * Z.x)
    if is_exact(a, b, c):
        if a == 0 and b == 0:
            return Line.at_infinity(exact=True)
    elif math.hypot(a, b) * T.tol.scale <= 1e-9 * abs(c):
        return Line.at_infinity()
    return Line.make(a, b, c)


def center_weights(T: Triangle, cid: CenterId) -> Weights:
    a2, b2, c2 = T.a2, T.b2, T.c2
    if cid is CenterId.CENTROID:
        one = a2 / a2
        return (one, one, one)
    if cid is CenterId.INCENTER:
        return (T.a, T.b, T.c)
    if cid is CenterId.EXCENTER_A:
        return (-T.a, T.b, T.c)
    if cid is CenterId.EXCENTER_B:
        return (T.a, -T.b, T.c)
    if cid is CenterId.EXCENTER_C:
        return (T.a, T.b, -T.c)
    if cid is CenterId.SYMMEDIAN_POINT:
        return (a2, b2, c2)
    if cid is CenterId.SPIEKER:
        a, b, c = T.a, T.b, T.c
        return (b + c, c + a, a + b)
    if cid is CenterId.CIRCUMCENTER:
        sa, sb, sc = T.conway
        return (a2 * sa, b2 * sb, c2 * sc)
    if cid is CenterId.ORTHOCENTER:
        sa, sb, sc = T.conway
        return (sb * sc, sc * sa, sa * sb)
    if cid is CenterId.BROCARD_1:
        return (a2 * c2, a2 * b2, b2 * c2)
    if cid is CenterId.BROCARD_2:
        return (a2 * b2, b2 * c2, c2 * a2)
    raise ValueError(f"{cid} has no barycentric weights")


def center(T: Triangle, cid: Union[CenterId, str]) -> Point:
    cid = CenterId(cid)
    if cid is CenterId.NINE_POINT:
        return midpoint(center(T, CenterId.CIRCUMCENTER), center(T, CenterId.ORTHOCENTER))
    if cid is CenterId.ORTHOCENTER:
        # Sylvester: H = A + B + C - 2O, exact and free of the right-angle weight collapse
        O = center(T, CenterId.CIRCUMCENTER)
        return T.A + T.B + T.C - O * 2
    return from_barycentric(T, *center_weights(T, cid))


def brocard_angle(T: Triangle) -> float:
    return math.atan2(4 * float(T.S), float(T.sum_sq))


def _vertex_hit(T: Triangle, P: Point) -> bool:
    return any(points_close(P, V, T.tol) for V in T.vertices)


def isogonal_conjugate(T: Triangle, P: Point) -> Point:
    if P.at_infinity:
        raise OnCircumcircle("points at infinity map onto the circumcircle")
    if _vertex_hit(T, P):
        raise AtVertex("isogonal conjugate of a vertex")
    if T.tol.is_zero(power_of_point(P, T.circumcircle()), dim=2):
        raise OnCircumcircle("point on the circumcircle")
    u, v, w = barycentrics_of(T, P)
    return from_barycentric(T, T.a2 * v * w, T.b2 * w * u, T.c2 * u * v)


def ratio_power(num2: Scalar, den2: Scalar, k: Scalar) -> Scalar:
    """(num/den)^k from the squares, exact for integer k when possible."""
    q = num2 / den2
    kk = k
    if isinstance(k, float) and k.is_integer():
        kk = int(k)
    elif isinstance(k, Fraction) and k.denominator == 1:
        kk = int(k)
    if isinstance(kk, int):
        if kk % 2 == 0:
            return q ** (kk // 2)
        return q ** ((kk - 1) // 2) * sqrt(q)
    return float(q) ** (float(k) / 2)


def cevian_foot_rank_k(T: Triangle, vertex: str, k: Scalar) -> Point:
    """Foot of the rank-k cevian: divides the opposite side in ratio (next/prev)^k.

    For vertex A the foot A_k satisfies BA_k / A_kC = (c/b)^k.
    """
    _, P, Q, _, n2, m2 = T.cyclic(vertex)
    # opposite side runs P -> Q; the side adjacent to P is |V P| (= prev²), adjacent to Q is next²
    rho = ratio_power(m2, n2, k)
    return (P + Q * rho) / (1 + rho)


def harmonic_conjugate(P: Point, B: Point, C: Point, tol: ToleranceContext | None = None) -> Point:
    if tol is None:
        tol = ToleranceContext.for_points((B, C) if P.at_infinity else (P, B, C))
    d = C - B
    if P.at_infinity:
        if not tol.is_zero(P.x * d.y - P.y * d.x, dim=1):
            raise NotOnLine("point at infinity off the line BC")
        return midpoint(B, C)
    if not join(B, C, tol).contains(P, tol):
        raise NotOnLine("point is not on line BC")
    if points_close(P, B, tol) or points_close(P, C, tol):
        raise AtEndpoint("harmonic conjugate of an endpoint")
    t = dot(P - B, d) / dot(d, d)
    den = 2 * t - 1
    if tol.is_zero(den, dim=0):
        return Point.infinite(d.x, d.y)
    return B + d * (t / den)


def trilinear_polar(T: Triangle, P: Point) -> Line:
    if P.at_infinity:
        raise OnSideLine("point at infinity")
    if _vertex_hit(T, P):
        raise AtVertex("trilinear polar of a vertex")
    u, v, w = barycentrics_of(T, P)
    if any(T.tol.is_zero(x, dim=2) for x in (u, v, w)):
        raise OnSideLine("point lies on a side line")
    return barycentric_line(T, v * w, w * u, u * v)


def _check_scalene(T: Triangle) -> None:
    a2, b2, c2 = T.a2, T.b2, T.c2
    for x, y in ((a2, b2), (b2, c2), (c2, a2)):
        if T.tol.is_zero(x - y, dim=2):
            raise IsoscelesDegenerate("triangle has two equal sides")


def lucas_ratio(T: Triangle, vertex: str) -> Scalar:
    """l/R for the Lucas circle at ``vertex``: h/(a+h) = 2S/(a²+2S)."""
    opp2 = T.cyclic(vertex)[3]
    return 2 * T.S / (opp2 + 2 * T.S)


def lucas_center(T: Triangle, vertex: str) -> Point:
    V = T.vertex(vertex)
    O = center(T, CenterId.CIRCUMCENTER)
    return V + (O - V) * lucas_ratio(T, vertex)


def derived_points(T: Triangle, did: Union[DerivedTriangleId, str]) -> tuple[Point, Point, Point]:
    """Vertices of a derived triangle in the order induced by (A, B, C)."""
    did = DerivedTriangleId(did)
    A, B, C = T.vertices
    if did is DerivedTriangleId.MEDIAL:
        return (midpoint(B, C), midpoint(C, A), midpoint(A, B))
    if did is DerivedTriangleId.TANGENTIAL:
        if T.is_right():
            raise RightAngle("tangents at the ends of a diameter are parallel")
        a2, b2, c2 = T.a2, T.b2, T.c2
        return (
            from_barycentric(T, -a2, b2, c2),
            from_barycentric(T, a2, -b2, c2),
            from_barycentric(T, a2, b2, -c2),
        )
    if did is DerivedTriangleId.EXCENTRAL:
        return tuple(center(T, CenterId("excenter_" + v)) for v in VERTICES)  # type: ignore[return-value]
    if did is DerivedTriangleId.SECOND_BROCARD:
        _check_scalene(T)
        O = center(T, CenterId.CIRCUMCENTER)
        K = center(T, CenterId.SYMMEDIAN_POINT)
        return tuple(foot_on_line(join(V, K), O) for V in T.vertices)  # type: ignore[return-value]
    if did is DerivedTriangleId.LUCAS:
        return tuple(lucas_center(T, v) for v in VERTICES)  # type: ignore[return-value]
    raise ValueError(did)


def derived_triangle(T: Triangle, did: Union[DerivedTriangleId, str]) -> Triangle:
    """Derived triangle as a :class:`Triangle` (relabeled if it comes out clockwise)."""
    return Triangle(*derived_points(T, did))


def antiparallel_through(T: Triangle, side: str, P: Point) -> Line:
    """Line through P antiparallel to ``side`` (parallel to the circumcircle tangent at the opposite vertex)."""
    vname = SIDES[side]
    u, v, w = barycentrics_of(T, P)
    weights = {"A": (v, w), "B": (w, u), "C": (u, v)}[vname]
    if any(x <= 0 or T.tol.is_zero(x, dim=2) for x in weights):
        raise OutsideAngle(f"point is not strictly inside angle {vname}")
    V = T.vertex(vname)
    O = center(T, CenterId.CIRCUMCENTER)
    return line_through(P, rot90(O - V))
