"""Planar primitives generic over ``float`` and ``fractions.Fraction``.

A value is exact when it is a ``Fraction``; everything else is treated as a
float.  Lines are homogeneous triples so that parallel lines meet in a point
at infinity instead of raising.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    CoincidentLines,
    CoincidentPoints,
    CollinearBase,
    CollinearPoints,
    ConcentricCircles,
    InfinitePointUnsupported,
    LineThroughCenter,
    NoIntersection,
    PoleAtCenter,
)

Scalar = Union[float, Fraction]


# -- scalars -----------------------------------------------------------------

def is_exact(*values: object) -> bool:
    return all(isinstance(v, Fraction) for v in values)


def as_scalar(value: object, exact: bool = False) -> Scalar:
    """Coerce ints, floats and "p/q" strings to the requested backend."""
    if isinstance(value, Fraction):
        return value if exact else float(value)
    if isinstance(value, str):
        q = Fraction(value)
        return q if exact else float(q)
    if exact:
        if isinstance(value, float):
            return Fraction(value)
        return Fraction(int(value))
    return float(value)


def sqrt(x: Scalar) -> Scalar:
    """Square root; exact only when ``x`` is the square of a rational."""
    if isinstance(x, Fraction):
        if x < 0:
            raise ValueError("square root of a negative number")
        n, d = x.numerator, x.denominator
        rn, rd = math.isqrt(n), math.isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return math.sqrt(x)
    return math.sqrt(x)


def to_float(x: Scalar) -> float:
    return float(x)


@dataclass(frozen=True)
class ToleranceContext:
    """Scale-aware comparisons.  Exact values are compared against zero exactly."""

    absolute: float = 1e-12
    relative: float = 1e-9
    scale: float = 1.0

    @property
    def effective(self) -> float:
        return max(self.absolute, self.relative * self.scale)

    def is_zero(self, value: Scalar, dim: int = 1) -> bool:
        """``dim`` is the length dimension of ``value`` (2 for areas, 0 for ratios)."""
        if isinstance(value, Fraction):
            return value == 0
        return abs(value) <= self.effective * self.scale ** (dim - 1)

    def with_scale(self, scale: float) -> ToleranceContext:
        return ToleranceContext(self.absolute, self.relative, max(float(scale), 0.0) or 1.0)

    @classmethod
    def for_points(cls, points: Iterable[Point], **kw) -> ToleranceContext:
        return cls(**kw).with_scale(scene_scale(points))


DEFAULT_TOLERANCE = ToleranceContext()


# -- primitives --------------------------------------------------------------

def _coerce(v: object) -> Scalar:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int) and not isinstance(v, bool):
        return float(v)
    return v  # type: ignore[return-value]


@dataclass(frozen=True)
class Point:
    x: Scalar
    y: Scalar
    at_infinity: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", _coerce(self.x))
        object.__setattr__(self, "y", _coerce(self.y))

    @classmethod
    def infinite(cls, dx: Scalar, dy: Scalar) -> Point:
        dx, dy = _coerce(dx), _coerce(dy)
        if is_exact(dx, dy):
            if dx == 0 and dy == 0:
                raise ValueError("zero direction")
            m = abs(dx) if dx != 0 else abs(dy)
            dx, dy = dx / m, dy / m
        else:
            n = math.hypot(dx, dy)
            if n == 0:
                raise ValueError("zero direction")
            dx, dy = dx / n, dy / n
            if abs(dx) <= 1e-15:
                dx = 0.0
        if dx < 0 or (dx == 0 and dy < 0):
            dx, dy = -dx, -dy
        return cls(dx, dy, True)

    @property
    def exact(self) -> bool:
        return is_exact(self.x, self.y)

    @property
    def homogeneous(self) -> tuple[Scalar, Scalar, Scalar]:
        one = Fraction(1) if self.exact else 1.0
        return (self.x, self.y, 0 * one if self.at_infinity else one)

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k: Scalar) -> Point:
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k: Scalar) -> Point:
        return Point(self.x / k, self.y / k)

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def __iter__(self):
        yield self.x
        yield self.y


def _finite(*points: Point) -> None:
    for p in points:
        if p.at_infinity:
            raise InfinitePointUnsupported(repr(p))


def dot(u: Point, v: Point) -> Scalar:
    return u.x * v.x + u.y * v.y


def cross(u: Point, v: Point) -> Scalar:
    return u.x * v.y - u.y * v.x


def rot90(u: Point) -> Point:
    return Point(-u.y, u.x)


def dist2(P: Point, Q: Point) -> Scalar:
    _finite(P, Q)
    dx, dy = P.x - Q.x, P.y - Q.y
    return dx * dx + dy * dy


def dist(P: Point, Q: Point) -> Scalar:
    return sqrt(dist2(P, Q))


def norm2(u: Point) -> Scalar:
    return u.x * u.x + u.y * u.y


def midpoint(P: Point, Q: Point) -> Point:
    _finite(P, Q)
    return Point((P.x + Q.x) / 2, (P.y + Q.y) / 2)


def lerp(P: Point, Q: Point, t: Scalar) -> Point:
    return Point(P.x + t * (Q.x - P.x), P.y + t * (Q.y - P.y))


def signed_area2(P: Point, Q: Point, R: Point) -> Scalar:
    """Twice the signed area of PQR; positive when counterclockwise."""
    return cross(Q - P, R - P)


def scene_scale(points: Iterable[Point]) -> float:
    """Diameter of the bounding box of the finite points (1.0 if empty or a single point)."""
    xs, ys = [], []
    for p in points:
        if not p.at_infinity:
            xs.append(float(p.x))
            ys.append(float(p.y))
    if not xs:
        return 1.0
    d = math.hypot(max(xs) - min(xs), max(ys) - min(ys))
    return d if d > 0 else 1.0


def points_close(P: Point, Q: Point, tol: ToleranceContext = DEFAULT_TOLERANCE) -> bool:
    if P.at_infinity or Q.at_infinity:
        if P.at_infinity != Q.at_infinity:
            return False
        return tol.is_zero(cross(P, Q), dim=0)
    d2 = dist2(P, Q)
    if isinstance(d2, Fraction):
        return d2 == 0
    return math.sqrt(d2) <= tol.effective


@dataclass(frozen=True)
class Line:
    """The line a*x + b*y + c = 0, stored normalized (see :meth:`make`)."""

    a: Scalar
    b: Scalar
    c: Scalar

    @classmethod
    def make(cls, a: Scalar, b: Scalar, c: Scalar) -> Line:
        a, b, c = _coerce(a), _coerce(b), _coerce(c)
        if is_exact(a, b, c):
            if a == 0 and b == 0:
                if c == 0:
                    raise ValueError("null line")
                return cls(Fraction(0), Fraction(0), Fraction(1))
            den = math.lcm(a.denominator, b.denominator, c.denominator)
            ia, ib, ic = (int(v * den) for v in (a, b, c))
            g = math.gcd(ia, ib, ic)
            ia, ib, ic = ia // g, ib // g, ic // g
            if ia < 0 or (ia == 0 and ib < 0):
                ia, ib, ic = -ia, -ib, -ic
            return cls(Fraction(ia), Fraction(ib), Fraction(ic))
        a, b, c = float(a), float(b), float(c)
        n = math.hypot(a, b)
        if n == 0:
            if c == 0:
                raise ValueError("null line")
            return cls(0.0, 0.0, 1.0)
        a, b, c = a / n, b / n, c / n
        if a < -1e-12 or (abs(a) <= 1e-12 and b < 0):
            a, b, c = -a, -b, -c
        return cls(a + 0.0, b + 0.0, c + 0.0)

    @classmethod
    def at_infinity(cls, exact: bool = False) -> Line:
        return cls(Fraction(0), Fraction(0), Fraction(1)) if exact else cls(0.0, 0.0, 1.0)

    @property
    def is_at_infinity(self) -> bool:
        return self.a == 0 and self.b == 0

    @property
    def direction(self) -> Point:
        return Point(-self.b, self.a)

    @property
    def normal(self) -> Point:
        return Point(self.a, self.b)

    def evaluate(self, P: Point) -> Scalar:
        """Signed value a*x + b*y + c (or a*dx + b*dy for a point at infinity)."""
        if P.at_infinity:
            return self.a * P.x + self.b * P.y
        return self.a * P.x + self.b * P.y + self.c

    def distance_residual(self, P: Point) -> Scalar:
        """Euclidean distance from P to the line (squared on the exact backend)."""
        v = self.evaluate(P)
        n2 = self.a * self.a + self.b * self.b
        if isinstance(v, Fraction):
            return v * v / n2
        return abs(v) / math.sqrt(n2)

    def contains(self, P: Point, tol: ToleranceContext = DEFAULT_TOLERANCE) -> bool:
        if P.at_infinity:
            return tol.is_zero(self.evaluate(P), dim=0)
        return tol.is_zero(self.distance_residual(P))


@dataclass(frozen=True)
class Circle:
    center: Point
    r2: Scalar

    def __post_init__(self) -> None:
        if self.center.at_infinity:
            raise InfinitePointUnsupported("circle center at infinity")
        object.__setattr__(self, "r2", _coerce(self.r2))
        if self.r2 < 0:
            raise ValueError("negative squared radius")

    @property
    def radius(self) -> Scalar:
        return sqrt(self.r2)


@dataclass(frozen=True)
class Segment:
    P: Point
    Q: Point

    def __post_init__(self) -> None:
        _finite(self.P, self.Q)
        if points_close(self.P, self.Q):
            raise CoincidentPoints("segment endpoints coincide")

    @property
    def midpoint(self) -> Point:
        return midpoint(self.P, self.Q)

    @property
    def length2(self) -> Scalar:
        return dist2(self.P, self.Q)


# -- projective operations ---------------------------------------------------

def _cross3(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def join(P: Point, Q: Point, tol: ToleranceContext = DEFAULT_TOLERANCE) -> Line:
    """Line through two points (either may be at infinity)."""
    if points_close(P, Q, tol):
        raise CoincidentPoints("join of coincident points")
    a, b, c = _cross3(P.homogeneous, Q.homogeneous)
    return Line.make(a, b, c)


def line_through(P: Point, direction: Point) -> Line:
    _finite(P)
    a, b = -direction.y, direction.x
    return Line.make(a, b, -(a * P.x + b * P.y))


def parallel_through(l: Line, P: Point) -> Line:
    return line_through(P, l.direction)


def perpendicular_through(l: Line, P: Point) -> Line:
    return line_through(P, l.normal)


def perpendicular_bisector(P: Point, Q: Point) -> Line:
    return line_through(midpoint(P, Q), rot90(Q - P))


def meet_lines(l1: Line, l2: Line, tol: ToleranceContext = DEFAULT_TOLERANCE) -> Point:
    x, y, w = _cross3((l1.a, l1.b, l1.c), (l2.a, l2.b, l2.c))
    exact = is_exact(x, y, w)
    if exact:
        parallel = w == 0
    else:
        n1 = math.hypot(l1.a, l1.b) or 1.0
        n2 = math.hypot(l2.a, l2.b) or 1.0
        parallel = abs(w) <= 1e-13 * n1 * n2
    if parallel:
        if l1.is_at_infinity and l2.is_at_infinity:
            raise CoincidentLines("both lines are the line at infinity")
        if l1.is_at_infinity or l2.is_at_infinity:
            fin = l2 if l1.is_at_infinity else l1
            return Point.infinite(fin.direction.x, fin.direction.y)
        # distance between the parallel lines decides coincidence
        d = l1.normal
        P = foot_on_line(l1, Point(0, 0) if not exact else Point(Fraction(0), Fraction(0)))
        if l2.contains(P, tol):
            raise CoincidentLines("lines coincide")
        return Point.infinite(-d.y, d.x)
    return Point(x / w, y / w)


def foot_on_line(l: Line, P: Point) -> Point:
    """Orthogonal projection of P onto l."""
    _finite(P)
    n2 = l.a * l.a + l.b * l.b
    t = (l.a * P.x + l.b * P.y + l.c) / n2
    return Point(P.x - t * l.a, P.y - t * l.b)


def reflect_in_line(l: Line, P: Point) -> Point:
    F = foot_on_line(l, P)
    return F * 2 - P


# -- metric operations -------------------------------------------------------

def circle_through(P: Point, Q: Point, R: Point, tol: ToleranceContext | None = None) -> Circle:
    _finite(P, Q, R)
    if tol is None:
        tol = ToleranceContext.for_points((P, Q, R))
    u, v = Q - P, R - P
    d = 2 * cross(u, v)
    if tol.is_zero(d, dim=2):
        raise CollinearPoints("the three points are collinear")
    nu, nv = norm2(u), norm2(v)
    cx = (v.y * nu - u.y * nv) / d
    cy = (u.x * nv - v.x * nu) / d
    center = Point(P.x + cx, P.y + cy)
    return Circle(center, cx * cx + cy * cy)


def power_of_point(P: Point, C: Circle) -> Scalar:
    return dist2(P, C.center) - C.r2


def radical_axis(C1: Circle, C2: Circle, tol: ToleranceContext = DEFAULT_TOLERANCE) -> Line:
    if points_close(C1.center, C2.center, tol):
        raise ConcentricCircles("concentric circles have no radical axis")
    # power(X,C1) - power(X,C2) is linear in X
    O1, O2 = C1.center, C2.center
    a = 2 * (O2.x - O1.x)
    b = 2 * (O2.y - O1.y)
    c = norm2(O1) - norm2(O2) - C1.r2 + C2.r2
    return Line.make(a, b, c)


def radical_center(C1: Circle, C2: Circle, C3: Circle, tol: ToleranceContext = DEFAULT_TOLERANCE) -> Point:
    return meet_lines(radical_axis(C1, C2, tol), radical_axis(C1, C3, tol), tol)


def polar_line(P: Point, C: Circle, tol: ToleranceContext = DEFAULT_TOLERANCE) -> Line:
    _finite(P)
    if points_close(P, C.center, tol):
        raise PoleAtCenter("polar of the center")
    O = C.center
    u = P - O
    # (X - O).(P - O) = r^2
    return Line.make(u.x, u.y, -(u.x * O.x + u.y * O.y) - C.r2)


def pole_of_line(l: Line, C: Circle, tol: ToleranceContext = DEFAULT_TOLERANCE) -> Point:
    O = C.center
    v = l.evaluate(O)
    if l.is_at_infinity:
        return O
    if tol.is_zero(v):
        raise LineThroughCenter("line passes through the center")
    k = -C.r2 / v
    return Point(O.x + k * l.a, O.y + k * l.b)


def circles_orthogonal(C1: Circle, C2: Circle) -> Scalar:
    return dist2(C1.center, C2.center) - C1.r2 - C2.r2


def concyclicity_residual(points: Sequence[Point], tol: ToleranceContext = DEFAULT_TOLERANCE) -> Scalar:
    """Max | |P-center|^2 - r^2 | / scale^2 over points after the first three."""
    if len(points) < 4:
        raise ValueError("need at least four points")
    try:
        circ = circle_through(points[0], points[1], points[2])
    except CollinearPoints as exc:
        raise CollinearBase(str(exc)) from None
    s2 = tol.scale * tol.scale
    if is_exact(circ.r2):
        s2 = Fraction(s2)
    return max(abs(power_of_point(P, circ)) / s2 for P in points[3:])


def line_circle_intersections(
    l: Line, C: Circle, tol: ToleranceContext = DEFAULT_TOLERANCE
) -> tuple[Point, ...]:
    """Real intersections ordered along the line direction; tangency gives one point."""
    F = foot_on_line(l, C.center)
    h2 = C.r2 - dist2(F, C.center)
    d = l.direction
    n2 = norm2(d)
    if isinstance(h2, Fraction):
        if h2 < 0:
            return ()
        if h2 == 0:
            return (F,)
        t = sqrt(h2 / n2)
        return (F - d * t, F + d * t)
    eps2 = 1e-12 * max(C.r2, tol.scale * tol.scale)
    if h2 < -eps2:
        return ()
    if h2 <= eps2:
        return (F,)
    t = math.sqrt(max(h2, 0.0) / n2)
    return (F - d * t, F + d * t)


def second_intersection(l: Line, C: Circle, P: Point) -> Point:
    """The other common point of l and C, given P on both (exact on rationals)."""
    d = l.direction
    n2 = norm2(d)
    # P + t d on the circle: t (n2 t + 2 d.(P-O)) = 0
    t = -2 * dot(d, P - C.center) / n2
    return P + d * t


def circle_circle_intersections(
    C1: Circle, C2: Circle, tol: ToleranceContext = DEFAULT_TOLERANCE
) -> tuple[Point, ...]:
    if points_close(C1.center, C2.center, tol):
        raise ConcentricCircles("concentric circles")
    return line_circle_intersections(radical_axis(C1, C2, tol), C1, tol)


def require_intersections(pts: tuple[Point, ...], n: int = 2) -> tuple[Point, ...]:
    if len(pts) < n:
        raise NoIntersection(f"expected {n} intersection points, got {len(pts)}")
    return pts
