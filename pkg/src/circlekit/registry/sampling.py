"""Seeded scene sampling on either backend."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from ..kernel import Circle, Point, Scalar, cross, dist2, second_intersection, line_through

# rational coordinates live on this grid; small denominators keep Fractions cheap
GRID = 64


class Reject(Exception):
    """The sampled configuration is degenerate or ill-conditioned; draw again."""


def _angles(A: Point, B: Point, C: Point) -> tuple[float, float, float]:
    a2, b2, c2 = (float(dist2(B, C)), float(dist2(C, A)), float(dist2(A, B)))
    a, b, c = math.sqrt(a2), math.sqrt(b2), math.sqrt(c2)

    def ang(opp2, x, y):
        return math.acos(max(-1.0, min(1.0, (x * x + y * y - opp2) / (2 * x * y))))

    return ang(a2, b, c), ang(b2, c, a), ang(c2, a, b)


def triangle_ok(A: Point, B: Point, C: Point, kind: str = "any") -> bool:
    """The standing filters: min angle >= 10 deg, side ratio <= 6, plus ``kind``."""
    sides = sorted(math.sqrt(float(dist2(P, Q))) for P, Q in ((B, C), (C, A), (A, B)))
    if sides[0] <= 0 or sides[2] / sides[0] > 6:
        return False
    angs = _angles(A, B, C)
    if min(angs) < math.radians(10):
        return False
    if "scalene" in kind:
        if sides[1] - sides[0] < 0.05 * sides[2] or sides[2] - sides[1] < 0.05 * sides[2]:
            return False
    big = max(angs)
    if "acute" in kind and big > math.radians(85):
        return False
    if "obtuse" in kind and big < math.radians(95):
        return False
    if "nonright" in kind and abs(big - math.pi / 2) < math.radians(5):
        return False
    if "sharpA" in kind and angs[0] > math.radians(85):
        return False
    return True


class Sampler:
    def __init__(self, rng: random.Random, exact: bool = False) -> None:
        self.rng = rng
        self.exact = exact

    # scalars
    def uniform(self, lo: float, hi: float) -> Scalar:
        if self.exact:
            flo = Fraction(lo).limit_denominator(GRID)
            fhi = Fraction(hi).limit_denominator(GRID)
            return flo + (fhi - flo) * Fraction(self.rng.randint(0, GRID), GRID)
        return self.rng.uniform(lo, hi)

    def sign(self) -> int:
        return 1 if self.rng.random() < 0.5 else -1

    def choice(self, seq):
        return self.rng.choice(seq)

    def point(self, lo: float = -1.0, hi: float = 1.0) -> Point:
        return Point(self.uniform(lo, hi), self.uniform(lo, hi))

    def unit(self, lo_deg: float = 0.0, hi_deg: float = 360.0) -> Point:
        """Unit vector at an angle in [lo, hi); rational on the exact backend."""
        for _ in range(1000):
            if self.exact:
                # rational point on the unit circle from the half-angle tangent
                t = Fraction(self.rng.randint(-4 * GRID, 4 * GRID), GRID)
                u = Point((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t))
                if self.rng.random() < 0.5:
                    u = -u
            else:
                th = math.radians(self.rng.uniform(lo_deg, hi_deg))
                return Point(math.cos(th), math.sin(th))
            ang = math.degrees(math.atan2(float(u.y), float(u.x))) % 360
            if lo_deg <= ang < hi_deg or lo_deg <= ang + 360 < hi_deg:
                return u
        raise Reject("no unit vector in range")

    # triangles
    def triangle(self, kind: str = "any") -> tuple[Point, Point, Point]:
        if "right" in kind and "nonright" not in kind:
            return self.right_triangle()
        if "heronian" in kind and self.exact:
            return self.heronian_triangle(kind)
        for _ in range(10000):
            A, B, C = self.point(), self.point(), self.point()
            if cross(B - A, C - A) < 0:
                B, C = C, B
            if triangle_ok(A, B, C, kind):
                return A, B, C
        raise Reject("could not sample a triangle")

    def right_triangle(self) -> tuple[Point, Point, Point]:
        """Right angle at A; legs along a (rational) unit direction."""
        for _ in range(10000):
            A = self.point(-0.5, 0.5)
            u = self.unit()
            l1, l2 = self.uniform(0.3, 1.2), self.uniform(0.3, 1.2)
            B = A + u * l1
            C = A + Point(-u.y, u.x) * l2
            if triangle_ok(A, B, C, "any"):
                return A, B, C
        raise Reject("could not sample a right triangle")

    def heronian_triangle(self, kind: str = "any") -> tuple[Point, Point, Point]:
        """Rational sides, area and coordinates (altitude from A on the x-axis, then moved)."""
        for _ in range(10000):
            s = Fraction(self.rng.randint(8, GRID - 4), GRID)
            t = Fraction(self.rng.randint(8, GRID - 4), GRID)
            u = (1 - s * s) / (2 * s)
            v = (1 - t * t) / (2 * t)
            A, B, C = Point(Fraction(0), Fraction(1)), Point(-u, Fraction(0)), Point(v, Fraction(0))
            if self.rng.random() < 0.3 and u != v:
                B = Point(u, Fraction(0))
                if u > v:
                    B, C = C, B
            rot = self.unit()
            k = self.uniform(0.4, 1.0)
            shift = self.point(-0.3, 0.3)

            def move(P: Point) -> Point:
                return Point(rot.x * P.x - rot.y * P.y, rot.y * P.x + rot.x * P.y) * k + shift

            A, B, C = move(A), move(B), move(C)
            if cross(B - A, C - A) < 0:
                B, C = C, B
            if triangle_ok(A, B, C, kind):
                return A, B, C
        raise Reject("could not sample a heronian triangle")

    # points
    def on_circle(self, circle: Circle, anchor: Point | None = None) -> Point:
        """Random point of ``circle``; exact runs use a rational chord through ``anchor``."""
        if self.exact:
            if anchor is None:
                raise ValueError("exact sampling on a circle needs a rational anchor point")
            for _ in range(1000):
                d = self.unit()
                X = second_intersection(line_through(anchor, d), circle, anchor)
                if dist2(X, anchor) > circle.r2 / 100:
                    return X
            raise Reject("no point on circle")
        th = self.rng.uniform(0.0, 2 * math.pi)
        r = math.sqrt(circle.r2)
        return Point(circle.center.x + r * math.cos(th), circle.center.y + r * math.sin(th))

    def interior(self, A: Point, B: Point, C: Point, margin: float = 0.05) -> Point:
        """Uniform-ish interior point with barycentrics >= margin."""
        for _ in range(1000):
            u, v = self.uniform(0, 1), self.uniform(0, 1)
            if u + v > 1:
                u, v = 1 - u, 1 - v
            w = 1 - u - v
            if min(u, v, w) >= margin:
                return A * u + B * v + C * w
        raise Reject("no interior point")

    def convex_quad(self) -> tuple[Point, Point, Point, Point]:
        """Convex quadrilateral ABCD (counterclockwise) with no pair of parallel opposite sides."""
        for _ in range(10000):
            pts = [self.point() for _ in range(4)]
            A, B, C, D = pts
            crosses = [cross(Q - P, R - Q) for P, Q, R in ((A, B, C), (B, C, D), (C, D, A), (D, A, B))]
            if all(c > 0 for c in crosses) or all(c < 0 for c in crosses):
                if crosses[0] < 0:
                    A, B, C, D = A, D, C, B
                if _quad_ok(A, B, C, D):
                    return A, B, C, D
        raise Reject("no convex quadrilateral")


def _quad_ok(A: Point, B: Point, C: Point, D: Point) -> bool:
    def sin2(u: Point, v: Point) -> float:
        cr = float(cross(u, v))
        return cr * cr / (float(dist2(u, Point(0, 0))) * float(dist2(v, Point(0, 0))))

    sides = [B - A, C - B, D - C, A - D]
    if min(float(dist2(s, Point(0, 0))) for s in sides) < 0.04:
        return False
    # opposite sides far from parallel, interior angles not too flat
    if sin2(sides[0], sides[2]) < 0.03 or sin2(sides[1], sides[3]) < 0.03:
        return False
    return all(sin2(sides[i], sides[(i + 1) % 4]) > 0.05 for i in range(4))
