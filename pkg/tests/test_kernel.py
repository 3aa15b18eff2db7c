import math
from fractions import Fraction as F

import pytest

from circlekit.errors import (
    CollinearPoints,
    ConcentricCircles,
    LineThroughCenter,
    PoleAtCenter,
)
from circlekit.kernel import (
    Circle,
    Line,
    Point,
    circle_through,
    circles_orthogonal,
    concyclicity_residual,
    join,
    meet_lines,
    pole_of_line,
    polar_line,
    power_of_point,
    radical_axis,
    second_intersection,
)

UNIT = Circle(Point(0, 0), 1)


def close(P, x, y, tol=1e-12):
    return abs(P.x - x) <= tol and abs(P.y - y) <= tol


def same_line(l, a, b, c):
    m = Line.make(a, b, c)
    return all(abs(u - v) <= 1e-12 for u, v in zip((l.a, l.b, l.c), (m.a, m.b, m.c)))


class TestMeet:
    def test_axes(self):
        P = meet_lines(Line.make(0, 1, 0), Line.make(1, 0, 0))
        assert close(P, 0, 0) and not P.at_infinity

    def test_parallel_gives_direction(self):
        P = meet_lines(Line.make(0, 1, 0), Line.make(0, 1, -1))
        assert P.at_infinity
        assert close(P, 1, 0)

    def test_square_diagonals(self):
        P = meet_lines(join(Point(0, 0), Point(1, 1)), join(Point(0, 1), Point(1, 0)))
        assert close(P, 0.5, 0.5)

    def test_exact_meet(self):
        P = meet_lines(join(Point(F(0), F(0)), Point(F(1), F(1))), join(Point(F(0), F(1)), Point(F(1), F(0))))
        assert (P.x, P.y) == (F(1, 2), F(1, 2))


class TestCircleThrough:
    def test_unit(self):
        c = circle_through(Point(1, 0), Point(0, 1), Point(-1, 0))
        assert close(c.center, 0, 0) and abs(c.r2 - 1) < 1e-12

    def test_collinear(self):
        with pytest.raises(CollinearPoints):
            circle_through(Point(0, 0), Point(1, 0), Point(2, 0))

    def test_right_triangle_exact(self):
        c = circle_through(Point(F(0), F(3)), Point(F(0), F(0)), Point(F(4), F(0)))
        assert c.center == Point(F(2), F(3, 2))
        assert c.r2 == F(25, 4)


class TestPower:
    def test_center(self):
        C = Circle(Point(1, 2), 4)
        assert power_of_point(C.center, C) == -4

    def test_on_circle(self):
        assert abs(power_of_point(Point(0.6, 0.8), UNIT)) < 1e-15

    def test_outside(self):
        assert power_of_point(Point(3, 0), UNIT) == 8


class TestRadicalAxis:
    def test_symmetric(self):
        assert same_line(radical_axis(UNIT, Circle(Point(2, 0), 1)), 1, 0, -1)

    def test_unequal(self):
        assert same_line(radical_axis(UNIT, Circle(Point(3, 0), 4)), 1, 0, -1)

    def test_concentric(self):
        with pytest.raises(ConcentricCircles):
            radical_axis(UNIT, Circle(Point(0, 0), 4))


class TestPolePolar:
    def test_polar(self):
        assert same_line(polar_line(Point(2, 0), UNIT), 1, 0, -0.5)

    def test_polar_of_point_on_circle_is_tangent(self):
        assert same_line(polar_line(Point(1, 0), UNIT), 1, 0, -1)

    def test_polar_of_center(self):
        with pytest.raises(PoleAtCenter):
            polar_line(Point(0, 0), UNIT)

    def test_pole(self):
        assert close(pole_of_line(Line.make(1, 0, -0.5), UNIT), 2, 0)
        assert close(pole_of_line(Line.make(1, 0, -1), UNIT), 1, 0)

    def test_pole_of_diameter(self):
        with pytest.raises(LineThroughCenter):
            pole_of_line(Line.make(1, 0, 0), UNIT)

    def test_exact_roundtrip(self):
        C = Circle(Point(F(1), F(2)), F(3))
        P = Point(F(5, 3), F(-7, 2))
        assert pole_of_line(polar_line(P, C), C) == P


class TestOrthogonality:
    def test_orthogonal(self):
        assert circles_orthogonal(UNIT, Circle(Point(2, 0), 3)) == 0

    def test_concentric(self):
        assert circles_orthogonal(UNIT, Circle(Point(0, 0), 4)) == -5

    def test_tangent(self):
        assert circles_orthogonal(UNIT, Circle(Point(2, 0), 1)) == 2


class TestConcyclicity:
    def test_unit_circle_points(self):
        pts = [Point(math.cos(t), math.sin(t)) for t in (0.1, 1.3, 2.9, 4.4, 5.5)]
        assert concyclicity_residual(pts) < 1e-12

    def test_square(self):
        pts = [Point(F(0), F(0)), Point(F(1), F(0)), Point(F(1), F(1)), Point(F(0), F(1))]
        assert concyclicity_residual(pts) == 0

    def test_off_circle(self):
        pts = [Point(1, 0), Point(0, 1), Point(-1, 0), Point(0, 2)]
        assert abs(concyclicity_residual(pts) - 3) < 1e-12


def test_second_intersection_exact():
    P = Point(F(1), F(0))
    l = join(P, Point(F(0), F(1)))
    Q = second_intersection(l, Circle(Point(F(0), F(0)), F(1)), P)
    assert Q == Point(F(0), F(1))
