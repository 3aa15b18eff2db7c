import math
import random
from fractions import Fraction as F

import pytest

from circlekit.centers import Triangle
from circlekit.errors import RightAngleCase
from circlekit.kernel import Point, cross, dist, dot, midpoint
from circlekit.registry import (
    equal_incircle_cevian,
    fixed_point,
    fixed_point_residual,
    parallelogram_residual,
    trapezoid_residual,
)
from circlekit.registry.solvers import _bisect_cevian, _inradius


def test_cevian_isosceles_exact():
    T = Triangle(Point(F(1), F(5)), Point(F(-2), F(1)), Point(F(4), F(1)))
    assert T.c2 == T.b2
    D, _ = equal_incircle_cevian(T)
    assert D == midpoint(T.B, T.C)


def test_cevian_reference(right345):
    D, r = equal_incircle_cevian(right345)
    assert abs(D.y) < 1e-12
    ref = _bisect_cevian(*right345.vertices)
    assert dist(D, ref) < 1e-9 * 4
    assert abs(_inradius(right345.A, right345.B, D) - _inradius(right345.A, D, right345.C)) < 1e-12
    assert abs(_inradius(right345.A, right345.B, D) - r) < 1e-15


def test_cevian_random():
    rng = random.Random(8)
    for _ in range(40):
        T = Triangle(*(Point(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(3)))
        if abs(T.S) < 0.05:
            continue
        D, _ = equal_incircle_cevian(T)
        A, B, C = T.vertices
        assert abs(cross(C - B, D - B)) < 1e-12
        assert abs(_inradius(A, B, D) - _inradius(A, D, C)) < 1e-9


def test_fixed_point_sixty():
    D = fixed_point(Point(-1, 0), Point(1, 0), math.radians(60))
    assert abs(D.x) < 1e-12
    assert abs(D.y + 1 / math.tan(math.radians(15))) < 1e-12


def test_fixed_point_hundred_twenty():
    A, B = Point(-1, 0), Point(1, 0)
    D = fixed_point(A, B, math.radians(120))
    assert D.y > 0
    u, v = A - D, B - D
    ang = math.acos(dot(u, v) / (dist(A, D) * dist(B, D)))
    assert abs(ang - math.radians(30)) < 1e-12


def test_fixed_point_side_follows_toward():
    A, B = Point(-1, 0), Point(1, 0)
    up = fixed_point(A, B, math.radians(60), toward=Point(0, 1))
    down = fixed_point(A, B, math.radians(60), toward=Point(0, -1))
    assert abs(up.y + down.y) < 1e-12 and up.y < 0


def test_right_angle():
    with pytest.raises(RightAngleCase):
        fixed_point(Point(-1, 0), Point(1, 0), math.pi / 2)


@pytest.mark.parametrize("deg", [30, 60, 120, 150])
def test_mediator_through_fixed_point(deg):
    A, B = Point(-1, 0), Point(1, 0)
    g = math.radians(deg)
    # arc of points seeing AB under g, above AB
    center = Point(0, 1 / math.tan(g))
    R = 1 / math.sin(g)
    rng = random.Random(deg)
    for _ in range(30):
        th = rng.uniform(0.15, 0.85)
        lo = math.atan2(-center.y, 1)
        phi = lo + th * (math.pi - 2 * lo)
        C = center + Point(math.cos(phi), math.sin(phi)) * R
        assert fixed_point_residual(A, B, C) < 1e-8


def test_parallelogram_at_right_angle():
    A, B = Point(-1, 0), Point(1, 0)
    for phi in (0.4, 1.0, 2.2):
        C = Point(math.cos(phi), math.sin(phi))
        assert parallelogram_residual(A, B, C) < 1e-12
    assert parallelogram_residual(A, B, Point(0.2, 0.5)) > 1e-3


def test_trapezoid_at_arc_midpoint():
    assert trapezoid_residual(Point(-1, 0), Point(1, 0), Point(0, 0.7)) < 1e-12
