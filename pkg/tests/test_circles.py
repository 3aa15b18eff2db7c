import math
import random
from fractions import Fraction as F

import pytest

from circlekit.centers import CenterId, Triangle, brocard_angle, center
from circlekit.circles import (
    adjoint_circle,
    apollonius_rank_k,
    droz_farny,
    droz_farny_family,
    generalized_lemoine,
    lemoine_circle,
    lucas_circle,
    neuberg_circle,
    radical_circle_excircles,
    six_point_circle,
)
from circlekit.errors import IsoscelesUndefined, PointOutsideTriangle
from circlekit.kernel import Point, cross, dist, dist2, dot, power_of_point
from circlekit.registry import Sampler


def close(P, x, y, tol=1e-12):
    return abs(P.x - x) <= tol and abs(P.y - y) <= tol


class TestLemoine:
    def test_second(self, right345):
        res = lemoine_circle(right345, "second")
        assert close(res.circle.center, 0.72, 0.96)
        assert abs(math.sqrt(res.circle.r2) - 1.2) < 1e-12

    def test_second_exact_radius(self, right345_exact):
        assert lemoine_circle(right345_exact, "second").circle.r2 == F(36, 25)

    def test_first(self, right345):
        res = lemoine_circle(right345, "first")
        r = math.sqrt(res.circle.r2)
        assert abs(r - 0.5 * math.sqrt(7.69)) < 1e-12
        assert abs(r - 1.38654) < 1e-5
        for key in ("R_L1_closed_form", "R_L1_power_route"):
            assert abs(res.metadata[key] - r) < 1e-12

    def test_equilateral(self, equilateral):
        R = equilateral.R
        for order in ("first", "second"):
            c = lemoine_circle(equilateral, order).circle
            assert dist(c.center, center(equilateral, CenterId.CENTROID)) < 1e-12
            assert abs(math.sqrt(c.r2) - R / math.sqrt(3)) < 1e-12


class TestGeneralizedLemoine:
    T = Triangle(Point(0.3, 1.9), Point(-1.1, 0.0), Point(1.7, 0.2))

    def test_at_K_gives_first_circle(self):
        g = generalized_lemoine(self.T, 1.0).circle
        l = lemoine_circle(self.T, "first").circle
        assert dist(g.center, l.center) < 1e-12 and abs(g.r2 - l.r2) < 1e-12

    def test_center_on_OK(self):
        O = center(self.T, CenterId.CIRCUMCENTER)
        K = center(self.T, CenterId.SYMMEDIAN_POINT)
        for t in (0.2, 0.5, 0.8, 1.1):
            Z = generalized_lemoine(self.T, t).circle.center
            assert abs(cross(K - O, Z - O)) / dist2(O, K) < 1e-9

    def test_rejects_nonpositive(self):
        with pytest.raises(PointOutsideTriangle):
            generalized_lemoine(self.T, 0)


class TestDrozFarny:
    def test_right_triangle(self, right345):
        for order in ("first", "second"):
            assert abs(math.sqrt(droz_farny(right345, order).circle.r2) - 2.5) < 1e-12

    def test_equilateral(self, equilateral):
        assert abs(math.sqrt(droz_farny(equilateral).circle.r2) - 1 / math.sqrt(6)) < 1e-12

    def test_family(self, right345):
        assert abs(droz_farny_family(right345, 1.0).circle.r2 - 1) < 1e-12

    def test_family_rho_R_is_first_circle(self):
        T = Triangle(Point(0.3, 1.9), Point(-1.1, 0.0), Point(1.7, 0.2))
        fam = droz_farny_family(T, T.R).circle
        first = droz_farny(T).circle
        assert abs(fam.r2 - first.r2) < 1e-12

    def test_identity_exact(self):
        rng = random.Random(3)
        for _ in range(30):
            T = Triangle(*Sampler(rng, exact=True).triangle("acute"))
            O, H = center(T, CenterId.CIRCUMCENTER), center(T, CenterId.ORTHOCENTER)
            r2 = droz_farny(T, "second").circle.r2
            assert r2 - (T.R2 + dist2(O, H)) / 2 == 0
            assert dist2(O, H) == 9 * T.R2 - T.sum_sq


class TestExcircleRadical:
    def test_reference(self, right345):
        c = radical_circle_excircles(right345).circle
        assert close(c.center, 1.5, 1)
        assert abs(math.sqrt(c.r2) - 0.5 * math.sqrt(37)) < 1e-12

    def test_powers_equal_exactly(self, right345_exact):
        res = radical_circle_excircles(right345_exact)
        pw = res.metadata["powers"]
        assert all(isinstance(p, F) for p in pw)
        assert pw[0] == pw[1] == pw[2]

    def test_equilateral(self):
        s = 2.0
        T = Triangle.from_sides(s, s, s)
        c = radical_circle_excircles(T).circle
        assert dist(c.center, center(T, CenterId.CENTROID)) < 1e-12
        assert abs(math.sqrt(c.r2) - 0.5 * math.sqrt(s * s / 12 + 9 * s * s / 4)) < 1e-12


class TestNeuberg:
    def test_reference(self, right345):
        res = neuberg_circle(right345, "A")
        assert close(res.circle.center, 2, 25 / 6)
        assert abs(math.sqrt(res.circle.r2) - math.sqrt(193) / 6) < 1e-12
        assert abs(res.metadata["ON"] - 8 / 3) < 1e-12

    def test_equilateral_point_circle(self, equilateral):
        assert abs(neuberg_circle(equilateral).circle.r2) < 1e-12

    def test_equibrocardian_locus(self):
        T = Triangle(Point(0.3, 1.9), Point(-1.1, 0.0), Point(1.7, 0.2))
        c = neuberg_circle(T, "A").circle
        w = brocard_angle(T)
        rng = random.Random(5)
        for _ in range(50):
            th = rng.uniform(0, 2 * math.pi)
            M = c.center + Point(math.cos(th), math.sin(th)) * math.sqrt(c.r2)
            if abs(cross(T.C - T.B, M - T.B)) < 1e-3:
                continue
            assert abs(brocard_angle(Triangle(M, T.B, T.C)) - w) < 1e-8


class TestLucas:
    def test_reference(self, right345):
        res = lucas_circle(right345, "A")
        assert abs(math.sqrt(res.circle.r2) - 15 / 14) < 1e-12
        assert abs(res.metadata["l_from_height"] - 15 / 14) < 1e-12
        assert abs(res.metadata["l_from_sides"] - 15 / 14) < 1e-12

    def test_equilateral(self, equilateral):
        assert abs(math.sqrt(lucas_circle(equilateral).circle.r2) - 1 / (2 + math.sqrt(3))) < 1e-12


class TestApollonius:
    def test_bisector_circle(self, right345_exact):
        c = apollonius_rank_k(right345_exact, "A", 1).circle
        assert c.center == Point(F(-9, 4), F(0))
        assert c.r2 == F(225, 16)

    def test_symmedian_diameter(self, right345_exact):
        res = apollonius_rank_k(right345_exact, "A", 2)
        assert res.witness("internal") == Point(F(18, 17), F(0))
        assert res.witness("external") == Point(F(-9, 4), F(0))

    def test_isosceles(self, equilateral):
        with pytest.raises(IsoscelesUndefined):
            apollonius_rank_k(equilateral, "B", 1)


class TestSixPoint:
    T = Triangle(Point(0.3, 1.9), Point(-1.1, 0.0), Point(1.7, 0.2))

    def test_incenter_gives_incircle(self):
        c = six_point_circle(self.T, center(self.T, CenterId.INCENTER)).circle
        inc = self.T.incircle()
        assert dist(c.center, inc.center) < 1e-12 and abs(c.r2 - inc.r2) < 1e-12

    def test_orthocenter_gives_nine_point_circle(self):
        c = six_point_circle(self.T, center(self.T, CenterId.ORTHOCENTER)).circle
        assert dist(c.center, center(self.T, CenterId.NINE_POINT)) < 1e-12
        assert abs(c.r2 - self.T.R2 / 4) < 1e-12

    def test_outside(self):
        with pytest.raises(PointOutsideTriangle):
            six_point_circle(self.T, Point(5, 5))


def test_adjoint_equilateral(equilateral):
    T = equilateral
    c = adjoint_circle(T, "B", "A")
    # center on the perpendicular to AC at A, through B
    assert abs(dot(c.center - T.A, T.C - T.A)) < 1e-12
    assert abs(power_of_point(T.B, c)) < 1e-12
    assert abs(power_of_point(T.A, c)) < 1e-12
