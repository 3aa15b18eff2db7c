from fractions import Fraction as F

import pytest

from circlekit.centers import Triangle
from circlekit.kernel import Point


@pytest.fixture
def right345():
    return Triangle(Point(0, 3), Point(0, 0), Point(4, 0))


@pytest.fixture
def right345_exact():
    return Triangle(Point(F(0), F(3)), Point(F(0), F(0)), Point(F(4), F(0)))


@pytest.fixture
def equilateral():
    return Triangle.from_sides(1.0, 1.0, 1.0)
