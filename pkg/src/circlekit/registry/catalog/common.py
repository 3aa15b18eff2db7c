"""Small pieces shared by the chapter modules."""

from __future__ import annotations

from typing import Callable

from ...centers import CenterId, Triangle, center
from ...kernel import Line, Point, Scalar, line_through, meet_lines, rot90
from ..residuals import scene_scale2
from ..sampling import Reject, Sampler


def triangle_scene(kind: str = "any", **params: tuple[float, float]) -> Callable[[Sampler], dict]:
    """Generator for a triangle plus uniform dimensionless parameters."""

    def gen(s: Sampler) -> dict:
        A, B, C = s.triangle(kind)
        scene: dict = {"A": A, "B": B, "C": C}
        for name, (lo, hi) in params.items():
            scene[name] = s.uniform(lo, hi)
        return scene

    return gen


def tri(scene: dict) -> Triangle:
    return Triangle(scene["A"], scene["B"], scene["C"])


def setup(scene: dict) -> tuple[Triangle, Scalar]:
    return tri(scene), scene_scale2(scene)


def meet(l1: Line, l2: Line) -> Point:
    X = meet_lines(l1, l2)
    if X.at_infinity:
        raise Reject("parallel lines")
    return X


def O_of(T: Triangle) -> Point:
    return center(T, CenterId.CIRCUMCENTER)


def K_of(T: Triangle) -> Point:
    return center(T, CenterId.SYMMEDIAN_POINT)


def H_of(T: Triangle) -> Point:
    return center(T, CenterId.ORTHOCENTER)


def G_of(T: Triangle) -> Point:
    return center(T, CenterId.CENTROID)


def tangent_dir(T: Triangle, v: str) -> Point:
    """Direction of the circumcircle tangent at vertex v (every antiparallel to the opposite side)."""
    return rot90(O_of(T) - T.vertex(v))


def antiparallel(T: Triangle, v: str, P: Point) -> Line:
    """Line through P antiparallel to the side opposite v."""
    return line_through(P, tangent_dir(T, v))
