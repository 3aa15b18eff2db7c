"""Catalog plumbing: check descriptors, the trial loop and reports."""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from ..errors import BackendUnsupported, GeometryError, UnknownCheck
from ..kernel import Point, Scalar
from ..scene import SceneDocument
from .sampling import Reject, Sampler

MAX_REJECTIONS = 100

Scene = dict[str, Any]
Generator = Callable[[Sampler], Scene]
Residual = Callable[[Scene, bool], Scalar]


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    statement: str
    generator: Generator = field(repr=False)
    residual: Residual = field(repr=False)
    backends: frozenset[str] = frozenset({"float"})
    mutation: str | None = None

    @property
    def backend_support(self) -> str:
        if self.backends == {"float", "rational"}:
            return "both"
        return next(iter(self.backends))


@dataclass(frozen=True)
class CheckReport:
    id: str
    trials: int
    max_residual: Scalar
    mean_residual: Scalar
    failures: int
    worst_scene: dict[str, Any]
    seed: int

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "id": self.id,
            "trials": self.trials,
            "max_residual": _jnum(self.max_residual),
            "mean_residual": _jnum(self.mean_residual),
            "failures": self.failures,
            "worst_scene": self.worst_scene,
            "seed": self.seed,
        }
        if isinstance(self.max_residual, Fraction):
            out["max_residual_exact"] = _frac(self.max_residual)
            out["mean_residual_exact"] = _frac(self.mean_residual)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _jnum(x: Scalar) -> Any:
    x = float(x)
    return x if math.isfinite(x) else None


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


_CATALOG: dict[str, TheoremCheck] = {}


def register(
    id: str,
    statement: str,
    generator: Generator,
    backends: tuple[str, ...] = ("float",),
    mutation: str | None = None,
) -> Callable[[Residual], Residual]:
    def deco(fn: Residual) -> Residual:
        if id in _CATALOG:
            raise ValueError(f"duplicate check id {id}")
        _CATALOG[id] = TheoremCheck(id, statement, generator, fn, frozenset(backends), mutation)
        return fn

    return deco


def _load() -> None:
    from . import catalog  # noqa: F401  (registers on import)


def list_checks() -> list[TheoremCheck]:
    _load()
    return list(_CATALOG.values())


def get_check(id: str) -> TheoremCheck:
    _load()
    try:
        return _CATALOG[id]
    except KeyError:
        raise UnknownCheck(id) from None


def _backend(name: str) -> str:
    name = {"f64": "float", "exact": "rational"}.get(name, name)
    if name not in ("float", "rational"):
        raise ValueError(f"unknown backend {name!r}")
    return name


def sample_scene(check: TheoremCheck, seed: int, trial: int, exact: bool) -> tuple[Scene, Scalar]:
    """Draw the trial's scene (resampling degenerate draws) and evaluate it."""
    scene, res, _ = _trial(check, seed, trial, exact, False)
    return scene, res


def _trial(check: TheoremCheck, seed: int, trial: int, exact: bool, mutant: bool) -> tuple[Scene, Scalar, bool]:
    rng = random.Random(f"{check.id}:{seed}:{trial}")
    sampler = Sampler(rng, exact)
    for _ in range(MAX_REJECTIONS):
        try:
            scene = check.generator(sampler)
            return scene, check.residual(scene, mutant), True
        except Reject:
            continue
    return {}, math.inf, False


def run_check(
    id: str,
    seed: int = 42,
    trials: int = 300,
    backend: str = "float",
    threshold: float = 1e-7,
    mutant: bool = False,
) -> CheckReport:
    """Run ``trials`` seeded scenes; on the rational backend any nonzero residual fails."""
    check = get_check(id)
    backend = _backend(backend)
    if backend not in check.backends:
        raise BackendUnsupported(f"{id} does not support the {backend} backend")
    if mutant and check.mutation is None:
        raise ValueError(f"{id} has no mutation control")
    exact = backend == "rational"
    total: Scalar = Fraction(0) if exact else 0.0
    worst: Scalar = -1
    worst_scene: Scene = {}
    failures = 0
    for i in range(trials):
        try:
            scene, res, ok = _trial(check, seed, i, exact, mutant)
        except GeometryError:
            scene, res, ok = {}, math.inf, False
        if exact and ok and not isinstance(res, Fraction):
            # a float slipped into an exact computation; count it as a failure
            ok = False
        failed = (not ok) or (res != 0 if exact else not res <= threshold)
        failures += failed
        total = total + res
        if res > worst or (not ok and worst_scene == {}):
            worst, worst_scene = res, scene
    mean = total / trials if trials else total
    if worst == -1:
        worst = Fraction(0) if exact else 0.0
    return CheckReport(id, trials, worst, mean, failures, serialize_scene(worst_scene), seed)


def serialize_scene(scene: Scene) -> dict[str, Any]:
    return SceneDocument.from_objects(scene).to_dict()


def transform_scene(scene: Scene, scale: float, angle: float, shift: tuple[float, float]) -> Scene:
    """Apply a similarity to every point of a float scene (other values are dimensionless)."""
    c, s = math.cos(angle), math.sin(angle)
    out: Scene = {}
    for k, v in scene.items():
        if isinstance(v, Point) and not v.at_infinity:
            x, y = float(v.x), float(v.y)
            out[k] = Point(scale * (c * x - s * y) + shift[0], scale * (s * x + c * y) + shift[1])
        else:
            out[k] = v
    return out
