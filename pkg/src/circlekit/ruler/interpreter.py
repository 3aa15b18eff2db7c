"""Execute ruler programs on float coordinates."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Any, Mapping

from ..errors import DegenerateStep, GeometryError, KindError, MissingGiven
from ..kernel import Circle, Line, Point, cross, dist2, dot, join, line_circle_intersections, meet_lines
from ..scene import SceneDocument
from .program import Program, Step

# relative tolerances for the incidence checks of second_meet and meet
ON_TOL = 1e-9
PARALLEL_TOL = 1e-12
# free points keep this parameter distance from known points of their line
EXCLUSION = 0.05
HINT_RANGES = {"any": (-1.5, 2.5), "between": (0.15, 0.85), "past": (1.3, 2.5)}


@dataclass
class RulerScene:
    objects: dict[str, Any] = field(default_factory=dict)
    provenance: dict[str, str] = field(default_factory=dict)
    case: str | None = None

    def __getitem__(self, name: str) -> Any:
        return self.objects[name]

    def to_document(self) -> SceneDocument:
        meta: dict[str, Any] = {"provenance": dict(sorted(self.provenance.items()))}
        if self.case is not None:
            meta["case"] = self.case
        return SceneDocument.from_objects(self.objects, meta)


def _float_point(P: Point) -> Point:
    return Point(float(P.x), float(P.y))


def _givens(program: Program, givens: Mapping[str, Any] | SceneDocument) -> dict[str, Any]:
    if isinstance(givens, SceneDocument):
        pool: dict[str, Any] = {**givens.points, **givens.circles, **givens.lines}
    else:
        pool = dict(givens)
    out = {}
    for g in program.givens:
        if g.name not in pool:
            raise MissingGiven(f"given {g.name!r} was not supplied", g.line)
        obj = pool[g.name]
        if g.kind == "point" and not (isinstance(obj, Point) and not obj.at_infinity):
            raise KindError(f"given {g.name!r} must be a finite point", g.line)
        if g.kind == "line" and not isinstance(obj, Line):
            raise KindError(f"given {g.name!r} must be a line", g.line)
        if g.kind == "circle_with_center" and not isinstance(obj, Circle):
            raise KindError(f"given {g.name!r} must be a circle", g.line)
        if isinstance(obj, Point):
            out[g.name] = _float_point(obj)
        elif isinstance(obj, Line):
            out[g.name] = Line.make(float(obj.a), float(obj.b), float(obj.c))
        else:
            out[g.name] = Circle(_float_point(obj.center), float(obj.r2))
    return out


class _Run:
    def __init__(self, program: Program, objects: dict[str, Any], rng: random.Random) -> None:
        self.program = program
        self.objects = objects
        self.rng = rng
        self.circle: Circle | None = objects.get(program.circle) if program.circle else None
        # defining points of each drawn line, for "past:" hints
        self.through: dict[str, tuple[str, str]] = {}
        pts = [v for v in objects.values() if isinstance(v, Point)]
        if self.circle is not None:
            pts.append(self.circle.center)
        self.scale = max((math.sqrt(dist2(P, Q)) for P in pts for Q in pts), default=1.0) or 1.0
        if self.circle is not None:
            self.scale = max(self.scale, 2 * math.sqrt(self.circle.r2))

    def fail(self, step: Step, msg: str) -> DegenerateStep:
        return DegenerateStep(f"{step.name} = {step.op}(...): {msg}", step.line)

    def points(self) -> list[Point]:
        return [v for v in self.objects.values() if isinstance(v, Point)]

    def join(self, step: Step, P: Point, Q: Point) -> Line:
        if dist2(P, Q) <= (1e-12 * self.scale) ** 2:
            raise self.fail(step, "the two points coincide")
        self.through[step.name] = step.args
        return join(P, Q)

    def meet(self, step: Step, l: Line, m: Line) -> Point:
        d1, d2 = l.direction, m.direction
        if abs(cross(d1, d2)) <= PARALLEL_TOL * math.sqrt(dot(d1, d1) * dot(d2, d2)):
            raise self.fail(step, "the lines are parallel")
        try:
            return meet_lines(l, m)
        except GeometryError as e:
            raise self.fail(step, str(e)) from None

    def on_line(self, step: Step, lname: str, hint: str) -> Point:
        if lname in self.through:
            a, b = self.through[lname]
            X, Y = self.objects[a], self.objects[b]
        else:
            # a given line: parametrize from the foot of the origin, one scene size per unit
            if hint.startswith("past:"):
                raise KindError(f"{lname!r} is a given line; use \"any\" or \"between\"", step.line)
            l = self.objects[lname]
            a = b = ""
            X = Point(-l.a * l.c, -l.b * l.c)
            Y = X + l.direction * self.scale
        lo, hi = HINT_RANGES["past" if hint.startswith("past:") else hint]
        flip = hint.startswith("past:")
        if flip:
            target = hint[5:]
            if target not in (a, b):
                raise KindError(f"{target!r} is not one of the points defining {lname!r}", step.line)
            if target == a:
                # parameter measured from Y through X
                X, Y = Y, X
        d = Y - X
        n2 = dot(d, d)
        known = []
        for P in self.points():
            if abs(cross(d, P - X)) <= ON_TOL * n2:
                known.append(dot(P - X, d) / n2)
        for _ in range(100):
            t = self.rng.uniform(lo, hi)
            if all(abs(t - k) > EXCLUSION for k in known):
                return X + d * t
        raise self.fail(step, "no free choice avoids the existing points")

    def on_circle(self, step: Step) -> Point:
        C = self.circle
        r = math.sqrt(C.r2)
        for _ in range(100):
            th = self.rng.uniform(0.0, 2 * math.pi)
            P = Point(C.center.x + r * math.cos(th), C.center.y + r * math.sin(th))
            if all(dist2(P, Q) > (EXCLUSION * r) ** 2 for Q in self.points()):
                return P
        raise self.fail(step, "no free choice avoids the existing points")

    def second_meet(self, step: Step, l: Line, P: Point) -> Point:
        C = self.circle
        if abs(l.a * P.x + l.b * P.y + l.c) > ON_TOL * self.scale:
            raise self.fail(step, f"{step.args[1]} is not on the line")
        if abs(dist2(P, C.center) - C.r2) > ON_TOL * C.r2:
            raise self.fail(step, f"{step.args[1]} is not on the circle")
        hits = line_circle_intersections(l, C)
        if not hits:
            raise self.fail(step, "the line misses the circle")
        return max(hits, key=lambda X: dist2(X, P))

    def step(self, step: Step) -> Any:
        a = [self.objects[x] for x in step.refs]
        if step.op == "join":
            return self.join(step, *a)
        if step.op == "meet":
            return self.meet(step, *a)
        if step.op == "on_line":
            return self.on_line(step, step.args[0], step.hint)
        if step.op == "on_circle":
            return self.on_circle(step)
        return self.second_meet(step, *a)


def execute(
    program: Program,
    givens: Mapping[str, Any] | SceneDocument,
    seed: int = 0,
    case: str | None = None,
) -> RulerScene:
    """Run every step in order; free choices come from ``random.Random(seed)``."""
    if program.cases and case not in program.cases:
        raise MissingGiven(f"choose a case from {', '.join(program.cases)}")
    objects = _givens(program, givens)
    scene = RulerScene(dict(objects), {k: "given" for k in objects}, case)
    run = _Run(program, scene.objects, random.Random(seed))
    for i, step in enumerate(program.steps_for(case), start=1):
        value = run.step(step)
        scene.objects[step.name] = value
        scene.provenance[step.name] = f"{'free' if step.op in ('on_line', 'on_circle') else 'step'} {i}"
    return scene
