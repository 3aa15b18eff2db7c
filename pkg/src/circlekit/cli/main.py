"""The ``circlekit`` command."""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .. import circles
from ..centers import CenterId, DerivedTriangleId, Triangle, center, derived_points
from ..errors import BackendUnsupported, GeometryError, RulerError, UnknownCheck
from ..kernel import Point
from ..registry import get_check, list_checks, run_check
from ..ruler import BUILTINS, builtin, execute, parse, sample_givens, verify
from ..scene import SceneDocument
from .render import RenderOptions, render_scene

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNKNOWN = 0, 1, 2, 3

CIRCLE_IDS = (
    "lemoine1",
    "lemoine2",
    "lemoine-gen",
    "droz-farny1",
    "droz-farny2",
    "df-family",
    "excircle-radical",
    "neuberg",
    "lucas",
    "apollonius",
    "six-point",
    "adjoint",
)


class UsageError(Exception):
    pass


def _number(text: str, exact: bool) -> Any:
    try:
        return Fraction(text) if exact else float(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a number: {text!r}") from None


def _pair(text: str, exact: bool) -> Point:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected x,y but got {text!r}")
    return Point(_number(parts[0], exact), _number(parts[1], exact))


def _triangle(args: argparse.Namespace) -> Triangle:
    exact = _opt(args, "backend") == "rational"
    if args.points:
        return Triangle(*(_pair(p, exact) for p in args.points))
    if args.sides:
        parts = args.sides.split(",")
        if len(parts) != 3:
            raise UsageError("--sides needs a,b,c")
        return Triangle.from_sides(*(_number(s, exact) for s in parts))
    raise UsageError("give the triangle with --points or --sides")


def _opt(args: argparse.Namespace, name: str) -> Any:
    defaults = {"backend": "f64", "seed": 42, "tolerance": 1e-7, "json": False}
    return getattr(args, name, defaults[name])


def _emit(doc: SceneDocument) -> None:
    sys.stdout.write(doc.to_json() + "\n")


def cmd_centers(args: argparse.Namespace) -> int:
    T = _triangle(args)
    objects: dict[str, Any] = {"A": T.A, "B": T.B, "C": T.C}
    skipped: dict[str, str] = {}
    for cid in CenterId:
        try:
            objects[cid.value] = center(T, cid)
        except GeometryError as e:
            skipped[cid.value] = e.code
    for did in DerivedTriangleId:
        try:
            for v, P in zip("ABC", derived_points(T, did)):
                objects[f"{did.value}_{v}"] = P
        except GeometryError as e:
            skipped[did.value] = e.code
    meta = {"unavailable": skipped} if skipped else None
    _emit(SceneDocument.from_objects(objects, meta))
    return EXIT_OK


def _circle_result(T: Triangle, args: argparse.Namespace) -> circles.NamedCircleResult:
    exact = _opt(args, "backend") == "rational"
    cid = args.circle_id

    def need(name: str) -> Any:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"{cid} needs --{name.replace('_', '-')}")
        return value

    if cid in ("lemoine1", "lemoine2"):
        return circles.lemoine_circle(T, "first" if cid == "lemoine1" else "second")
    if cid == "lemoine-gen":
        return circles.generalized_lemoine(T, _number(need("t"), exact))
    if cid in ("droz-farny1", "droz-farny2"):
        return circles.droz_farny(T, "first" if cid == "droz-farny1" else "second")
    if cid == "df-family":
        return circles.droz_farny_family(T, _number(need("rho"), exact))
    if cid == "excircle-radical":
        return circles.radical_circle_excircles(T)
    if cid == "neuberg":
        return circles.neuberg_circle(T, args.vertex or "A")
    if cid == "lucas":
        return circles.lucas_circle(T, args.vertex or "A")
    if cid == "apollonius":
        return circles.apollonius_rank_k(T, args.vertex or "A", _number(need("k"), exact))
    if cid == "six-point":
        return circles.six_point_circle(T, _pair(need("p1"), exact))
    circle = circles.adjoint_circle(T, need("through"), need("tangent_at"))
    return circles.NamedCircleResult(circle, (), {})


def cmd_circle(args: argparse.Namespace) -> int:
    T = _triangle(args)
    res = _circle_result(T, args)
    objects: dict[str, Any] = {"A": T.A, "B": T.B, "C": T.C, args.circle_id: res.circle}
    for label, P in res.witnesses:
        objects.setdefault(label, P)
    _emit(SceneDocument.from_objects(objects, dict(res.metadata)))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    backend = _opt(args, "backend")
    if args.ids == ["all"]:
        checks = [c for c in list_checks() if ("rational" if backend == "rational" else "float") in c.backends]
        ids = [c.id for c in checks]
    else:
        ids = list(args.ids)
        for i in ids:
            get_check(i)
    failed = 0
    reports = []
    for i in ids:
        r = run_check(i, seed=_opt(args, "seed"), trials=args.trials, backend=backend, threshold=_opt(args, "tolerance"))
        reports.append(r)
        failed += not r.passed
        if _opt(args, "json"):
            sys.stdout.write(r.to_json() + "\n")
    if not _opt(args, "json"):
        sys.stdout.write(f"{'id':<8} {'trials':>6} {'failures':>8} {'max_residual':>12}  status\n")
        for r in reports:
            status = "pass" if r.passed else "FAIL"
            sys.stdout.write(f"{r.id:<8} {r.trials:>6} {r.failures:>8} {float(r.max_residual):>12.3e}  {status}\n")
        sys.stdout.write(f"{len(reports) - failed}/{len(reports)} passed\n")
    return EXIT_FAIL if failed else EXIT_OK


def _program(args: argparse.Namespace):
    if args.builtin:
        if args.builtin not in BUILTINS:
            raise UsageError(f"unknown builtin {args.builtin!r}; choose from {', '.join(BUILTINS)}")
        return builtin(args.builtin)
    if not args.program:
        raise UsageError("give a .ruler file or --builtin")
    path = Path(args.program)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return parse(text, name=path.stem)


def cmd_ruler(args: argparse.Namespace) -> int:
    program = _program(args)
    seed = _opt(args, "seed")
    if args.action == "verify":
        r = verify(program, trials=args.trials, seed=seed, threshold=_opt(args, "tolerance"))
        if _opt(args, "json"):
            sys.stdout.write(r.to_json() + "\n")
        else:
            status = "pass" if r.passed else "FAIL"
            sys.stdout.write(f"{r.id}: {r.trials} trials, {r.failures} failures, max residual {float(r.max_residual):.3e}  {status}\n")
        return EXIT_OK if r.passed else EXIT_FAIL
    case = args.case
    if args.givens:
        doc = SceneDocument.from_json(Path(args.givens).read_text(encoding="utf-8"))
        givens: Any = doc
        case = case or doc.meta.get("case")
    else:
        if program.output is None:
            raise UsageError("without --givens the program needs an output predicate to sample givens")
        givens, sampled = sample_givens(program.output[1], random.Random(f"ruler-run:{seed}"))
        case = case or sampled
    scene = execute(program, givens, seed, case)
    _emit(scene.to_document())
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    text = sys.stdin.read() if args.scene == "-" else Path(args.scene).read_text(encoding="utf-8")
    try:
        doc = SceneDocument.from_json(text)
    except (ValueError, KeyError, TypeError) as e:
        raise UsageError(f"invalid scene document: {e}") from None
    svg = render_scene(doc, RenderOptions(size=args.size, margin=args.margin, labels=not args.no_labels))
    if args.output:
        Path(args.output).write_text(svg, encoding="utf-8")
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def _global_flags(parser: argparse.ArgumentParser) -> None:
    s = argparse.SUPPRESS
    parser.add_argument("--backend", choices=("f64", "rational"), default=s, help="number backend (default f64)")
    parser.add_argument("--tolerance", "--threshold", dest="tolerance", type=float, default=s, help="pass threshold (default 1e-7)")
    parser.add_argument("--seed", type=int, default=s, help="random seed (default 42)")
    parser.add_argument("--json", action="store_true", default=s, help="JSON lines output")


def _triangle_flags(parser: argparse.ArgumentParser) -> None:
    g = parser.add_mutually_exclusive_group()
    g.add_argument("--points", nargs=3, metavar="X,Y", help="vertices A B C")
    g.add_argument("--sides", metavar="A,B,C", help="side lengths a,b,c (B at the origin, C on the x-axis)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="circlekit", description=__doc__)
    _global_flags(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("centers", help="triangle centers and derived triangles")
    _global_flags(p)
    _triangle_flags(p)
    p.set_defaults(func=cmd_centers)

    p = sub.add_parser("circle", help="one named circle with its witness points")
    _global_flags(p)
    _triangle_flags(p)
    p.add_argument("circle_id", choices=CIRCLE_IDS)
    p.add_argument("--t")
    p.add_argument("--rho")
    p.add_argument("--vertex", choices=("A", "B", "C"))
    p.add_argument("--k")
    p.add_argument("--p1", metavar="X,Y")
    p.add_argument("--through", choices=("A", "B", "C"))
    p.add_argument("--tangent-at", dest="tangent_at", choices=("A", "B", "C"))
    p.set_defaults(func=cmd_circle)

    p = sub.add_parser("check", help="run catalog checks")
    _global_flags(p)
    p.add_argument("ids", nargs="+", help='check ids, or "all"')
    p.add_argument("--trials", type=int, default=300)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("ruler", help="run or verify a straightedge program")
    _global_flags(p)
    p.add_argument("action", choices=("run", "verify"))
    p.add_argument("program", nargs="?", help="path to a .ruler file")
    p.add_argument("--builtin", help=f"one of {', '.join(BUILTINS)}")
    p.add_argument("--trials", type=int, default=300)
    p.add_argument("--givens", help="scene document with the given objects (run only)")
    p.add_argument("--case", help="branch tag for programs with cases")
    p.set_defaults(func=cmd_ruler)

    p = sub.add_parser("render", help="draw a scene document as SVG")
    _global_flags(p)
    p.add_argument("scene", help='scene JSON file, or "-" for stdin')
    p.add_argument("-o", "--output")
    p.add_argument("--size", type=int, default=512)
    p.add_argument("--margin", type=float, default=0.08)
    p.add_argument("--no-labels", action="store_true")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownCheck as e:
        print(f"circlekit: {e}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (GeometryError, RulerError, BackendUnsupported, UsageError, ValueError) as e:
        print(f"circlekit: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
