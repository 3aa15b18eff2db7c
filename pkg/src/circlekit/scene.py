"""The JSON scene document shared by reports, the ruler interpreter and the CLI."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

from .kernel import Circle, Line, Point

VERSION = "1"


def _num(x: Any) -> Any:
    if isinstance(x, Fraction):
        return float(x)
    if isinstance(x, float):
        return x + 0.0 if math.isfinite(x) else None
    return x


def _exact(x: Any) -> str | None:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    return None


def _meta_value(v: Any) -> Any:
    if isinstance(v, (Fraction, float, int, str, bool)) or v is None:
        return _num(v)
    if isinstance(v, Point):
        return [_num(v.x), _num(v.y)]
    if isinstance(v, (list, tuple)):
        return [_meta_value(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _meta_value(x) for k, x in sorted(v.items())}
    return str(v)


@dataclass
class SceneDocument:
    points: dict[str, Point] = field(default_factory=dict)
    lines: dict[str, Line] = field(default_factory=dict)
    circles: dict[str, Circle] = field(default_factory=dict)
    styles: dict[str, dict[str, str]] = field(default_factory=dict)
    meta: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_objects(cls, objects: Mapping[str, Any], meta: Mapping[str, Any] | None = None) -> SceneDocument:
        """Sort a name -> object map into the document's sections; other values go to ``meta``."""
        doc = cls()
        for name, obj in objects.items():
            if isinstance(obj, Point):
                doc.points[name] = obj
            elif isinstance(obj, Line):
                doc.lines[name] = obj
            elif isinstance(obj, Circle):
                doc.circles[name] = obj
            else:
                doc.meta[name] = obj
        if meta:
            doc.meta.update(meta)
        return doc

    @property
    def is_empty(self) -> bool:
        return not (self.points or self.lines or self.circles)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"version": VERSION}
        pts = {k: v for k, v in self.points.items() if not v.at_infinity}
        dirs = {k: v for k, v in self.points.items() if v.at_infinity}
        out["points"] = {k: [_num(p.x), _num(p.y)] for k, p in sorted(pts.items())}
        if dirs:
            out["directions"] = {k: [_num(p.x), _num(p.y)] for k, p in sorted(dirs.items())}
        out["lines"] = {k: [_num(l.a), _num(l.b), _num(l.c)] for k, l in sorted(self.lines.items())}
        out["circles"] = {
            k: {"center": [_num(c.center.x), _num(c.center.y)], "r2": _num(c.r2)}
            for k, c in sorted(self.circles.items())
        }
        if self.styles:
            out["styles"] = {k: dict(sorted(v.items())) for k, v in sorted(self.styles.items())}
        if self.meta:
            out["meta"] = {k: _meta_value(v) for k, v in sorted(self.meta.items())}
        exact = self._exact_section()
        if exact:
            out["exact"] = exact
        return out

    def _exact_section(self) -> dict[str, Any]:
        ex: dict[str, Any] = {}
        pts = {k: [_exact(p.x), _exact(p.y)] for k, p in sorted(self.points.items()) if p.exact}
        if pts:
            ex["points"] = pts
        lines = {k: [_exact(l.a), _exact(l.b), _exact(l.c)] for k, l in sorted(self.lines.items()) if isinstance(l.a, Fraction)}
        if lines:
            ex["lines"] = lines
        circles = {
            k: {"center": [_exact(c.center.x), _exact(c.center.y)], "r2": _exact(c.r2)}
            for k, c in sorted(self.circles.items())
            if c.center.exact and isinstance(c.r2, Fraction)
        }
        if circles:
            ex["circles"] = circles
        meta = {k: _exact(v) for k, v in sorted(self.meta.items()) if isinstance(v, Fraction)}
        if meta:
            ex["meta"] = meta
        return ex

    def to_json(self, indent: int | None = 2) -> str:
        """Canonical text: one line per named object when indented, compact otherwise."""
        data = self.to_dict()
        if indent is None:
            return json.dumps(data, separators=(",", ":"))
        pad = " " * indent
        parts = []
        for key, value in data.items():
            if isinstance(value, dict) and value:
                inner = ",\n".join(f"{pad * 2}{json.dumps(k)}: {json.dumps(v)}" for k, v in value.items())
                parts.append(f"{pad}{json.dumps(key)}: {{\n{inner}\n{pad}}}")
            else:
                parts.append(f"{pad}{json.dumps(key)}: {json.dumps(value)}")
        return "{\n" + ",\n".join(parts) + "\n}"

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> SceneDocument:
        if str(data.get("version", "")) != VERSION:
            raise ValueError(f"unsupported scene version {data.get('version')!r}")
        ex = data.get("exact", {})

        def val(x: Any, e: Any) -> Any:
            if e is not None:
                return Fraction(e)
            return float(x)

        doc = cls()
        for k, (x, y) in data.get("points", {}).items():
            e = ex.get("points", {}).get(k, [None, None])
            doc.points[k] = Point(val(x, e[0]), val(y, e[1]))
        for k, (x, y) in data.get("directions", {}).items():
            doc.points[k] = Point(float(x), float(y), True)
        for k, (a, b, c) in data.get("lines", {}).items():
            e = ex.get("lines", {}).get(k, [None, None, None])
            doc.lines[k] = Line(val(a, e[0]), val(b, e[1]), val(c, e[2]))
        for k, c in data.get("circles", {}).items():
            e = ex.get("circles", {}).get(k, {"center": [None, None], "r2": None})
            cx, cy = c["center"]
            doc.circles[k] = Circle(Point(val(cx, e["center"][0]), val(cy, e["center"][1])), val(c["r2"], e["r2"]))
        doc.styles = {k: dict(v) for k, v in data.get("styles", {}).items()}
        em = ex.get("meta", {})
        doc.meta = {k: (Fraction(em[k]) if k in em else v) for k, v in data.get("meta", {}).items()}
        return doc

    @classmethod
    def from_json(cls, text: str) -> SceneDocument:
        return cls.from_dict(json.loads(text))
