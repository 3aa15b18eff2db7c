"""Deterministic SVG output for scene documents."""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape, quoteattr

from ..scene import SceneDocument

COLORS = {"point": "#000000", "line": "#1f77b4", "circle": "#d62728"}


@dataclass(frozen=True)
class RenderOptions:
    size: int = 512
    margin: float = 0.08
    labels: bool = True
    deterministic: bool = True

    def __post_init__(self) -> None:
        if self.size <= 0:
            raise ValueError("canvas size must be positive")
        if not 0 <= self.margin < 0.5:
            raise ValueError("margin must lie in [0, 0.5)")


def fmt(x: float) -> str:
    """Shortest round-trip decimal, with -0 folded into 0."""
    x = float(x) + 0.0
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return repr(x)


def _bbox(doc: SceneDocument) -> tuple[float, float, float, float] | None:
    xs: list[float] = []
    ys: list[float] = []
    for p in doc.points.values():
        if not p.at_infinity:
            xs.append(float(p.x))
            ys.append(float(p.y))
    for c in doc.circles.values():
        r = math.sqrt(max(float(c.r2), 0.0))
        xs += [float(c.center.x) - r, float(c.center.x) + r]
        ys += [float(c.center.y) - r, float(c.center.y) + r]
    if not xs:
        return None
    return min(xs), min(ys), max(xs), max(ys)


def _clip(a: float, b: float, c: float, box: tuple[float, float, float, float]):
    """Segment of the line ax + by + c = 0 inside the box, or None."""
    x0, y0, x1, y1 = box
    pts = []
    if abs(b) > 1e-15:
        for x in (x0, x1):
            y = -(a * x + c) / b
            if y0 - 1e-12 <= y <= y1 + 1e-12:
                pts.append((x, y))
    if abs(a) > 1e-15:
        for y in (y0, y1):
            x = -(b * y + c) / a
            if x0 - 1e-12 <= x <= x1 + 1e-12:
                pts.append((x, y))
    if len(pts) < 2:
        return None
    pts.sort()
    return pts[0], pts[-1]


def render_scene(doc: SceneDocument, opts: RenderOptions | None = None) -> str:
    opts = opts or RenderOptions()
    S = opts.size
    head = f'<svg xmlns="http://www.w3.org/2000/svg" width="{S}" height="{S}"'
    box = _bbox(doc)
    if box is None:
        return head + ' viewBox="0 0 1 1">\n</svg>\n'
    x0, y0, x1, y1 = box
    span = max(x1 - x0, y1 - y0) or 1.0
    k = S * (1 - 2 * opts.margin) / span
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2

    def px(x: float, y: float) -> tuple[str, str]:
        # y grows downward on the canvas
        return fmt(S / 2 + (x - cx) * k), fmt(S / 2 - (y - cy) * k)

    half = S / 2 / k
    world = (cx - half, cy - half, cx + half, cy + half)
    out = [head + f' viewBox="0 0 {S} {S}">']

    def stroke(name: str, kind: str) -> str:
        return doc.styles.get(name, {}).get("stroke", COLORS[kind])

    labels = []
    for name, c in sorted(doc.circles.items()):
        X, Y = px(float(c.center.x), float(c.center.y))
        r = fmt(math.sqrt(max(float(c.r2), 0.0)) * k)
        out.append(f'<circle cx="{X}" cy="{Y}" r="{r}" fill="none" stroke={quoteattr(stroke(name, "circle"))}/>')
    for name, l in sorted(doc.lines.items()):
        seg = _clip(float(l.a), float(l.b), float(l.c), world)
        if seg is None:
            continue
        (ax, ay), (bx, by) = seg
        X1, Y1 = px(ax, ay)
        X2, Y2 = px(bx, by)
        out.append(f'<line x1="{X1}" y1="{Y1}" x2="{X2}" y2="{Y2}" stroke={quoteattr(stroke(name, "line"))}/>')
    for name, p in sorted(doc.points.items()):
        if p.at_infinity:
            continue
        X, Y = px(float(p.x), float(p.y))
        out.append(f'<circle cx="{X}" cy="{Y}" r="2.5" fill={quoteattr(stroke(name, "point"))}/>')
        if opts.labels:
            text = doc.styles.get(name, {}).get("label", name)
            labels.append(f'<text x="{fmt(float(X) + 4)}" y="{fmt(float(Y) - 4)}" font-size="12">{escape(text)}</text>')
    out += labels
    out.append("</svg>")
    return "\n".join(out) + "\n"
