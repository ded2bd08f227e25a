"""Deterministic SVG emission for curves, traces, and dissection figures.

Convention: the drawing group carries transform="scale(1,-1)" so positive
mathematical y points up; the viewBox is fitted to the flipped geometry
with a 5% margin.  Arcs are emitted as elliptical-arc path commands with
the stored orientation (sweep flag 1 = counterclockwise in math axes).
Output contains no timestamps or random ids: identical input gives
byte-identical SVG.
"""

from __future__ import annotations

import math
from typing import Iterable, List, Optional, Sequence, Tuple

from paradoxlab.geometry import Arc, CurveIteration, Point, Segment

_PIECE_FILLS = {
    "red": "#e05252",
    "green": "#4caf6e",
    "blue": "#5277e0",
    "yellow": "#e0c152",
    "tri-1": "#e05252",
    "tri-2": "#4caf6e",
    "trap-1": "#5277e0",
    "trap-2": "#e0c152",
}


def _fmt(x: float) -> str:
    # repr gives the shortest round-trip decimal; trim the trailing ".0"
    # that makes path data needlessly long.
    text = repr(float(x))
    return text[:-2] if text.endswith(".0") else text


class _Bounds:
    def __init__(self):
        self.min_x = math.inf
        self.min_y = math.inf
        self.max_x = -math.inf
        self.max_y = -math.inf

    def add(self, x: float, y: float):
        self.min_x = min(self.min_x, x)
        self.min_y = min(self.min_y, y)
        self.max_x = max(self.max_x, x)
        self.max_y = max(self.max_y, y)

    def viewbox(self) -> Tuple[float, float, float, float]:
        width = self.max_x - self.min_x
        height = self.max_y - self.min_y
        pad = 0.05 * max(width, height, 1e-9)
        # The group is y-flipped, so the viewBox lives in flipped coords.
        return (
            self.min_x - pad,
            -(self.max_y + pad),
            width + 2 * pad,
            height + 2 * pad,
        )


def _add_primitive_bounds(bounds: _Bounds, prim) -> None:
    if isinstance(prim, Segment):
        bounds.add(prim.a.x, prim.a.y)
        bounds.add(prim.b.x, prim.b.y)
    else:
        span = prim.signed_span
        for i in range(33):
            theta = prim.start_angle + span * i / 32
            bounds.add(
                prim.center.x + prim.radius * math.cos(theta),
                prim.center.y + prim.radius * math.sin(theta),
            )


def _curve_path(curve: CurveIteration) -> str:
    parts: List[str] = []
    cursor: Optional[Point] = None
    for prim in curve.primitives:
        start = prim.start_point
        if cursor is None or abs(start.x - cursor.x) + abs(start.y - cursor.y) > 1e-9:
            parts.append(f"M {_fmt(start.x)} {_fmt(start.y)}")
        if isinstance(prim, Segment):
            end = prim.b
            parts.append(f"L {_fmt(end.x)} {_fmt(end.y)}")
        else:
            end = prim.end_point
            span = prim.signed_span
            large = 1 if abs(span) > math.pi else 0
            sweep = 1 if span > 0 else 0
            r = _fmt(prim.radius)
            parts.append(
                f"A {r} {r} 0 {large} {sweep} {_fmt(end.x)} {_fmt(end.y)}"
            )
        cursor = end
    return " ".join(parts)


def _document(bounds: _Bounds, body: List[str]) -> str:
    vb = bounds.viewbox()
    stroke = 0.004 * max(vb[2], vb[3])
    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(vb[0])} {_fmt(vb[1])} {_fmt(vb[2])} {_fmt(vb[3])}">\n'
        f'<g transform="scale(1,-1)" fill="none" stroke-width="{_fmt(stroke)}" '
        'stroke-linejoin="round" stroke-linecap="round">\n'
    )
    return head + "\n".join(body) + "\n</g>\n</svg>\n"


def curve_svg(
    curve: CurveIteration,
    base: Optional[Tuple[Point, Point]] = None,
    companions: Sequence[Tuple[CurveIteration, str]] = (),
) -> str:
    """Render one curve (plus optional dashed base segment and companion
    curves in their own colors)."""
    bounds = _Bounds()
    for prim in curve.primitives:
        _add_primitive_bounds(bounds, prim)
    for companion, _ in companions:
        for prim in companion.primitives:
            _add_primitive_bounds(bounds, prim)
    if base is not None:
        bounds.add(base[0].x, base[0].y)
        bounds.add(base[1].x, base[1].y)
    body = []
    if base is not None:
        a, b = base
        body.append(
            f'<line x1="{_fmt(a.x)}" y1="{_fmt(a.y)}" x2="{_fmt(b.x)}" '
            f'y2="{_fmt(b.y)}" stroke="#999999" stroke-dasharray="0.02 0.02"/>'
        )
    body.append(f'<path d="{_curve_path(curve)}" stroke="#1d3557"/>')
    for companion, color in companions:
        body.append(f'<path d="{_curve_path(companion)}" stroke="{color}"/>')
    return _document(bounds, body)


def piece_sets_svg(piece_sets: Iterable, gap: float = 2.0) -> str:
    """Render dissection piece sets stacked vertically (exact-rational
    vertices are evaluated to float only for drawing)."""
    bounds = _Bounds()
    body = []
    offset = 0.0
    for ps in piece_sets:
        frame_pts = [(float(p.x), float(p.y) + offset) for p in ps.frame]
        for x, y in frame_pts:
            bounds.add(x, y)
        frame_attr = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in frame_pts)
        body.append(
            f'<polygon points="{frame_attr}" stroke="#222222" fill="none"/>'
        )
        for label, polygon in ps.pieces:
            pts = [(float(p.x), float(p.y) + offset) for p in polygon]
            for x, y in pts:
                bounds.add(x, y)
            attr = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
            fill = _PIECE_FILLS.get(label, "#cccccc")
            body.append(
                f'<polygon points="{attr}" fill="{fill}" fill-opacity="0.7" '
                'stroke="#222222"/>'
            )
        top = max(float(p.y) for p in ps.frame)
        offset += top + gap
    return _document(bounds, body)
