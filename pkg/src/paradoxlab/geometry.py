"""Geometric primitives, float measurement oracles, and exact polygon tools.

The float oracles (measure_length, sup_distance_to_segment,
measure_polygon_area_float) are the independent channel every closed form
is checked against; they only ever sum primitive lengths, sample points,
and run the shoelace formula -- no closed forms from the model modules
leak in here.

Exact-rational predicates (shoelace_area_exact, collinear, the
interior/intersection tests) decide the dissection fallacies, where floats
are banned from the verdict.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence, Tuple, Union

from paradoxlab import _kernels
from paradoxlab.errors import PreconditionError

# Chaining tolerance, absolute: constructions are at unit scale (R, a near 1).
CHAIN_TOL = 1e-9

DEFAULT_SAMPLES_PER_PRIMITIVE = 256


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise PreconditionError("point coordinates finite", f"got {self}")


@dataclass(frozen=True)
class RationalPoint:
    x: Fraction
    y: Fraction

    @staticmethod
    def of(x, y) -> "RationalPoint":
        return RationalPoint(Fraction(x), Fraction(y))


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self):
        if self.a == self.b:
            raise PreconditionError("segment endpoints distinct", f"both {self.a}")

    @property
    def start_point(self) -> Point:
        return self.a

    @property
    def end_point(self) -> Point:
        return self.b

    @property
    def length(self) -> float:
        return math.sqrt((self.b.x - self.a.x) ** 2 + (self.b.y - self.a.y) ** 2)

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a)


@dataclass(frozen=True)
class Arc:
    """Circular arc stored as center/radius/angles.

    Travel starts at start_angle and proceeds in the stated orientation
    until reaching end_angle, so the swept span is (end - start) normalized
    into (0, 2*pi] for "ccw" and its negative counterpart for "cw".  Storing
    angles keeps the length exact (radius times span) and makes SVG emission
    direct.
    """

    center: Point
    radius: float
    start_angle: float
    end_angle: float
    orientation: str  # "ccw" | "cw"

    def __post_init__(self):
        if not self.radius > 0.0:
            raise PreconditionError("arc radius > 0", f"got {self.radius!r}")
        if self.orientation not in ("ccw", "cw"):
            raise PreconditionError(
                "arc orientation in {ccw, cw}", f"got {self.orientation!r}"
            )
        raw = self.end_angle - self.start_angle
        if not (math.isfinite(raw) and abs(raw) <= math.tau):
            raise PreconditionError(
                "|end_angle - start_angle| <= 2*pi", f"got {raw!r}"
            )

    @property
    def signed_span(self) -> float:
        """Swept angle; positive when traveling counterclockwise."""
        raw = self.end_angle - self.start_angle
        if self.orientation == "ccw":
            return raw if raw > 0.0 else raw + math.tau
        return raw if raw < 0.0 else raw - math.tau

    @property
    def start_point(self) -> Point:
        return Point(
            self.center.x + self.radius * math.cos(self.start_angle),
            self.center.y + self.radius * math.sin(self.start_angle),
        )

    @property
    def end_point(self) -> Point:
        theta = self.start_angle + self.signed_span
        return Point(
            self.center.x + self.radius * math.cos(theta),
            self.center.y + self.radius * math.sin(theta),
        )

    @property
    def length(self) -> float:
        return self.radius * abs(self.signed_span)

    def reversed(self) -> "Arc":
        flipped = "cw" if self.orientation == "ccw" else "ccw"
        return Arc(self.center, self.radius, self.end_angle, self.start_angle, flipped)


Primitive = Union[Segment, Arc]


@dataclass(frozen=True)
class CurveIteration:
    """One iteration of a construction: an ordered chain of primitives.

    The constructor checks the cheap endpoint invariants (start/end agree
    with the first/last primitive); full chain validation happens in the
    measurement oracles, which is also where a deliberately broken chain is
    rejected.
    """

    n: int
    primitives: Tuple[Primitive, ...]
    start: Point
    end: Point

    def __post_init__(self):
        if self.n < 0:
            raise PreconditionError("iteration index >= 0", f"got {self.n}")
        if not self.primitives:
            raise PreconditionError("curve has at least one primitive")
        first = self.primitives[0].start_point
        last = self.primitives[-1].end_point
        if _dist(self.start, first) > CHAIN_TOL or _dist(self.end, last) > CHAIN_TOL:
            raise PreconditionError(
                "curve start/end match first/last primitive",
                f"start {self.start} vs {first}, end {self.end} vs {last}",
            )

    @staticmethod
    def from_primitives(n: int, primitives: Iterable[Primitive]) -> "CurveIteration":
        prims = tuple(primitives)
        if not prims:
            raise PreconditionError("curve has at least one primitive")
        return CurveIteration(n, prims, prims[0].start_point, prims[-1].end_point)

    @cached_property
    def table(self) -> array:
        """Flat kernel table, 7 doubles per primitive (built once, cached)."""
        tab = array("d", bytes(8 * _kernels.STRIDE * len(self.primitives)))
        k = 0
        for prim in self.primitives:
            if isinstance(prim, Segment):
                tab[k] = _kernels.KIND_SEGMENT
                tab[k + 1] = prim.a.x
                tab[k + 2] = prim.a.y
                tab[k + 3] = prim.b.x
                tab[k + 4] = prim.b.y
            else:
                tab[k] = _kernels.KIND_ARC
                tab[k + 1] = prim.center.x
                tab[k + 2] = prim.center.y
                tab[k + 3] = prim.radius
                tab[k + 4] = prim.start_angle
                tab[k + 5] = prim.signed_span
            k += _kernels.STRIDE
        return tab

    def is_closed(self) -> bool:
        return _dist(self.start, self.end) <= CHAIN_TOL


def _dist(p: Point, q: Point) -> float:
    return math.sqrt((p.x - q.x) ** 2 + (p.y - q.y) ** 2)


def _require_chained(curve: CurveIteration) -> None:
    gap = _kernels.max_chain_gap(curve.table)
    if gap > CHAIN_TOL:
        raise PreconditionError(
            "curve primitives chained within 1e-9", f"worst gap {gap!r}"
        )


def measure_length(curve: CurveIteration) -> float:
    """Float oracle: sum of segment lengths plus arc radius*span lengths."""
    _require_chained(curve)
    return _kernels.curve_length(curve.table)


def sup_distance_to_segment(
    curve: CurveIteration,
    a: Point,
    b: Point,
    samples_per_primitive: int = DEFAULT_SAMPLES_PER_PRIMITIVE,
) -> float:
    """Max distance from sampled curve points to segment ab.

    Sampling is uniform in each primitive's parameter, endpoints included;
    finer sampling can only find more extreme witnesses.
    """
    if samples_per_primitive < 2:
        raise PreconditionError(
            "samples_per_primitive >= 2", f"got {samples_per_primitive}"
        )
    if a == b:
        raise PreconditionError("reference segment non-degenerate", f"both {a}")
    _require_chained(curve)
    return _kernels.sup_distance(curve.table, a.x, a.y, b.x, b.y, samples_per_primitive)


def reverse_curve(curve: CurveIteration) -> CurveIteration:
    prims = tuple(p.reversed() for p in reversed(curve.primitives))
    return CurveIteration(curve.n, prims, curve.end, curve.start)


def measure_polygon_area_float(curve: CurveIteration) -> float:
    """Float shoelace area of a closed, segments-only curve."""
    if not curve.is_closed():
        raise PreconditionError("curve closed (start = end within 1e-9)")
    if any(isinstance(p, Arc) for p in curve.primitives):
        raise PreconditionError("polygon curve contains segments only")
    _require_chained(curve)
    m = len(curve.primitives)
    xs = array("d", bytes(8 * m))
    ys = array("d", bytes(8 * m))
    for i, seg in enumerate(curve.primitives):
        xs[i] = seg.a.x
        ys[i] = seg.a.y
    return abs(_kernels.shoelace(xs, ys))


# ---------------------------------------------------------------------------
# Exact-rational polygon tools (the dissection verdict channel).


def cross(o: RationalPoint, a: RationalPoint, b: RationalPoint) -> Fraction:
    """Exact cross product (a - o) x (b - o)."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def collinear(p: RationalPoint, q: RationalPoint, r: RationalPoint) -> bool:
    return cross(p, q, r) == 0


def point_on_segment(p: RationalPoint, a: RationalPoint, b: RationalPoint) -> bool:
    if cross(a, b, p) != 0:
        return False
    return (
        min(a.x, b.x) <= p.x <= max(a.x, b.x)
        and min(a.y, b.y) <= p.y <= max(a.y, b.y)
    )


def segments_properly_cross(
    a: RationalPoint, b: RationalPoint, c: RationalPoint, d: RationalPoint
) -> bool:
    """True iff open segments ab and cd cross in exactly one interior point."""
    d1 = cross(a, b, c)
    d2 = cross(a, b, d)
    d3 = cross(c, d, a)
    d4 = cross(c, d, b)
    return ((d1 > 0) != (d2 > 0) and d1 != 0 and d2 != 0) and (
        (d3 > 0) != (d4 > 0) and d3 != 0 and d4 != 0
    )


def segments_touch(
    a: RationalPoint, b: RationalPoint, c: RationalPoint, d: RationalPoint
) -> bool:
    """True iff closed segments ab and cd share any point."""
    if segments_properly_cross(a, b, c, d):
        return True
    return (
        point_on_segment(c, a, b)
        or point_on_segment(d, a, b)
        or point_on_segment(a, c, d)
        or point_on_segment(b, c, d)
    )


def polygon_is_simple(polygon: Sequence[RationalPoint]) -> bool:
    """Exact O(V^2) simplicity check, adequate for the small dissection pieces."""
    m = len(polygon)
    if m < 3:
        return False
    if len({(p.x, p.y) for p in polygon}) != m:
        return False
    for i in range(m):
        a, b = polygon[i], polygon[(i + 1) % m]
        for j in range(i + 1, m):
            c, d = polygon[j], polygon[(j + 1) % m]
            adjacent = j == i + 1 or (i == 0 and j == m - 1)
            if adjacent:
                # Shared-vertex edges must not fold back along each other.
                if j == i + 1:
                    shared, u, w = b, a, d
                else:  # wraparound: edge (m-1, 0) ends at polygon[0] = a
                    shared, u, w = a, b, c
                if collinear(u, shared, w) and (
                    (u.x - shared.x) * (w.x - shared.x)
                    + (u.y - shared.y) * (w.y - shared.y)
                    > 0
                ):
                    return False
            elif segments_touch(a, b, c, d):
                return False
    return True


def point_strictly_inside(
    p: RationalPoint, polygon: Sequence[RationalPoint]
) -> bool:
    """Exact ray-cast parity test; boundary points count as outside."""
    m = len(polygon)
    for i in range(m):
        if point_on_segment(p, polygon[i], polygon[(i + 1) % m]):
            return False
    inside = False
    for i in range(m):
        a, b = polygon[i], polygon[(i + 1) % m]
        if (a.y > p.y) != (b.y > p.y):
            x_hit = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if p.x < x_hit:
                inside = not inside
    return inside


class PolygonArea(NamedTuple):
    area: Fraction  # absolute value
    ccw: bool  # True when the vertex order was counterclockwise


def shoelace_area_exact(polygon: Sequence[RationalPoint]) -> PolygonArea:
    """Exact shoelace area of a simple polygon, with its orientation."""
    if len(polygon) < 3:
        raise PreconditionError("polygon has >= 3 vertices", f"got {len(polygon)}")
    if not polygon_is_simple(polygon):
        raise PreconditionError("polygon simple (no self-intersection)")
    twice = Fraction(0)
    m = len(polygon)
    for i in range(m):
        a, b = polygon[i], polygon[(i + 1) % m]
        twice += a.x * b.y - b.x * a.y
    signed = twice / 2
    return PolygonArea(abs(signed), signed > 0)


def polygon_area_signed(polygon: Sequence[RationalPoint]) -> Fraction:
    """Signed exact shoelace area without the simplicity precondition."""
    twice = Fraction(0)
    m = len(polygon)
    for i in range(m):
        a, b = polygon[i], polygon[(i + 1) % m]
        twice += a.x * b.y - b.x * a.y
    return twice / 2
