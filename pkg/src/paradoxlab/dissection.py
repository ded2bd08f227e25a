"""Dissection fallacies, refuted in exact rational arithmetic.

The missing-square puzzle rearranges four pieces of total area 32 inside a
"13 x 5 right triangle" of area 65/2; the 64=65 puzzle rearranges four
pieces of an 8 x 8 square into a 13 x 5 rectangle.  Both tricks hide the
same thin parallelogram between two near-diagonal paths with slopes 3/8
and 2/5.  No float ever enters these verdicts.

The classic puzzle drawings carry no canonical coordinates; the piece
decompositions here are the standard ones, pinned so that every
well-known number comes out exactly (slopes 3/8 and 2/5, colored area
32, frames 13x5 and 8x8, unit sliver).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from paradoxlab.errors import PreconditionError
from paradoxlab.geometry import (
    RationalPoint,
    collinear,
    point_strictly_inside,
    polygon_is_simple,
    segments_properly_cross,
    shoelace_area_exact,
)

Polygon = Tuple[RationalPoint, ...]


def _poly(*coords) -> Polygon:
    return tuple(RationalPoint.of(x, y) for x, y in coords)


@dataclass(frozen=True)
class PieceSet:
    """Labeled exact-polygon pieces plus the frame they claim to tile."""

    name: str
    pieces: Tuple[Tuple[str, Polygon], ...]
    frame: Polygon
    claimed_area: Fraction


# --- The missing square (13 x 5 "triangle", pieces of total area 32). -----
#
# Two right triangles (8x3 and 5x2) plus two L-shaped pieces of areas 8
# and 7.  Arrangement A packs them under the bent path (0,0)-(8,3)-(13,5);
# arrangement B (pure translations of the same pieces) bulges above
# (0,0)-(5,2)-(13,5) and leaves the famous unit hole at [7,8] x [0,1].

_MISSING_FRAME = _poly((0, 0), (13, 0), (13, 5))

_MISSING_A = (
    ("red", _poly((0, 0), (8, 0), (8, 3))),
    ("green", _poly((8, 3), (13, 3), (13, 5))),
    ("blue", _poly((8, 0), (13, 0), (13, 2), (10, 2), (10, 1), (8, 1))),
    ("yellow", _poly((8, 1), (10, 1), (10, 2), (13, 2), (13, 3), (8, 3))),
)

_MISSING_B = (
    ("green", _poly((0, 0), (5, 0), (5, 2))),
    ("red", _poly((5, 2), (13, 2), (13, 5))),
    ("yellow", _poly((5, 0), (7, 0), (7, 1), (10, 1), (10, 2), (5, 2))),
    ("blue", _poly((8, 0), (13, 0), (13, 2), (10, 2), (10, 1), (8, 1))),
)

# The union of both arrangements' gaps: the thin parallelogram between the
# two hypotenuse paths.
_SLIVER = _poly((0, 0), (8, 3), (13, 5), (5, 2))


def missing_square_piece_set(arrangement: str = "a") -> PieceSet:
    """The canonical piece set; arrangement 'a' is gapless, 'b' has the hole."""
    if arrangement not in ("a", "b"):
        raise PreconditionError("arrangement in {a, b}", f"got {arrangement!r}")
    pieces = _MISSING_A if arrangement == "a" else _MISSING_B
    return PieceSet(
        name=f"missing-square-{arrangement}",
        pieces=pieces,
        frame=_MISSING_FRAME,
        claimed_area=Fraction(65, 2),
    )


# --- 64 = 65 (8 x 8 square vs 13 x 5 rectangle). ---------------------------
#
# Two right triangles with legs 8 and 3, two right trapezoids with parallel
# sides 5 and 3 and height 5.  They tile the square exactly; in the
# rectangle the same pieces leave the unit parallelogram uncovered.

_SQUARE_64 = (
    ("tri-1", _poly((0, 5), (8, 5), (8, 8))),
    ("tri-2", _poly((0, 5), (8, 8), (0, 8))),
    ("trap-1", _poly((0, 0), (5, 0), (3, 5), (0, 5))),
    ("trap-2", _poly((5, 0), (8, 0), (8, 5), (3, 5))),
)

_RECT_65 = (
    ("tri-1", _poly((0, 0), (8, 0), (8, 3))),
    ("trap-2", _poly((8, 0), (13, 0), (13, 5), (8, 3))),
    ("tri-2", _poly((13, 5), (5, 5), (5, 2))),
    ("trap-1", _poly((5, 5), (0, 5), (0, 0), (5, 2))),
)


def square_piece_set() -> PieceSet:
    return PieceSet(
        name="square-8x8",
        pieces=_SQUARE_64,
        frame=_poly((0, 0), (8, 0), (8, 8), (0, 8)),
        claimed_area=Fraction(64),
    )


def rectangle_piece_set() -> PieceSet:
    return PieceSet(
        name="rectangle-13x5",
        pieces=_RECT_65,
        frame=_poly((0, 0), (13, 0), (13, 5), (0, 5)),
        claimed_area=Fraction(65),
    )


PIECE_SETS = {
    "missing-square-a": lambda: missing_square_piece_set("a"),
    "missing-square-b": lambda: missing_square_piece_set("b"),
    "square-8x8": square_piece_set,
    "rectangle-13x5": rectangle_piece_set,
}


def _interiors_disjoint(p: Polygon, q: Polygon) -> bool:
    """Exact overlap test for small polygons: proper edge crossings plus
    strict containment probes (vertices, edge midpoints, centroid)."""
    np_, nq = len(p), len(q)
    for i in range(np_):
        a, b = p[i], p[(i + 1) % np_]
        for j in range(nq):
            if segments_properly_cross(a, b, q[j], q[(j + 1) % nq]):
                return False

    def probes(poly):
        m = len(poly)
        pts = list(poly)
        for i in range(m):
            a, b = poly[i], poly[(i + 1) % m]
            pts.append(RationalPoint((a.x + b.x) / 2, (a.y + b.y) / 2))
        cx = sum(v.x for v in poly) / m
        cy = sum(v.y for v in poly) / m
        pts.append(RationalPoint(cx, cy))
        return pts

    if any(point_strictly_inside(pt, q) for pt in probes(p)):
        return False
    if any(point_strictly_inside(pt, p) for pt in probes(q)):
        return False
    return True


def _validate(ps: PieceSet) -> None:
    for label, polygon in ps.pieces:
        if not polygon_is_simple(polygon):
            raise PreconditionError(
                "each piece simple", f"piece {label!r} of {ps.name!r}"
            )
    if not polygon_is_simple(ps.frame):
        raise PreconditionError("frame simple", ps.name)
    labeled = list(ps.pieces)
    for i in range(len(labeled)):
        for j in range(i + 1, len(labeled)):
            if not _interiors_disjoint(labeled[i][1], labeled[j][1]):
                raise PreconditionError(
                    "pieces pairwise interior-disjoint",
                    f"pieces {labeled[i][0]!r} and {labeled[j][0]!r} of {ps.name!r}",
                )


@dataclass(frozen=True)
class PieceAccounting:
    piece_sum: Fraction
    frame_area: Fraction
    gap: Fraction  # frame_area - piece_sum


def verify_piece_accounting(ps: PieceSet) -> PieceAccounting:
    """Exact area bookkeeping: what the pieces add up to vs the claim."""
    _validate(ps)
    piece_sum = sum(
        (shoelace_area_exact(polygon).area for _, polygon in ps.pieces),
        Fraction(0),
    )
    frame_area = shoelace_area_exact(ps.frame).area
    if frame_area != ps.claimed_area:
        raise PreconditionError(
            "frame area equals the claimed area",
            f"{ps.name!r}: {frame_area} != {ps.claimed_area}",
        )
    return PieceAccounting(
        piece_sum=piece_sum, frame_area=frame_area, gap=frame_area - piece_sum
    )


@dataclass(frozen=True)
class MissingSquareReport:
    colored_area: Fraction
    claimed_area: Fraction
    sliver_area: Fraction
    collinear: bool
    red_slope: Fraction
    green_slope: Fraction


def missing_square_case() -> MissingSquareReport:
    """Every number behind the missing-square refutation, computed exactly."""
    acc_a = verify_piece_accounting(missing_square_piece_set("a"))
    acc_b = verify_piece_accounting(missing_square_piece_set("b"))
    assert acc_a.piece_sum == acc_b.piece_sum  # same pieces, translated
    origin, bend_low, tip, bend_high = (
        RationalPoint.of(0, 0),
        RationalPoint.of(8, 3),
        RationalPoint.of(13, 5),
        RationalPoint.of(5, 2),
    )
    sliver = shoelace_area_exact(_SLIVER).area
    return MissingSquareReport(
        colored_area=acc_a.piece_sum,
        claimed_area=acc_a.frame_area,
        sliver_area=sliver,
        collinear=collinear(origin, bend_low, tip),
        red_slope=Fraction(bend_low.y, bend_low.x),
        green_slope=Fraction(tip.y - bend_low.y, tip.x - bend_low.x),
    )


def fibonacci(k: int) -> int:
    """F(1) = F(2) = 1 indexing, so F(6) = 8 (the 64=65 square side)."""
    if k < 1:
        raise PreconditionError("k >= 1", f"got {k}")
    a, b = 0, 1
    for _ in range(k - 1):
        a, b = b, a + b
    return b


@dataclass(frozen=True)
class FibonacciDissection:
    square_area: Fraction
    rectangle_area: Fraction
    discrepancy: Fraction  # always 1 by Cassini, but computed, not assumed


def fibonacci_dissection(k: int) -> FibonacciDissection:
    """Generalize 64=65: square F(k)^2 vs rectangle F(k-1) x F(k+1)."""
    if not isinstance(k, int) or isinstance(k, bool):
        raise PreconditionError("k is an integer", f"got {k!r}")
    if not 3 <= k <= 40:
        raise PreconditionError("3 <= k <= 40", f"got {k}")
    square = Fraction(fibonacci(k)) ** 2
    rectangle = Fraction(fibonacci(k - 1)) * fibonacci(k + 1)
    return FibonacciDissection(
        square_area=square,
        rectangle_area=rectangle,
        discrepancy=abs(rectangle - square),
    )
