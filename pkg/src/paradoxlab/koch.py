"""Koch snowflake: unbounded perimeter, bounded area.

Step n has 3*4^n sides of length a/3^n, so the perimeter 3a*(4/3)^n
diverges while the area partial sums A_n = A_0 (1 + sum 3*4^(k-1)/9^k)
form a geometric series converging to 2*sqrt(3)*a^2/5.  The boundary
polygon is generated exactly once per step by the koch_refine kernel and
serves as the float oracle for both sequences.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass
from fractions import Fraction

from paradoxlab import _kernels
from paradoxlab.closedform import SQRT3, ExactValue
from paradoxlab.errors import PreconditionError
from paradoxlab.geometry import CurveIteration, Point, Segment

GEOMETRY_MAX_N = 8  # 3 * 4^8 = 196,608 segments


def _check_a(a: float) -> None:
    if not (math.isfinite(a) and a > 0.0):
        raise PreconditionError("a > 0", f"got {a!r}")


def _check_n(n: int, cap: "int | None" = None) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise PreconditionError("n is an integer", f"got {n!r}")
    if n < 0:
        raise PreconditionError("n >= 0", f"got {n}")
    if cap is not None and n > cap:
        raise PreconditionError(f"n <= {cap}", f"got {n}")


@dataclass(frozen=True)
class KochState:
    a: float
    n: int
    boundary: CurveIteration  # closed, segments only, 3*4^n sides


def boundary_vertices(a: float, n: int):
    """Vertex arrays of the step-n boundary (closed, no repeated endpoint).

    The initial triangle sits with its base on the x-axis, apex up, left
    vertex at the origin; counterclockwise order makes every bump outward.
    """
    _check_a(a)
    _check_n(n, GEOMETRY_MAX_N)
    xs = array("d", [0.0, a, 0.5 * a])
    ys = array("d", [0.0, 0.0, 0.5 * math.sqrt(3.0) * a])
    for _ in range(n):
        xs, ys = _kernels.koch_refine(xs, ys)
    return xs, ys


def build_koch(a: float, n: int) -> KochState:
    """Generate the step-n snowflake boundary as a closed segment chain."""
    xs, ys = boundary_vertices(a, n)
    m = len(xs)
    points = [Point(xs[i], ys[i]) for i in range(m)]
    segments = [Segment(points[i], points[(i + 1) % m]) for i in range(m)]
    boundary = CurveIteration(n, tuple(segments), points[0], points[0])
    return KochState(a=a, n=n, boundary=boundary)


def koch_perimeter(a: float, n: int) -> ExactValue:
    """Exact perimeter 3*4^n * a/3^n; strictly increasing, divergent in n."""
    _check_a(a)
    _check_n(n)
    return ExactValue.rational(3 * Fraction(4, 3) ** n * Fraction(a))


def perimeter_diverges() -> float:
    """The perimeter limit: ratio 4/3 > 1 per step, hence +infinity."""
    return math.inf


def _area_series_factor(n: int) -> Fraction:
    # 1 + sum_{k=1..n} 3*4^(k-1)/9^k, evaluated exactly.
    total = Fraction(1)
    for k in range(1, n + 1):
        total += Fraction(3 * 4 ** (k - 1), 9**k)
    return total


def koch_area(a: float, n: int) -> ExactValue:
    """Exact enclosed area at step n: A_0 * (1 + sum 3*4^(k-1)/9^k)."""
    _check_a(a)
    _check_n(n)
    coeff = Fraction(a) ** 2 * Fraction(1, 4) * _area_series_factor(n)
    return ExactValue.of(SQRT3, coeff)


def koch_area_limit(a: float) -> ExactValue:
    """The limit area 2*sqrt(3)*a^2/5 (geometric series with ratio 4/9)."""
    _check_a(a)
    return ExactValue.of(SQRT3, Fraction(2, 5) * Fraction(a) ** 2)
