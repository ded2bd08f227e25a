"""Staircase length models: five ways to "measure" a segment of length 2R.

Four models halve the base and redraw a similar bump over every half
(semicircles, right isosceles roofs, general right triangles with leg
ratio lambda, equilateral triangles).  Their length sums are constant in
n -- the curves converge pointwise to the base segment while the lengths
stay at pi*R, 2*sqrt(2)*R, f(lambda)*R, 4R -- which is the whole fallacy.
The fifth model (bisect) shrinks the roof angle along with the base and
its sum 2R/cos(omega/2^(n-1)) genuinely converges to 2R.

Every model yields two independent channels per iteration: an exact
closed-form sum (ExactValue) and buildable geometry for the float oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from paradoxlab.closedform import (
    PI,
    SQRT2,
    SQRT3,
    ExactValue,
    SecHalvingTag,
)
from paradoxlab.errors import PreconditionError
from paradoxlab.geometry import Arc, CurveIteration, Point, Primitive, Segment

GEOMETRY_MAX_N = 30  # primitive count 2**(n-1) must stay bounded
CLOSED_FORM_MAX_N = 10**6  # closed forms build no geometry


@dataclass(frozen=True)
class Semicircle:
    name = "semicircle"


@dataclass(frozen=True)
class IsoRight:
    name = "iso-right"


@dataclass(frozen=True)
class Lambda:
    """Right-triangle roofs with leg ratio lam, hypotenuse on the base."""

    lam: float
    name = "lambda"

    def __post_init__(self):
        if not (math.isfinite(self.lam) and self.lam > 0.0):
            raise PreconditionError("lambda > 0", f"got {self.lam!r}")


@dataclass(frozen=True)
class Equilateral:
    name = "equilateral"


@dataclass(frozen=True)
class Bisect:
    """Isosceles roofs whose base angle omega halves at every step."""

    omega: float
    name = "bisect"

    def __post_init__(self):
        if not 0.0 < self.omega < math.pi / 2:
            raise PreconditionError("0 < omega < pi/2", f"got {self.omega!r}")


StaircaseModel = Union[Semicircle, IsoRight, Lambda, Equilateral, Bisect]

MODEL_NAMES = ("semicircle", "iso-right", "lambda", "equilateral", "bisect")


def parse_model(name: str, lam: float = 1.0, omega: float = math.pi / 3) -> StaircaseModel:
    """Build a model from its wire name plus the relevant parameter."""
    if name == "semicircle":
        return Semicircle()
    if name == "iso-right":
        return IsoRight()
    if name == "lambda":
        return Lambda(lam)
    if name == "equilateral":
        return Equilateral()
    if name == "bisect":
        return Bisect(omega)
    raise PreconditionError(
        "model in {semicircle, iso-right, lambda, equilateral, bisect}",
        f"got {name!r}",
    )


@dataclass(frozen=True)
class InexactLength:
    """Float-backed length for sums with no representation in the tag algebra.

    Only the lambda model produces these: sqrt(lambda^2 + 1) is rational
    exactly when lambda^2 + 1 is the square of a rational, and the exact
    channel deliberately owns no general surds.
    """

    value: float


ClosedLength = Union[ExactValue, InexactLength]


def closed_length_float(closed: ClosedLength) -> float:
    if isinstance(closed, InexactLength):
        return closed.value
    return closed.eval_float()


@dataclass(frozen=True)
class StaircaseIteration:
    model: StaircaseModel
    R: float
    n: int
    curve: CurveIteration
    pieces: int  # 2**(n-1) repeated units
    sum_closed: ClosedLength
    sup_height_closed: Union[ExactValue, float]


@dataclass(frozen=True)
class LimitClassification:
    limit_value: float
    equals_base: bool
    constant_sequence: bool


def _check_R(R: float) -> None:
    if not (math.isfinite(R) and R > 0.0):
        raise PreconditionError("R > 0", f"got {R!r}")


def _check_n(n: int, cap: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise PreconditionError("n is an integer", f"got {n!r}")
    if n < 1:
        raise PreconditionError("n >= 1", f"got {n}")
    if n > cap:
        raise PreconditionError(f"n <= {cap}", f"got {n}")


def f_lambda(x: float) -> float:
    """f(x) = 2(1+x)/sqrt(x^2+1): the constant length sum per unit of R.

    Strictly increasing on (0, 1], strictly decreasing on [1, oo), with
    range (2, 2*sqrt(2)]; the maximum 2*sqrt(2) is attained at x = 1.
    """
    if not (math.isfinite(x) and x > 0.0):
        raise PreconditionError("x > 0", f"got {x!r}")
    return 2.0 * (1.0 + x) / math.sqrt(x * x + 1.0)


def sum_formula(model: StaircaseModel, R: float, n: int) -> ClosedLength:
    """Closed-form total length at iteration n, without building geometry."""
    _check_R(R)
    _check_n(n, CLOSED_FORM_MAX_N)
    r = Fraction(R)
    if isinstance(model, Semicircle):
        # 2^(n-1) semicircles of radius R/2^(n-1): always pi*R.
        return ExactValue.of(PI, r)
    if isinstance(model, IsoRight):
        return ExactValue.of(SQRT2, 2 * r)
    if isinstance(model, Equilateral):
        # Two sides of side length d over every base piece d: always 4R.
        return ExactValue.rational(4 * r)
    if isinstance(model, Bisect):
        return ExactValue.of(SecHalvingTag(model.omega, n - 1), 2 * r)
    # Lambda: 2(1+lam)R/sqrt(lam^2+1), exact iff lam^2+1 is a rational square.
    q = Fraction(model.lam)
    a, b = q.numerator, q.denominator
    s = a * a + b * b
    root = math.isqrt(s)
    if root * root == s:
        return ExactValue.rational(2 * (1 + q) * Fraction(b, root) * r)
    return InexactLength(f_lambda(model.lam) * R)


def _roof(x0: float, x1: float, apex: Point) -> Tuple[Primitive, Primitive]:
    return Segment(Point(x0, 0.0), apex), Segment(apex, Point(x1, 0.0))


def _unit_primitives(
    model: StaircaseModel, x0: float, x1: float, n: int
) -> Tuple[Primitive, ...]:
    d = x1 - x0
    if isinstance(model, Semicircle):
        radius = 0.5 * d
        center = Point(x0 + radius, 0.0)
        # Upper semicircle traversed left to right: angle pi down to 0.
        return (Arc(center, radius, math.pi, 0.0, "cw"),)
    if isinstance(model, IsoRight):
        return _roof(x0, x1, Point(x0 + 0.5 * d, 0.5 * d))
    if isinstance(model, Equilateral):
        return _roof(x0, x1, Point(x0 + 0.5 * d, 0.5 * math.sqrt(3.0) * d))
    if isinstance(model, Bisect):
        alpha = math.ldexp(model.omega, 1 - n)
        return _roof(x0, x1, Point(x0 + 0.5 * d, 0.5 * d * math.tan(alpha)))
    # Lambda: right angle at the apex, hypotenuse on the base, the leg whose
    # adjacent base angle has tangent lam first.  The altitude foot splits
    # the chord into d/(1+lam^2) then d*lam^2/(1+lam^2).
    lam = model.lam
    denom = 1.0 + lam * lam
    return _roof(x0, x1, Point(x0 + d / denom, d * lam / denom))


def _sup_height_closed(
    model: StaircaseModel, R: float, n: int
) -> Union[ExactValue, float]:
    """Exact (or float, for bisect) height of one unit above the base."""
    pieces = 2 ** (n - 1)
    r = Fraction(R)
    if isinstance(model, (Semicircle, IsoRight)):
        return ExactValue.rational(r / pieces)
    if isinstance(model, Equilateral):
        return ExactValue.of(SQRT3, r / pieces)
    if isinstance(model, Lambda):
        q = Fraction(model.lam)
        return ExactValue.rational(2 * r / pieces * q / (1 + q * q))
    alpha = math.ldexp(model.omega, 1 - n)
    return math.ldexp(R, 1 - n) * math.tan(alpha)


def build_iteration(model: StaircaseModel, R: float, n: int) -> StaircaseIteration:
    """Construct iteration n: 2^(n-1) congruent units over equal sub-bases."""
    _check_R(R)
    _check_n(n, GEOMETRY_MAX_N)
    pieces = 2 ** (n - 1)
    base = 2.0 * R
    cuts = [base * i / pieces for i in range(pieces + 1)]
    primitives: List[Primitive] = []
    for i in range(pieces):
        primitives.extend(_unit_primitives(model, cuts[i], cuts[i + 1], n))
    curve = CurveIteration.from_primitives(n, primitives)
    return StaircaseIteration(
        model=model,
        R=R,
        n=n,
        curve=curve,
        pieces=pieces,
        sum_closed=sum_formula(model, R, n),
        sup_height_closed=_sup_height_closed(model, R, n),
    )


def limit_classify(model: StaircaseModel, R: float) -> LimitClassification:
    """Where the length sequence goes, and whether that is the base length."""
    _check_R(R)
    if isinstance(model, Semicircle):
        return LimitClassification(math.pi * R, False, True)
    if isinstance(model, IsoRight):
        return LimitClassification(2.0 * math.sqrt(2.0) * R, False, True)
    if isinstance(model, Lambda):
        return LimitClassification(f_lambda(model.lam) * R, False, True)
    if isinstance(model, Equilateral):
        return LimitClassification(4.0 * R, False, True)
    return LimitClassification(2.0 * R, True, False)


def gap_per_step(model: StaircaseModel, R: float, n: int) -> float:
    """One unit's curve length minus its chord 2R/2^(n-1).

    Strictly positive for every model (triangle inequality / arc vs chord);
    for the faulty models it is a model constant times R/2^(n-1), while for
    bisect it vanishes faster than the chord.
    """
    _check_R(R)
    _check_n(n, CLOSED_FORM_MAX_N)
    chord = math.ldexp(2.0 * R, 1 - n)
    unit_length = math.ldexp(closed_length_float(sum_formula(model, R, n)), 1 - n)
    return unit_length - chord
