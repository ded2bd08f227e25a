"""Exact value algebra: rational coefficients over named irrational constants.

An ExactValue is a finite formal sum  sum_i  q_i * c_i  where every q_i is a
Fraction and every c_i is a tagged constant (1, pi, sqrt(k), 1/cos(omega/2^l),
ln x).  The algebra is a free module over the tags: no surd simplification,
no trigonometric identities.  This is deliberate -- it keeps exact equality
structural and trivially correct, which is all the paradox sequences need.

Floats never enter coefficients; evaluation to binary64 happens only in
eval_float.
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple, Union

from paradoxlab.errors import PreconditionError

# The exact-rational scalar type.  fractions.Fraction already guarantees the
# invariants (positive denominator, gcd(num, den) == 1 after every operation).
Rational = Fraction


@dataclass(frozen=True)
class OneTag:
    """The rational unit constant, value 1."""

    def constant(self) -> float:
        return 1.0

    def encode(self) -> str:
        return "one"


@dataclass(frozen=True)
class PiTag:
    """The circle constant pi."""

    def constant(self) -> float:
        return math.pi

    def encode(self) -> str:
        return "pi"


@dataclass(frozen=True)
class SqrtTag:
    """sqrt(k) for a square-free integer radicand k >= 2.

    Generators must emit square-free radicands; distinct radicands never
    combine, so admitting sqrt(8) alongside sqrt(2) would silently break
    exact equality.
    """

    k: int

    def __post_init__(self):
        if self.k < 2:
            raise PreconditionError("sqrt radicand >= 2", f"got {self.k}")
        root = math.isqrt(self.k)
        if root * root == self.k:
            raise PreconditionError(
                "sqrt radicand not a perfect square", f"got {self.k} = {root}**2"
            )

    def constant(self) -> float:
        return math.sqrt(self.k)

    def encode(self) -> str:
        return f"sqrt:{self.k}"


@dataclass(frozen=True)
class SecHalvingTag:
    """1 / cos(omega / 2**level) for a base angle omega in (0, pi/2).

    omega is stored as a float, not symbolically: no paradox run ever mixes
    two base angles, so equality is bit-identical omega plus equal level.
    """

    omega: float
    level: int

    def __post_init__(self):
        if not 0.0 < self.omega < math.pi / 2:
            raise PreconditionError("0 < omega < pi/2", f"got {self.omega!r}")
        if self.level < 0:
            raise PreconditionError("level >= 0", f"got {self.level}")

    def constant(self) -> float:
        # ldexp scales by an exact power of two and underflows gracefully
        # for the huge levels the closed-form channel allows.
        return 1.0 / math.cos(math.ldexp(self.omega, -self.level))

    def encode(self) -> str:
        return f"sec:{self.omega!r}:{self.level}"


@dataclass(frozen=True)
class LogTag:
    """ln(x) for x > 0."""

    x: float

    def __post_init__(self):
        if not self.x > 0.0:
            raise PreconditionError("log argument > 0", f"got {self.x!r}")

    def constant(self) -> float:
        return math.log(self.x)

    def encode(self) -> str:
        return f"log:{self.x!r}"


Tag = Union[OneTag, PiTag, SqrtTag, SecHalvingTag, LogTag]

ONE = OneTag()
PI = PiTag()
SQRT2 = SqrtTag(2)
SQRT3 = SqrtTag(3)


def parse_tag(text: str) -> Tag:
    """Inverse of Tag.encode (used by the JSON wire format)."""
    if text == "one":
        return ONE
    if text == "pi":
        return PI
    if text.startswith("sqrt:"):
        return SqrtTag(int(text[5:]))
    if text.startswith("sec:"):
        _, omega, level = text.split(":")
        return SecHalvingTag(float(omega), int(level))
    if text.startswith("log:"):
        return LogTag(float(text[4:]))
    raise PreconditionError("known tag kind", f"unknown tag {text!r}")


TermItems = Union[Mapping[Tag, Rational], Iterable[Tuple[Tag, Rational]]]


class ExactValue:
    """An immutable finite map tag -> Fraction; the empty map is exactly 0.

    Construction normalizes: coefficients merge per tag, zero coefficients
    drop out, terms are stored sorted by tag encoding so iteration (and
    therefore float evaluation) is deterministic.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: TermItems = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: dict = {}
        for tag, coeff in items:
            if isinstance(coeff, float):
                raise TypeError(
                    "float coefficients are not exact; wrap deliberately with Fraction()"
                )
            q = merged.get(tag, Fraction(0)) + Fraction(coeff)
            if q == 0:
                merged.pop(tag, None)
            else:
                merged[tag] = q
        object.__setattr__(
            self,
            "_terms",
            tuple(sorted(merged.items(), key=lambda item: item[0].encode())),
        )

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("ExactValue is immutable")

    @staticmethod
    def zero() -> "ExactValue":
        return ExactValue()

    @staticmethod
    def rational(q) -> "ExactValue":
        """The purely rational value q (a multiple of the One tag)."""
        return ExactValue([(ONE, Fraction(q))])

    @staticmethod
    def of(tag: Tag, coeff) -> "ExactValue":
        return ExactValue([(tag, Fraction(coeff))])

    @property
    def terms(self) -> dict:
        """The term map as a fresh dict (mutating it does not affect self)."""
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, tag: Tag) -> Fraction:
        for t, q in self._terms:
            if t == tag:
                return q
        return Fraction(0)

    def add(self, other: "ExactValue") -> "ExactValue":
        return ExactValue(list(self._terms) + list(other._terms))

    __add__ = add

    def scale(self, q) -> "ExactValue":
        if isinstance(q, float):
            raise TypeError("scale factor must be exact (int, Fraction, or str)")
        factor = Fraction(q)
        if factor == 0:
            return ExactValue()
        return ExactValue([(tag, coeff * factor) for tag, coeff in self._terms])

    def __neg__(self) -> "ExactValue":
        return self.scale(-1)

    def __sub__(self, other: "ExactValue") -> "ExactValue":
        return self.add(other.scale(-1))

    def eval_float(self) -> float:
        """Binary64 sum of coefficient * constant, in sorted tag order."""
        total = 0.0
        for tag, coeff in self._terms:
            total += float(coeff) * tag.constant()
        return total

    def exact_eq(self, other: "ExactValue") -> bool:
        return self._terms == other._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactValue):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        inner = ", ".join(f"{tag.encode()}: {coeff}" for tag, coeff in self._terms)
        return f"ExactValue({{{inner}}})"

    def to_json_obj(self) -> list:
        """Wire form: [{"tag": ..., "coeff": "num/den"}], decimal-free."""
        return [
            {"tag": tag.encode(), "coeff": str(coeff)} for tag, coeff in self._terms
        ]

    @staticmethod
    def from_json_obj(obj) -> "ExactValue":
        return ExactValue(
            [(parse_tag(entry["tag"]), Fraction(entry["coeff"])) for entry in obj]
        )


def add(a: ExactValue, b: ExactValue) -> ExactValue:
    """Termwise rational addition; cancellations drop out."""
    return a.add(b)


def scale(a: ExactValue, q) -> ExactValue:
    """Multiply every coefficient by the exact rational q."""
    return a.scale(q)


def eval_float(a: ExactValue) -> float:
    return a.eval_float()


def exact_eq(a: ExactValue, b: ExactValue) -> bool:
    """Structural equality of normalized term maps."""
    return a.exact_eq(b)


_SYMBOLS = {
    OneTag: lambda tag: "",
    PiTag: lambda tag: "π",
    SqrtTag: lambda tag: f"√{tag.k}",
    SecHalvingTag: lambda tag: f"sec({tag.omega:.6g}/2^{tag.level})",
    LogTag: lambda tag: f"ln({tag.x:.6g})",
}


def format_human(value: ExactValue) -> str:
    """Short human-readable rendering for tables, e.g. '2·√2' or 'π'."""
    if value.is_zero():
        return "0"
    parts = []
    for index, (tag, coeff) in enumerate(value._terms):
        symbol = _SYMBOLS[type(tag)](tag)
        magnitude = abs(coeff)
        coeff_str = str(magnitude)
        if "/" in coeff_str:
            coeff_str = f"({coeff_str})"
        if not symbol:
            body = coeff_str
        elif magnitude == 1:
            body = symbol
        else:
            body = f"{coeff_str}·{symbol}"
        if index == 0:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(parts)
