"""Gabriel's horn: the area under 1/x diverges, the solid of revolution
of 1/x holds volume pi.

Both integrals are returned as a (numeric, analytic) pair: the numeric
channel is composite Simpson quadrature on a uniform grid over [1, A],
the analytic channel evaluates the antiderivative (ln A, respectively
pi*(1 - 1/A)).  The improper integrals are handled by truncation plus the
analytic tail, never by integrating to infinity numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from paradoxlab import _kernels
from paradoxlab.errors import PreconditionError

DEFAULT_SUBDIVISIONS = 1_000_000


@dataclass(frozen=True)
class HornQuery:
    upper: float  # truncation point A
    subdivisions: int = DEFAULT_SUBDIVISIONS

    def __post_init__(self):
        if not (math.isfinite(self.upper) and self.upper > 1.0):
            raise PreconditionError("upper > 1", f"got {self.upper!r}")
        if self.subdivisions < 1:
            raise PreconditionError("subdivisions >= 1", f"got {self.subdivisions}")


@dataclass(frozen=True)
class IntegralComparison:
    numeric: float
    analytic: float


def area_under_curve(q: HornQuery) -> IntegralComparison:
    """Area between 1/x and the x-axis on [1, A]: quadrature vs ln A.

    The analytic channel grows without bound as A grows (doubling under
    A -> A^2), which witnesses the divergence of the full improper integral.
    """
    numeric = _kernels.simpson_inv_power(1, q.upper, q.subdivisions)
    return IntegralComparison(numeric=numeric, analytic=math.log(q.upper))


def volume_of_revolution(q: HornQuery) -> IntegralComparison:
    """Volume of the revolved region on [1, A]: quadrature of pi/x^2 vs
    pi*(1 - 1/A).  Both stay below pi for every truncation point."""
    numeric = math.pi * _kernels.simpson_inv_power(2, q.upper, q.subdivisions)
    return IntegralComparison(numeric=numeric, analytic=math.pi * (1.0 - 1.0 / q.upper))
