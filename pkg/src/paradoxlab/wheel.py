"""Aristotle's wheel: two attached circles, one rolled distance.

A rim point of the rolling outer circle traces the cycloid
x = R(phi - sin phi), y = R(1 - cos phi).  A point attached at inner
radius rho < R traces the curtate cycloid x = R*phi - rho*sin(phi),
y = R - rho*cos(phi); it is not a cycloid for any test radius, which is
the computable refutation of "2*pi*R = 2*pi*rho".  The inner circle
slides: over one revolution its contact line sweeps 2*pi*R while its own
circumference is only 2*pi*rho, so the slip is 2*pi*(R - rho).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List

from paradoxlab.errors import PreconditionError
from paradoxlab.geometry import Point

MIN_STEPS = 8
PHASE_OFFSETS = 1024


@dataclass(frozen=True)
class WheelConfig:
    R: float  # outer (rolling) radius
    rho: float  # inner (attached) radius, 0 < rho <= R
    steps: int  # samples over one revolution

    def __post_init__(self):
        if not (math.isfinite(self.R) and self.R > 0.0):
            raise PreconditionError("R > 0", f"got {self.R!r}")
        if not (math.isfinite(self.rho) and 0.0 < self.rho <= self.R):
            raise PreconditionError("0 < rho <= R", f"got rho={self.rho!r}")
        if self.steps < MIN_STEPS:
            raise PreconditionError(f"steps >= {MIN_STEPS}", f"got {self.steps}")


@dataclass(frozen=True)
class TraceSample:
    phi: float  # rolled angle in [0, 2*pi]
    point: Point


def _angles(steps: int) -> List[float]:
    return [math.tau * j / steps for j in range(steps + 1)]


def cycloid_point(r: float, phi: float) -> Point:
    return Point(r * (phi - math.sin(phi)), r * (1.0 - math.cos(phi)))


def trace_outer(cfg: WheelConfig) -> List[TraceSample]:
    """Rim-point trace over one revolution: the cycloid from (0, 0) to
    (2*pi*R, 0)."""
    return [TraceSample(phi, cycloid_point(cfg.R, phi)) for phi in _angles(cfg.steps)]


def trace_inner_attached(cfg: WheelConfig) -> List[TraceSample]:
    """Trace of the point attached at radius rho while the outer circle
    rolls (curtate cycloid; identical to trace_outer when rho = R)."""
    R, rho = cfg.R, cfg.rho
    return [
        TraceSample(
            phi,
            Point(R * phi - rho * math.sin(phi), R - rho * math.cos(phi)),
        )
        for phi in _angles(cfg.steps)
    ]


def cycloid_residual(trace: List[TraceSample], r_test: float) -> float:
    """Max defect of the trace against the radius-r_test cycloid at matched
    phi; (near) zero exactly when the trace is that cycloid."""
    if not trace:
        raise PreconditionError("trace nonempty")
    if not (math.isfinite(r_test) and r_test > 0.0):
        raise PreconditionError("r_test > 0", f"got {r_test!r}")
    worst = 0.0
    for sample in trace:
        ref = cycloid_point(r_test, sample.phi)
        defect = math.hypot(sample.point.x - ref.x, sample.point.y - ref.y)
        if defect > worst:
            worst = defect
    return worst


def cycloid_residual_min_phase(
    trace: List[TraceSample], r_test: float, offsets: int = PHASE_OFFSETS
) -> float:
    """Matched-phi residual minimized over a discrete grid of phase shifts.

    A stricter witness than cycloid_residual: even allowing the reference
    cycloid an arbitrary phase, the curtate trace stays far from it.
    """
    if offsets < 1:
        raise PreconditionError("offsets >= 1", f"got {offsets}")
    if not trace:
        raise PreconditionError("trace nonempty")
    if not (math.isfinite(r_test) and r_test > 0.0):
        raise PreconditionError("r_test > 0", f"got {r_test!r}")
    best = math.inf
    for i in range(offsets):
        delta = math.tau * i / offsets
        worst = 0.0
        for sample in trace:
            ref = cycloid_point(r_test, sample.phi + delta)
            defect = math.hypot(sample.point.x - ref.x, sample.point.y - ref.y)
            if defect > worst:
                worst = defect
            if worst >= best:
                break
        if worst < best:
            best = worst
    return best


def slip_distance(cfg: WheelConfig) -> float:
    """Center travel over one revolution minus the inner circle's rolled-off
    circumference: 2*pi*(R - rho), strictly decreasing in rho."""
    return math.tau * (cfg.R - cfg.rho)
