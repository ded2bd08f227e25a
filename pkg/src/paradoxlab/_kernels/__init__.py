"""Numeric kernels behind the measurement oracles.

Two interchangeable implementations exist:

* ``paradoxlab._kernels._native`` -- Cython extension, built by setup.py.
* ``paradoxlab._kernels._fallback`` -- pure Python, always available.

The native module is preferred when importable; set ``PARADOXLAB_PURE=1``
to force the fallback (used by the benchmark and the parity tests).

All kernels operate on flat float tables so the hot loops never touch
Python objects.  A curve is a ``array('d')`` of 7 doubles per primitive:

    segment:  [0.0, ax, ay, bx, by, 0.0, 0.0]
    arc:      [1.0, cx, cy, radius, start_angle, signed_span, 0.0]

``signed_span`` is positive for counterclockwise travel.
"""

import os

STRIDE = 7
KIND_SEGMENT = 0.0
KIND_ARC = 1.0


def _pure_requested() -> bool:
    return os.environ.get("PARADOXLAB_PURE", "").strip() not in ("", "0")


if _pure_requested():
    from paradoxlab._kernels import _fallback as _impl

    BACKEND = "pure"
else:
    try:
        from paradoxlab._kernels import _native as _impl  # type: ignore[no-redef]

        BACKEND = "native"
    except ImportError:
        from paradoxlab._kernels import _fallback as _impl  # type: ignore[no-redef]

        BACKEND = "pure"

curve_length = _impl.curve_length
max_chain_gap = _impl.max_chain_gap
sup_distance = _impl.sup_distance
shoelace = _impl.shoelace
koch_refine = _impl.koch_refine
simpson_inv_power = _impl.simpson_inv_power

__all__ = [
    "BACKEND",
    "STRIDE",
    "KIND_SEGMENT",
    "KIND_ARC",
    "curve_length",
    "max_chain_gap",
    "sup_distance",
    "shoelace",
    "koch_refine",
    "simpson_inv_power",
]
