"""JSON wire formats shared by the CLI and the serve layer.

Floats serialize through json's repr-based encoder (shortest round-trip
decimal strings); exact rationals always travel as "num/den" strings,
never as floats.  Encoding then decoding any of these values yields a
structurally equal value, which the serve layer relies on for its
byte-identical-response guarantee.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from paradoxlab.closedform import ExactValue
from paradoxlab.errors import PreconditionError
from paradoxlab.geometry import Arc, CurveIteration, Point, Primitive, Segment
from paradoxlab.staircase import ClosedLength, InexactLength


def point_to_json(p: Point) -> List[float]:
    return [p.x, p.y]


def point_from_json(obj) -> Point:
    return Point(float(obj[0]), float(obj[1]))


def primitive_to_json(prim: Primitive) -> Dict[str, Any]:
    if isinstance(prim, Segment):
        return {
            "kind": "segment",
            "a": point_to_json(prim.a),
            "b": point_to_json(prim.b),
        }
    return {
        "kind": "arc",
        "center": point_to_json(prim.center),
        "radius": prim.radius,
        "start_angle": prim.start_angle,
        "end_angle": prim.end_angle,
        "orientation": prim.orientation,
    }


def primitive_from_json(obj) -> Primitive:
    kind = obj.get("kind")
    if kind == "segment":
        return Segment(point_from_json(obj["a"]), point_from_json(obj["b"]))
    if kind == "arc":
        return Arc(
            center=point_from_json(obj["center"]),
            radius=float(obj["radius"]),
            start_angle=float(obj["start_angle"]),
            end_angle=float(obj["end_angle"]),
            orientation=obj["orientation"],
        )
    raise PreconditionError("primitive kind in {segment, arc}", f"got {kind!r}")


def curve_to_json(curve: CurveIteration) -> Dict[str, Any]:
    return {
        "n": curve.n,
        "start": point_to_json(curve.start),
        "end": point_to_json(curve.end),
        "primitives": [primitive_to_json(p) for p in curve.primitives],
    }


def curve_from_json(obj) -> CurveIteration:
    return CurveIteration(
        n=int(obj["n"]),
        primitives=tuple(primitive_from_json(p) for p in obj["primitives"]),
        start=point_from_json(obj["start"]),
        end=point_from_json(obj["end"]),
    )


def closed_form_to_json(closed: Optional[ClosedLength]):
    """ExactValue -> term array; InexactLength -> {"inexact": float}."""
    if closed is None:
        return None
    if isinstance(closed, InexactLength):
        return {"inexact": closed.value}
    return closed.to_json_obj()


def closed_form_from_json(obj) -> Optional[ClosedLength]:
    if obj is None:
        return None
    if isinstance(obj, dict):
        return InexactLength(float(obj["inexact"]))
    return ExactValue.from_json_obj(obj)


@dataclass(frozen=True)
class IterationReport:
    """One row of a paradox run: the exact channel, its float evaluation,
    and the independent oracle measurement."""

    paradox: str
    params: Dict[str, Any]
    n: int
    closed_form: Optional[ClosedLength]
    float_value: float
    oracle_value: Optional[float]
    verdict: str
    sup_distance: Optional[float] = None
    extras: Optional[Dict[str, Any]] = None


def report_to_json(report: IterationReport) -> Dict[str, Any]:
    return {
        "paradox": report.paradox,
        "params": report.params,
        "n": report.n,
        "closed_form": closed_form_to_json(report.closed_form),
        "float_value": report.float_value,
        "oracle_value": report.oracle_value,
        "sup_distance": report.sup_distance,
        "verdict": report.verdict,
        "extras": report.extras,
    }


def report_from_json(obj) -> IterationReport:
    return IterationReport(
        paradox=obj["paradox"],
        params=dict(obj["params"]),
        n=int(obj["n"]),
        closed_form=closed_form_from_json(obj["closed_form"]),
        float_value=obj["float_value"],
        oracle_value=obj["oracle_value"],
        verdict=obj["verdict"],
        sup_distance=obj["sup_distance"],
        extras=obj["extras"],
    )


def dumps(obj) -> str:
    """Canonical compact encoding used on the wire."""
    return json.dumps(obj, separators=(",", ":"), allow_nan=False)


def dumps_pretty(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False)
