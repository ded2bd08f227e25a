"""Request validation and paradox dispatch shared by the CLI and serve layer.

The catalog below is the single source of truth for parameter schemas:
the CLI builds its flags from the same ranges the serve endpoints validate
and the explorer UI renders its widgets from the served copy.
"""

from __future__ import annotations

import copy
import math
import os
from array import array
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from paradoxlab import _kernels, dissection, koch, revolution, staircase, svgout, wheel
from paradoxlab.closedform import ExactValue, PI, format_human
from paradoxlab.errors import OracleMismatchError, PreconditionError
from paradoxlab.geometry import (
    CurveIteration,
    DEFAULT_SAMPLES_PER_PRIMITIVE,
    Point,
    Segment,
    measure_length,
    measure_polygon_area_float,
    sup_distance_to_segment,
)
from paradoxlab.wire import IterationReport

PARADOXES = ("koch", "horn", "staircase", "dissection", "wheel")

# Serving/running caps; tighter than the module geometry caps where building
# the full report series would otherwise exhaust memory.
STAIRCASE_RUN_MAX_N = 16
ORACLE_REL_TOL = 1e-9
KOCH_AREA_REL_TOL = 1e-7

SAMPLES_ENV = "PARADOXLAB_SAMPLES"


def oracle_samples(override: Optional[int] = None) -> int:
    """Sup-distance sampling density: explicit override, else env, else 256."""
    if override is not None:
        value = override
    else:
        raw = os.environ.get(SAMPLES_ENV, "").strip()
        if not raw:
            return DEFAULT_SAMPLES_PER_PRIMITIVE
        try:
            value = int(raw)
        except ValueError:
            raise PreconditionError(
                f"{SAMPLES_ENV} is an integer", f"got {raw!r}"
            ) from None
    if value < 2:
        raise PreconditionError("samples_per_primitive >= 2", f"got {value}")
    return value


CATALOG: List[Dict[str, Any]] = [
    {
        "name": "staircase",
        "title": "Staircase length models",
        "params": [
            {
                "name": "model",
                "type": "enum",
                "choices": list(staircase.MODEL_NAMES),
                "default": "semicircle",
            },
            {"name": "R", "type": "float", "default": 1.0, "min": 0.0, "min_exclusive": True},
            {"name": "n", "type": "int", "default": 6, "min": 1, "max": STAIRCASE_RUN_MAX_N},
            {
                "name": "lambda",
                "type": "float",
                "default": 1.0,
                "min": 0.0,
                "min_exclusive": True,
                "for_model": "lambda",
            },
            {
                "name": "omega_deg",
                "type": "float",
                "default": 60.0,
                "min": 0.0,
                "max": 90.0,
                "min_exclusive": True,
                "max_exclusive": True,
                "for_model": "bisect",
            },
        ],
    },
    {
        "name": "koch",
        "title": "Koch snowflake",
        "params": [
            {"name": "a", "type": "float", "default": 1.0, "min": 0.0, "min_exclusive": True},
            {"name": "n", "type": "int", "default": 4, "min": 0, "max": koch.GEOMETRY_MAX_N},
        ],
    },
    {
        "name": "horn",
        "title": "Gabriel's horn",
        "params": [
            {"name": "upper", "type": "float", "default": 10000.0, "min": 1.0, "min_exclusive": True},
            {"name": "steps", "type": "int", "default": revolution.DEFAULT_SUBDIVISIONS, "min": 1, "max": 10**8},
        ],
    },
    {
        "name": "dissection",
        "title": "Dissection fallacies",
        "params": [
            {"name": "k", "type": "int", "default": None, "min": 3, "max": 40, "optional": True},
        ],
    },
    {
        "name": "wheel",
        "title": "Aristotle's wheel",
        "params": [
            {"name": "R", "type": "float", "default": 2.0, "min": 0.0, "min_exclusive": True},
            {"name": "rho", "type": "float", "default": 1.0, "min": 0.0, "min_exclusive": True},
            {"name": "steps", "type": "int", "default": 720, "min": wheel.MIN_STEPS, "max": 10**6},
        ],
    },
]


def catalog() -> List[Dict[str, Any]]:
    """The paradox catalog with parameter schemas (deep-copied)."""
    return copy.deepcopy(CATALOG)


def _paradox_schema(paradox: str) -> Dict[str, Any]:
    for entry in CATALOG:
        if entry["name"] == paradox:
            return entry
    raise PreconditionError(
        f"paradox in {{{', '.join(PARADOXES)}}}", f"got {paradox!r}"
    )


def _convert(spec: Dict[str, Any], raw: Any):
    kind = spec["type"]
    try:
        if kind == "int":
            if isinstance(raw, float) and not raw.is_integer():
                raise ValueError(raw)
            return int(raw)
        if kind == "float":
            return float(raw)
    except (TypeError, ValueError):
        raise PreconditionError(
            f"{spec['name']} is {'an integer' if kind == 'int' else 'a number'}",
            f"got {raw!r}",
        ) from None
    # enum
    if raw not in spec["choices"]:
        raise PreconditionError(
            f"{spec['name']} in {{{', '.join(spec['choices'])}}}", f"got {raw!r}"
        )
    return raw


def _check_range(spec: Dict[str, Any], value) -> None:
    name = spec["name"]
    low = spec.get("min")
    high = spec.get("max")
    if low is not None:
        if spec.get("min_exclusive"):
            if not value > low:
                raise PreconditionError(f"{name} > {low:g}", f"got {value!r}")
        elif value < low:
            raise PreconditionError(f"{name} >= {low:g}", f"got {value!r}")
    if high is not None:
        if spec.get("max_exclusive"):
            if not value < high:
                raise PreconditionError(f"{name} < {high:g}", f"got {value!r}")
        elif value > high:
            raise PreconditionError(f"{name} <= {high:g}", f"got {value!r}")


def resolve_params(paradox: str, raw: Dict[str, Any]) -> Dict[str, Any]:
    """Validate raw key/values (strings allowed) against the catalog schema."""
    schema = _paradox_schema(paradox)
    known = {spec["name"]: spec for spec in schema["params"]}
    for key in raw:
        if key not in known:
            raise PreconditionError(
                f"parameter known for {paradox}: {{{', '.join(known)}}}",
                f"got {key!r}",
            )
    resolved: Dict[str, Any] = {}
    for name, spec in known.items():
        if name in raw and raw[name] is not None:
            value = _convert(spec, raw[name])
            if not isinstance(value, str) and not math.isfinite(value):
                raise PreconditionError(f"{name} finite", f"got {value!r}")
            _check_range(spec, value)
            resolved[name] = value
        elif spec.get("optional"):
            resolved[name] = None
        else:
            resolved[name] = spec["default"]
    if paradox == "wheel" and resolved["rho"] > resolved["R"]:
        raise PreconditionError("rho <= R", f"got rho={resolved['rho']!r}")
    return resolved


@dataclass(frozen=True)
class RunRequest:
    paradox: str
    params: Dict[str, Any] = field(default_factory=dict)
    output: str = "json"  # json | svg | table
    out_path: Optional[str] = None


def _check_oracle(value: float, oracle: float, rel_tol: float, what: str) -> None:
    if abs(value - oracle) > rel_tol * max(1.0, abs(value)):
        raise OracleMismatchError(
            f"{what}: closed form {value!r} vs oracle {oracle!r} "
            f"beyond relative tolerance {rel_tol:g}"
        )


def _staircase_model(params: Dict[str, Any]) -> staircase.StaircaseModel:
    return staircase.parse_model(
        params["model"],
        lam=params["lambda"],
        omega=math.radians(params["omega_deg"]),
    )


def _staircase_verdict(model: staircase.StaircaseModel, R: float) -> str:
    info = staircase.limit_classify(model, R)
    if isinstance(model, staircase.Semicircle):
        return "constant sequence, limit πR ≠ 2R"
    if isinstance(model, staircase.IsoRight):
        return "constant sequence, limit 2√2R ≠ 2R"
    if isinstance(model, staircase.Equilateral):
        return "constant sequence, limit 4R ≠ 2R"
    if isinstance(model, staircase.Lambda):
        return (
            f"constant sequence, limit f(λ)R = {info.limit_value!r} ≠ 2R"
        )
    return "strictly decreasing, limit 2R = base length (correct model)"


def _run_staircase(params: Dict[str, Any], samples: int) -> List[IterationReport]:
    model = _staircase_model(params)
    R = params["R"]
    base_a, base_b = Point(0.0, 0.0), Point(2.0 * R, 0.0)
    verdict = _staircase_verdict(model, R)
    reports = []
    for n in range(1, params["n"] + 1):
        iteration = staircase.build_iteration(model, R, n)
        closed = iteration.sum_closed
        value = staircase.closed_length_float(closed)
        oracle = measure_length(iteration.curve)
        _check_oracle(value, oracle, ORACLE_REL_TOL, f"staircase n={n}")
        sup = sup_distance_to_segment(iteration.curve, base_a, base_b, samples)
        reports.append(
            IterationReport(
                paradox="staircase",
                params=params,
                n=n,
                closed_form=closed,
                float_value=value,
                oracle_value=oracle,
                verdict=verdict,
                sup_distance=sup,
                extras={
                    "pieces": iteration.pieces,
                    "gap_per_step": staircase.gap_per_step(model, R, n),
                },
            )
        )
    return reports


def _run_koch(params: Dict[str, Any]) -> List[IterationReport]:
    a = params["a"]
    limit = koch.koch_area_limit(a)
    verdict = (
        "perimeter diverges (ratio 4/3 per step); "
        f"area increases to the finite limit {format_human(limit)}"
    )
    reports = []
    for n in range(0, params["n"] + 1):
        state = koch.build_koch(a, n)
        perimeter = koch.koch_perimeter(a, n)
        value = perimeter.eval_float()
        oracle = measure_length(state.boundary)
        _check_oracle(value, oracle, ORACLE_REL_TOL, f"koch perimeter n={n}")
        area = koch.koch_area(a, n)
        area_oracle = measure_polygon_area_float(state.boundary)
        _check_oracle(
            area.eval_float(), area_oracle, KOCH_AREA_REL_TOL, f"koch area n={n}"
        )
        reports.append(
            IterationReport(
                paradox="koch",
                params=params,
                n=n,
                closed_form=perimeter,
                float_value=value,
                oracle_value=oracle,
                verdict=verdict,
                sup_distance=None,
                extras={
                    "sides": len(state.boundary.primitives),
                    "area": area.to_json_obj(),
                    "area_float": area.eval_float(),
                    "area_oracle": area_oracle,
                    "area_limit": limit.to_json_obj(),
                    "area_limit_float": limit.eval_float(),
                },
            )
        )
    return reports


def _run_horn(params: Dict[str, Any]) -> List[IterationReport]:
    query = revolution.HornQuery(upper=params["upper"], subdivisions=params["steps"])
    area = revolution.area_under_curve(query)
    volume = revolution.volume_of_revolution(query)
    closed = ExactValue.of(PI, 1 - 1 / Fraction(query.upper))
    report = IterationReport(
        paradox="horn",
        params=params,
        n=params["steps"],
        closed_form=closed,
        float_value=volume.analytic,
        oracle_value=volume.numeric,
        verdict=(
            "area under 1/x grows like ln A (divergent); "
            "volume of revolution stays below π"
        ),
        sup_distance=None,
        extras={
            "area_numeric": area.numeric,
            "area_analytic": area.analytic,
            "volume_numeric": volume.numeric,
            "volume_analytic": volume.analytic,
        },
    )
    return [report]


def _run_dissection(params: Dict[str, Any]) -> List[IterationReport]:
    k = params["k"]
    if k is not None:
        result = dissection.fibonacci_dissection(k)
        return [
            IterationReport(
                paradox="dissection",
                params=params,
                n=k,
                closed_form=ExactValue.rational(result.discrepancy),
                float_value=float(result.discrepancy),
                oracle_value=None,
                verdict=(
                    f"Cassini: |F({k - 1})F({k + 1}) - F({k})²| = "
                    f"{result.discrepancy}; square {result.square_area} vs "
                    f"rectangle {result.rectangle_area}"
                ),
                sup_distance=None,
                extras={
                    "square_area": str(result.square_area),
                    "rectangle_area": str(result.rectangle_area),
                    "discrepancy": str(result.discrepancy),
                },
            )
        ]
    case = dissection.missing_square_case()
    rect = dissection.verify_piece_accounting(dissection.rectangle_piece_set())
    square = dissection.verify_piece_accounting(dissection.square_piece_set())
    # Independent float channel: shoelace of the sliver parallelogram.
    sliver_float = abs(
        _kernels.shoelace(
            array("d", [0.0, 8.0, 13.0, 5.0]), array("d", [0.0, 3.0, 5.0, 2.0])
        )
    )
    report = IterationReport(
        paradox="dissection",
        params=params,
        n=0,
        closed_form=ExactValue.rational(case.sliver_area),
        float_value=float(case.sliver_area),
        oracle_value=sliver_float,
        verdict=(
            f"pieces cover {case.colored_area}, claimed triangle "
            f"{case.claimed_area}; hypotenuse slopes {case.red_slope} vs "
            f"{case.green_slope} (not collinear); hidden sliver area "
            f"{case.sliver_area}; 8×8 square gap {square.gap}, "
            f"13×5 rectangle gap {rect.gap}"
        ),
        sup_distance=None,
        extras={
            "colored_area": str(case.colored_area),
            "claimed_area": str(case.claimed_area),
            "sliver_area": str(case.sliver_area),
            "collinear": case.collinear,
            "red_slope": str(case.red_slope),
            "green_slope": str(case.green_slope),
            "square_gap": str(square.gap),
            "rectangle_gap": str(rect.gap),
        },
    )
    return [report]


def _run_wheel(params: Dict[str, Any]) -> List[IterationReport]:
    cfg = wheel.WheelConfig(R=params["R"], rho=params["rho"], steps=params["steps"])
    outer = wheel.trace_outer(cfg)
    inner = wheel.trace_inner_attached(cfg)
    slip = wheel.slip_distance(cfg)
    # Oracle: horizontal progress of the rim trace minus the inner
    # circumference, measured from the sampled points.
    progress = outer[-1].point.x - outer[0].point.x
    slip_oracle = progress - math.tau * cfg.rho
    _check_oracle(slip, slip_oracle, ORACLE_REL_TOL, "wheel slip")
    residual_self = wheel.cycloid_residual(outer, cfg.R)
    residual_rho = wheel.cycloid_residual(inner, cfg.rho)
    residual_R = wheel.cycloid_residual(inner, cfg.R)
    closed = ExactValue.of(PI, 2 * (Fraction(cfg.R) - Fraction(cfg.rho)))
    if cfg.rho == cfg.R:
        verdict = "rho = R: the attached point is a rim point, trace is the cycloid"
    else:
        verdict = (
            "inner point traces a curtate cycloid, not a cycloid "
            f"(residuals {residual_rho:.3g} vs r=ρ, {residual_R:.3g} vs r=R); "
            "the inner circle slides: slip = 2π(R − ρ)"
        )
    report = IterationReport(
        paradox="wheel",
        params=params,
        n=params["steps"],
        closed_form=closed,
        float_value=slip,
        oracle_value=slip_oracle,
        verdict=verdict,
        sup_distance=None,
        extras={
            "residual_outer_self": residual_self,
            "residual_inner_vs_rho": residual_rho,
            "residual_inner_vs_R": residual_R,
        },
    )
    return [report]


def run(request: RunRequest, samples: Optional[int] = None) -> List[IterationReport]:
    """Dispatch a validated request to its paradox module.

    Raises PreconditionError for invalid parameters and OracleMismatchError
    if any geometric run disagrees with its closed form beyond tolerance
    (a run is never reported successful past a violated tolerance).
    """
    params = resolve_params(request.paradox, request.params)
    sample_count = oracle_samples(samples)
    if request.paradox == "staircase":
        return _run_staircase(params, sample_count)
    if request.paradox == "koch":
        return _run_koch(params)
    if request.paradox == "horn":
        return _run_horn(params)
    if request.paradox == "dissection":
        return _run_dissection(params)
    return _run_wheel(params)


def _polyline_curve(n: int, points: List[Point]) -> CurveIteration:
    segments = [
        Segment(points[i], points[i + 1])
        for i in range(len(points) - 1)
        if points[i] != points[i + 1]
    ]
    return CurveIteration.from_primitives(n, segments)


def geometry_curve(paradox: str, params: Dict[str, Any]) -> CurveIteration:
    """The drawable CurveIteration for curve paradoxes (not dissection)."""
    resolved = resolve_params(paradox, params)
    if paradox == "staircase":
        model = _staircase_model(resolved)
        return staircase.build_iteration(model, resolved["R"], resolved["n"]).curve
    if paradox == "koch":
        return koch.build_koch(resolved["a"], resolved["n"]).boundary
    if paradox == "horn":
        upper = resolved["upper"]
        count = 256
        points = [
            Point(x, 1.0 / x)
            for x in (math.exp(math.log(upper) * i / count) for i in range(count + 1))
        ]
        return _polyline_curve(0, points)
    if paradox == "wheel":
        cfg = wheel.WheelConfig(
            R=resolved["R"], rho=resolved["rho"], steps=resolved["steps"]
        )
        return _polyline_curve(
            0, [s.point for s in wheel.trace_inner_attached(cfg)]
        )
    raise PreconditionError(
        "geometry available for {staircase, koch, horn, wheel}",
        "dissection figures are served via SVG",
    )


def render_svg(paradox: str, params: Dict[str, Any]) -> str:
    resolved = resolve_params(paradox, params)
    if paradox == "dissection":
        sets = [
            dissection.square_piece_set(),
            dissection.rectangle_piece_set(),
            dissection.missing_square_piece_set("a"),
            dissection.missing_square_piece_set("b"),
        ]
        return svgout.piece_sets_svg(sets)
    if paradox == "wheel":
        cfg = wheel.WheelConfig(
            R=resolved["R"], rho=resolved["rho"], steps=resolved["steps"]
        )
        outer = _polyline_curve(0, [s.point for s in wheel.trace_outer(cfg)])
        inner = _polyline_curve(0, [s.point for s in wheel.trace_inner_attached(cfg)])
        base = (Point(0.0, 0.0), Point(math.tau * cfg.R, 0.0))
        return svgout.curve_svg(outer, base=base, companions=[(inner, "#e05252")])
    curve = geometry_curve(paradox, resolved)
    base = None
    if paradox == "staircase":
        base = (Point(0.0, 0.0), Point(2.0 * resolved["R"], 0.0))
    elif paradox == "horn":
        base = (Point(1.0, 0.0), Point(resolved["upper"], 0.0))
    return svgout.curve_svg(curve, base=base)
