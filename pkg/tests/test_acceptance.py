"""Acceptance suite: one test per criterion, at its stated tolerance.

Each test prints a `[ACCEPTANCE] PASS <name>` line once its assertions
hold (visible with `pytest -s` or in captured output).  Run via:

    pytest tests/test_acceptance.py -v
"""

import json
import math
import random
import sys
import threading
import time
import urllib.request
from fractions import Fraction

from helpers import random_report

from paradoxlab.closedform import ONE, PI, SQRT2, ExactValue, exact_eq
from paradoxlab.dissection import (
    fibonacci_dissection,
    missing_square_case,
    rectangle_piece_set,
    verify_piece_accounting,
)
from paradoxlab.geometry import (
    Point,
    RationalPoint,
    collinear,
    measure_length,
    sup_distance_to_segment,
)
from paradoxlab.koch import build_koch, koch_area, koch_area_limit, koch_perimeter
from paradoxlab.revolution import HornQuery, area_under_curve, volume_of_revolution
from paradoxlab.serve import make_server
from paradoxlab.staircase import (
    Bisect,
    Equilateral,
    IsoRight,
    Lambda,
    Semicircle,
    build_iteration,
    closed_length_float,
    f_lambda,
    sum_formula,
)
from paradoxlab.wheel import (
    WheelConfig,
    cycloid_residual,
    slip_distance,
    trace_inner_attached,
    trace_outer,
)
from paradoxlab.wire import report_from_json, report_to_json

OMEGA60 = math.radians(60.0)


def passed(name):
    print(f"[ACCEPTANCE] PASS {name}")


def test_staircase_constancy():
    started = time.perf_counter()
    expected = {
        "semicircle": (Semicircle(), lambda r: ExactValue.of(PI, Fraction(r))),
        "iso-right": (IsoRight(), lambda r: ExactValue.of(SQRT2, 2 * Fraction(r))),
        "equilateral": (Equilateral(), lambda r: ExactValue.of(ONE, 4 * Fraction(r))),
    }
    for R in (1.0, 2.5):
        for name, (model, want) in expected.items():
            for n in range(1, 12):
                assert exact_eq(sum_formula(model, R, n), sum_formula(model, R, n + 1))
            assert exact_eq(sum_formula(model, R, 1), want(R))
            for n in range(1, 13):
                iteration = build_iteration(model, R, n)
                closed = closed_length_float(iteration.sum_closed)
                oracle = measure_length(iteration.curve)
                assert abs(oracle - closed) <= 1e-9 * closed
    elapsed = time.perf_counter() - started
    assert elapsed < 5.0
    passed(f"staircase constancy (pi*R / 2*sqrt(2)*R / 4R, oracle 1e-9, {elapsed:.2f}s)")


def test_lambda_model():
    assert abs(f_lambda(1.0) - 2.0 * math.sqrt(2.0)) <= 1e-12
    assert abs(f_lambda(0.75) - 2.8) <= 1e-12
    rising = [x / 40 for x in range(1, 41)]  # (0, 1]
    for lo, hi in zip(rising, rising[1:]):
        assert f_lambda(lo) < f_lambda(hi)
    falling = [1.0 + k * 0.5 for k in range(0, 40)]  # [1, 20.5]
    for lo, hi in zip(falling, falling[1:]):
        assert f_lambda(lo) > f_lambda(hi)
    for x in rising + falling + [123.0, 9876.5]:
        assert 2.0 < f_lambda(x) <= 2.0 * math.sqrt(2.0) + 1e-12
    passed("lambda model (f(1), f(3/4), monotonicity, range (2, 2*sqrt(2)])")


def test_bisect_convergence():
    for R in (1.0, 2.5):
        series = [
            sum_formula(Bisect(OMEGA60), R, n).eval_float() for n in range(1, 13)
        ]
        assert abs(series[0] - 4.0 * R) <= 1e-12
        assert abs(series[1] - 4.0 * R / math.sqrt(3.0)) <= 1e-12
        for here, there in zip(series, series[1:]):
            assert here > there
        assert abs(series[11] - 2.0 * R) < 1e-6
    passed("bisect convergence (S1 = 4R, S2 = 4R/sqrt(3), decreasing, |S12 - 2R| < 1e-6)")


def test_pointwise_vs_length_contrast():
    R = 1.0
    base_a, base_b = Point(0.0, 0.0), Point(2.0 * R, 0.0)
    models = [Semicircle(), IsoRight(), Lambda(1.0), Equilateral(), Bisect(OMEGA60)]
    for model in models:
        iteration = build_iteration(model, R, 12)
        sup = sup_distance_to_segment(iteration.curve, base_a, base_b)
        assert sup < 1e-3 * R, f"{model.name}: sup {sup}"
    # ... while the semicircle length never moves off pi*R
    assert exact_eq(sum_formula(Semicircle(), R, 12), ExactValue.of(PI, 1))
    length = measure_length(build_iteration(Semicircle(), R, 12).curve)
    assert abs(length - math.pi) <= 1e-9 * math.pi
    passed("pointwise-vs-length contrast (sup < 1e-3*R at n=12, length stays pi*R)")


def test_koch():
    started = time.perf_counter()
    table = [Fraction(3), Fraction(4), Fraction(16, 3), Fraction(64, 9)]
    for n, want in enumerate(table):
        assert koch_perimeter(1.0, n) == ExactValue.of(ONE, want)
    for n in range(0, 7):
        state = build_koch(1.0, n)
        closed = koch_perimeter(1.0, n).eval_float()
        assert abs(measure_length(state.boundary) - closed) <= 1e-9 * closed
    limit = koch_area_limit(1.0)
    assert abs(limit.eval_float() - 2.0 * math.sqrt(3.0) / 5.0) <= 1e-9
    assert abs(limit.eval_float() - 0.692820) <= 1e-6
    a20 = koch_area(1.0, 20).eval_float()
    assert abs(limit.eval_float() - a20) <= 1e-3
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0
    passed(f"koch (table 3, 4, 16/3, 64/9; oracle 1e-9; limit 2*sqrt(3)/5; {elapsed:.2f}s)")


def test_horn():
    at_huge = volume_of_revolution(HornQuery(1e6, 1000))
    assert abs(at_huge.analytic - math.pi) <= 3.2e-6
    checked = volume_of_revolution(HornQuery(1e4, 1_000_000))
    assert abs(checked.numeric - checked.analytic) <= 1e-8
    diverged = area_under_curve(HornQuery(math.exp(20.0) * 1.01, 1000))
    assert diverged.analytic > 20.0
    passed("horn (volume -> pi within 3.2e-6; quadrature 1e-8; area past 20)")


def test_dissections():
    case = missing_square_case()
    assert case.colored_area == 32
    assert case.claimed_area == Fraction(65, 2)
    assert case.sliver_area == 1
    assert (
        collinear(RationalPoint.of(0, 0), RationalPoint.of(8, 3), RationalPoint.of(13, 5))
        is False
    )
    assert verify_piece_accounting(rectangle_piece_set()).gap == 1
    for k in range(3, 41):
        assert fibonacci_dissection(k).discrepancy == 1
    passed("dissections (32 vs 65/2, sliver 1, slopes differ, gap 1, Cassini 3..40)")


def test_wheel():
    outer = trace_outer(WheelConfig(1.0, 1.0, 8))
    at_pi = outer[4]
    assert abs(at_pi.point.x - math.pi) <= 1e-12
    assert abs(at_pi.point.y - 2.0) <= 1e-12
    assert cycloid_residual(trace_outer(WheelConfig(1.0, 1.0, 512)), 1.0) <= 1e-9
    inner = trace_inner_attached(WheelConfig(2.0, 1.0, 512))
    assert cycloid_residual(inner, 1.0) > 0.5
    assert cycloid_residual(inner, 2.0) > 0.5
    assert abs(slip_distance(WheelConfig(2.0, 1.0, 8)) - 2.0 * math.pi) <= 1e-9
    slips = [slip_distance(WheelConfig(2.0, 0.2 * k, 8)) for k in range(1, 11)]
    for here, there in zip(slips, slips[1:]):
        assert here > there
    passed("wheel (cycloid point, residuals, slip 2*pi, slip decreasing)")


def test_cli_serve():
    rng = random.Random(0xACCE)
    for _ in range(100):
        report = random_report(rng)
        assert report_from_json(json.loads(json.dumps(report_to_json(report)))) == report

    server = make_server(0)
    port = server.server_address[1]
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    try:
        url = f"http://127.0.0.1:{port}/api/run?paradox=staircase&model=bisect&omega_deg=60&n=4"
        bodies = []
        for _ in range(3):
            with urllib.request.urlopen(url) as response:
                bodies.append(response.read())
        assert bodies[0] == bodies[1] == bodies[2]
    finally:
        server.shutdown()
        server.server_close()

    # The primary suite must not touch any UI component.
    assert not any("frontend" in name.lower() for name in sys.modules)
    passed("cli/serve (100 report round-trips, byte-identical GETs, no UI import)")
