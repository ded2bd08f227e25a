import json
import math
import random

import pytest
from helpers import random_report

from paradoxlab import runner
from paradoxlab.cli import (
    EXIT_INVALID_PARAMETER,
    EXIT_UNWRITABLE_PATH,
    main,
)
from paradoxlab.closedform import ExactValue, PI
from paradoxlab.errors import PreconditionError
from paradoxlab.geometry import Arc, CurveIteration, Point, Segment
from paradoxlab.wire import (
    curve_from_json,
    curve_to_json,
    report_from_json,
    report_to_json,
)


class TestRoundTrips:
    def test_100_randomized_reports(self):
        rng = random.Random(0x5EED)
        for _ in range(100):
            report = random_report(rng)
            through_json = report_from_json(
                json.loads(json.dumps(report_to_json(report)))
            )
            assert through_json == report

    def test_curve_roundtrip(self):
        curve = CurveIteration.from_primitives(
            3,
            (
                Segment(Point(0, 0), Point(1, 0.5)),
                Arc(Point(1.5, 0.5), 0.5, math.pi, 0.0, "cw"),
                Segment(Point(2.0, 0.5), Point(3, 0)),
            ),
        )
        decoded = curve_from_json(json.loads(json.dumps(curve_to_json(curve))))
        assert decoded == curve

    def test_floats_roundtrip_exactly(self):
        value = 0.1 + 0.2  # 0.30000000000000004
        assert json.loads(json.dumps(value)) == value


class TestRunnerValidation:
    def test_unknown_paradox(self):
        with pytest.raises(PreconditionError):
            runner.resolve_params("moebius", {})

    def test_unknown_parameter(self):
        with pytest.raises(PreconditionError):
            runner.resolve_params("koch", {"upper": 3})

    def test_string_coercion(self):
        params = runner.resolve_params(
            "staircase", {"model": "bisect", "omega_deg": "60", "n": "2", "R": "1"}
        )
        assert params["omega_deg"] == 60.0 and params["n"] == 2

    def test_range_violations_name_the_precondition(self):
        with pytest.raises(PreconditionError) as err:
            runner.resolve_params("staircase", {"R": -2})
        assert err.value.precondition == "R > 0"
        with pytest.raises(PreconditionError) as err:
            runner.resolve_params("staircase", {"omega_deg": 90})
        assert err.value.precondition == "omega_deg < 90"

    def test_wheel_cross_field_check(self):
        with pytest.raises(PreconditionError) as err:
            runner.resolve_params("wheel", {"R": 1, "rho": 2})
        assert err.value.precondition == "rho <= R"

    def test_defaults_filled(self):
        params = runner.resolve_params("koch", {})
        assert params == {"a": 1.0, "n": 4}

    def test_oracle_samples_env(self, monkeypatch):
        monkeypatch.setenv(runner.SAMPLES_ENV, "17")
        assert runner.oracle_samples() == 17
        monkeypatch.setenv(runner.SAMPLES_ENV, "broken")
        with pytest.raises(PreconditionError):
            runner.oracle_samples()
        monkeypatch.delenv(runner.SAMPLES_ENV)
        assert runner.oracle_samples() == 256
        assert runner.oracle_samples(64) == 64


class TestRunnerReports:
    def test_staircase_series_shape(self):
        reports = runner.run(
            runner.RunRequest("staircase", {"model": "semicircle", "n": 4})
        )
        assert [r.n for r in reports] == [1, 2, 3, 4]
        for report in reports:
            assert report.closed_form == ExactValue.of(PI, 1)
            assert report.oracle_value == pytest.approx(math.pi, rel=1e-12)
            assert report.sup_distance is not None

    def test_staircase_respects_sample_override(self):
        coarse = runner.run(
            runner.RunRequest("staircase", {"model": "semicircle", "n": 1}), samples=2
        )
        fine = runner.run(
            runner.RunRequest("staircase", {"model": "semicircle", "n": 1}),
            samples=257,
        )
        # endpoints only (the arc endpoint carries a sin(pi) ~ 1e-16 residue)
        assert coarse[0].sup_distance <= 1e-12
        assert fine[0].sup_distance == pytest.approx(1.0, abs=1e-12)

    def test_koch_series_includes_area_channel(self):
        reports = runner.run(runner.RunRequest("koch", {"n": 2}))
        assert [r.n for r in reports] == [0, 1, 2]
        last = reports[-1]
        assert last.extras["sides"] == 48
        assert last.extras["area_float"] == pytest.approx(
            last.extras["area_oracle"], rel=1e-7
        )

    def test_horn_report(self):
        report = runner.run(
            runner.RunRequest("horn", {"upper": 1e6, "steps": 1000})
        )[0]
        assert abs(report.float_value - math.pi) <= 3.2e-6
        assert report.extras["area_analytic"] == pytest.approx(math.log(1e6))

    def test_dissection_default_and_fibonacci(self):
        default = runner.run(runner.RunRequest("dissection", {}))[0]
        assert default.extras["colored_area"] == "32"
        assert default.extras["claimed_area"] == "65/2"
        fib = runner.run(runner.RunRequest("dissection", {"k": 7}))[0]
        assert fib.extras["square_area"] == "169"
        assert fib.extras["rectangle_area"] == "168"

    def test_wheel_report(self):
        report = runner.run(
            runner.RunRequest("wheel", {"R": 2, "rho": 1, "steps": 64})
        )[0]
        assert report.float_value == pytest.approx(math.tau, abs=1e-12)
        assert report.oracle_value == pytest.approx(math.tau, abs=1e-9)
        assert report.extras["residual_inner_vs_R"] > 0.5

    def test_geometry_curve_for_wheel_is_polyline(self):
        curve = runner.geometry_curve("wheel", {"steps": 16})
        assert all(isinstance(p, Segment) for p in curve.primitives)

    def test_geometry_curve_rejects_dissection(self):
        with pytest.raises(PreconditionError):
            runner.geometry_curve("dissection", {})


class TestCli:
    def test_table_output(self, capsys):
        assert main(["staircase", "--model", "iso-right", "--n", "3"]) == 0
        out = capsys.readouterr().out
        assert "2·√2" in out
        assert "constant sequence" in out

    def test_json_output_parses(self, capsys):
        assert main(["koch", "--n", "1", "--format", "json"]) == 0
        reports = json.loads(capsys.readouterr().out)
        assert len(reports) == 2
        assert reports[1]["closed_form"] == [{"tag": "one", "coeff": "4"}]

    def test_svg_output(self, capsys):
        assert main(["staircase", "--model", "semicircle", "--n", "2",
                     "--format", "svg"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("<svg") and "scale(1,-1)" in out

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "run.json"
        assert main(["wheel", "--format", "json", "--out", str(target)]) == 0
        capsys.readouterr()
        assert json.loads(target.read_text())[0]["paradox"] == "wheel"

    def test_invalid_parameter_exit_code(self, capsys):
        code = main(["staircase", "--R", "-1"])
        assert code == EXIT_INVALID_PARAMETER
        err = json.loads(capsys.readouterr().err)
        assert err["error"]["code"] == "invalid-parameter"
        assert err["error"]["precondition"] == "R > 0"

    def test_unwritable_path_exit_code(self, tmp_path, capsys):
        blocked = tmp_path / "no" / "such" / "dir" / "out.json"
        code = main(["koch", "--n", "0", "--format", "json", "--out", str(blocked)])
        assert code == EXIT_UNWRITABLE_PATH
        err = json.loads(capsys.readouterr().err)
        assert err["error"]["code"] == "unwritable-path"

    def test_unknown_paradox_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["tesseract"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_samples_flag(self, capsys):
        assert main(["staircase", "--n", "1", "--samples", "2",
                     "--format", "json"]) == 0
        reports = json.loads(capsys.readouterr().out)
        assert reports[0]["sup_distance"] <= 1e-12

    def test_oracle_mismatch_refuses_success(self, monkeypatch, capsys):
        # sabotage the oracle: the run must refuse to report success
        monkeypatch.setattr(runner, "measure_length", lambda curve: 1e9)
        code = main(["staircase", "--n", "1", "--format", "json"])
        assert code == 5
        err = json.loads(capsys.readouterr().err)
        assert err["error"]["code"] == "oracle-mismatch"
