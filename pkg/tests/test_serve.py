import json
import math
import threading
import urllib.error
import urllib.request

import pytest

from paradoxlab.serve import make_server


@pytest.fixture(scope="module")
def server_url():
    server = make_server(0)
    port = server.server_address[1]
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{port}"
    server.shutdown()
    server.server_close()


def fetch(url):
    with urllib.request.urlopen(url) as response:
        return response.status, dict(response.headers), response.read()


def fetch_error(url):
    try:
        urllib.request.urlopen(url)
    except urllib.error.HTTPError as err:
        return err.code, json.loads(err.read())
    raise AssertionError("expected an HTTP error")


class TestCatalog:
    def test_lists_all_five_paradoxes(self, server_url):
        status, _, body = fetch(f"{server_url}/api/paradoxes")
        assert status == 200
        names = [entry["name"] for entry in json.loads(body)]
        assert sorted(names) == ["dissection", "horn", "koch", "staircase", "wheel"]

    def test_schema_drives_conditional_widgets(self, server_url):
        _, _, body = fetch(f"{server_url}/api/paradoxes")
        staircase = next(e for e in json.loads(body) if e["name"] == "staircase")
        by_name = {p["name"]: p for p in staircase["params"]}
        assert by_name["lambda"]["for_model"] == "lambda"
        assert by_name["omega_deg"]["for_model"] == "bisect"
        assert by_name["omega_deg"]["max_exclusive"] is True

    def test_cors_header_present(self, server_url):
        _, headers, _ = fetch(f"{server_url}/api/paradoxes")
        assert headers["Access-Control-Allow-Origin"] == "*"


class TestRun:
    def test_bisect_first_term(self, server_url):
        _, _, body = fetch(
            f"{server_url}/api/run?paradox=staircase&model=bisect&omega_deg=60&R=1&n=1"
        )
        reports = json.loads(body)
        assert len(reports) == 1
        assert reports[0]["float_value"] == pytest.approx(4.0, abs=1e-12)

    def test_horn_volume_near_pi(self, server_url):
        _, _, body = fetch(f"{server_url}/api/run?paradox=horn&upper=1e6&steps=1000")
        report = json.loads(body)[0]
        assert abs(report["float_value"] - math.pi) <= 3.2e-6

    def test_repeated_get_byte_identical(self, server_url):
        url = f"{server_url}/api/run?paradox=staircase&model=lambda&lambda=0.75&n=5"
        _, _, first = fetch(url)
        _, _, second = fetch(url)
        _, _, third = fetch(url)
        assert first == second == third

    def test_catalog_byte_identical(self, server_url):
        _, _, first = fetch(f"{server_url}/api/paradoxes")
        _, _, second = fetch(f"{server_url}/api/paradoxes")
        assert first == second


class TestGeometry:
    def test_staircase_curve(self, server_url):
        _, _, body = fetch(
            f"{server_url}/api/geometry?paradox=staircase&model=equilateral&n=3"
        )
        curve = json.loads(body)
        assert len(curve["primitives"]) == 8
        assert curve["start"] == [0.0, 0.0]
        assert curve["end"] == [2.0, 0.0]

    def test_koch_geometry(self, server_url):
        _, _, body = fetch(f"{server_url}/api/geometry?paradox=koch&n=1")
        assert len(json.loads(body)["primitives"]) == 12

    def test_svg_served(self, server_url):
        status, headers, body = fetch(
            f"{server_url}/api/svg?paradox=staircase&model=semicircle&n=3"
        )
        assert status == 200
        assert headers["Content-Type"] == "image/svg+xml"
        assert body.startswith(b"<svg")

    def test_dissection_svg_contains_pieces(self, server_url):
        _, _, body = fetch(f"{server_url}/api/svg?paradox=dissection")
        assert body.count(b"<polygon") >= 16


class TestErrors:
    def test_unknown_paradox_is_400(self, server_url):
        code, payload = fetch_error(f"{server_url}/api/run?paradox=klein-bottle")
        assert code == 400
        assert payload["error"]["code"] == "malformed-query"

    def test_missing_paradox_is_400(self, server_url):
        code, payload = fetch_error(f"{server_url}/api/run")
        assert code == 400

    def test_precondition_violation_is_422_and_named(self, server_url):
        code, payload = fetch_error(
            f"{server_url}/api/run?paradox=staircase&model=bisect&omega_deg=120"
        )
        assert code == 422
        assert payload["error"]["code"] == "precondition-violated"
        assert payload["error"]["precondition"] == "omega_deg < 90"

    def test_unknown_parameter_is_422(self, server_url):
        code, payload = fetch_error(f"{server_url}/api/run?paradox=koch&upper=9")
        assert code == 422
        assert "parameter known" in payload["error"]["precondition"]

    def test_unknown_path_is_404(self, server_url):
        code, payload = fetch_error(f"{server_url}/api/nope")
        assert code == 404

    def test_dissection_geometry_is_422(self, server_url):
        code, payload = fetch_error(f"{server_url}/api/geometry?paradox=dissection")
        assert code == 422
