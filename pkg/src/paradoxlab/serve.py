"""Read-only local HTTP API for the explorer UI.

Endpoints (all GET, all stateless; identical query gives a byte-identical
body):

    /api/paradoxes              catalog with parameter schemas
    /api/run?paradox=...&...    IterationReport series (JSON array)
    /api/geometry?paradox=...   CurveIteration JSON (curve paradoxes)
    /api/svg?paradox=...        SVG body

Malformed queries get a structured 400; violated computational
preconditions get a 422 naming the precondition.  Responses carry
permissive CORS headers; this is a local tool with no authentication.
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from paradoxlab import runner
from paradoxlab.errors import OracleMismatchError, PreconditionError
from paradoxlab.wire import curve_to_json, dumps, report_to_json


class _BadRequest(Exception):
    pass


def _single_values(query: str) -> dict:
    parsed = parse_qs(query, keep_blank_values=True)
    flat = {}
    for key, values in parsed.items():
        if len(values) != 1:
            raise _BadRequest(f"parameter {key!r} given {len(values)} times")
        flat[key] = values[0]
    return flat


def _require_paradox(params: dict) -> str:
    paradox = params.pop("paradox", None)
    if paradox is None:
        raise _BadRequest("missing required parameter 'paradox'")
    if paradox not in runner.PARADOXES:
        raise _BadRequest(
            f"unknown paradox {paradox!r}; expected one of "
            f"{', '.join(runner.PARADOXES)}"
        )
    return paradox


def _error_body(code: str, message: str, precondition: "str | None" = None) -> bytes:
    payload = {"error": {"code": code, "message": message}}
    if precondition:
        payload["error"]["precondition"] = precondition
    return dumps(payload).encode("utf-8")


class ParadoxLabHandler(BaseHTTPRequestHandler):
    server_version = "paradoxlab"
    protocol_version = "HTTP/1.1"

    def log_message(self, format, *args):  # keep test output quiet
        pass

    def _send(self, status: int, body: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, body: bytes) -> None:
        self._send(status, body, "application/json; charset=utf-8")

    def do_GET(self):
        url = urlparse(self.path)
        try:
            params = _single_values(url.query)
        except _BadRequest as exc:
            self._send_json(400, _error_body("malformed-query", str(exc)))
            return
        try:
            if url.path == "/api/paradoxes":
                self._send_json(200, dumps(runner.catalog()).encode("utf-8"))
            elif url.path == "/api/run":
                paradox = _require_paradox(params)
                reports = runner.run(runner.RunRequest(paradox=paradox, params=params))
                body = dumps([report_to_json(r) for r in reports]).encode("utf-8")
                self._send_json(200, body)
            elif url.path == "/api/geometry":
                paradox = _require_paradox(params)
                curve = runner.geometry_curve(paradox, params)
                self._send_json(200, dumps(curve_to_json(curve)).encode("utf-8"))
            elif url.path == "/api/svg":
                paradox = _require_paradox(params)
                svg = runner.render_svg(paradox, params)
                self._send(200, svg.encode("utf-8"), "image/svg+xml")
            else:
                self._send_json(
                    404, _error_body("not-found", f"unknown path {url.path!r}")
                )
        except _BadRequest as exc:
            self._send_json(400, _error_body("malformed-query", str(exc)))
        except PreconditionError as exc:
            self._send_json(
                422,
                _error_body("precondition-violated", str(exc), exc.precondition),
            )
        except OracleMismatchError as exc:
            self._send_json(500, _error_body("oracle-mismatch", str(exc)))


def make_server(port: int, host: str = "127.0.0.1") -> ThreadingHTTPServer:
    """Bind and return the server without starting it (tests drive this)."""
    return ThreadingHTTPServer((host, port), ParadoxLabHandler)


def serve(port: int, host: str = "127.0.0.1") -> None:
    """Serve until interrupted."""
    server = make_server(port, host=host)
    address = f"http://{server.server_address[0]}:{server.server_address[1]}"
    print(f"paradoxlab serving on {address} (read-only; Ctrl-C to stop)", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
