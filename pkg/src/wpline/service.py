"""Local JSON service exposing the engine to scripts and the explorer UI.

Stateless: every handler calls pure engine functions, so identical requests
yield identical responses.  Bodies are validated by hand to keep the error
contract explicit: 400 for malformed quiver JSON, 404 for unknown fixtures,
422 for well-formed quivers violating the loop/2-cycle invariants or naming
unknown vertices.  Binds loopback by default; this is a desk tool.
"""

from __future__ import annotations

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from .bundles import eq_ext
from .fixtures import fixture_json, fixture_names
from .quiver import Quiver, apply_sequence, is_isomorphic, mutate, search
from .replay import run_replay
from .textforms import canonical_json, parse_bundle, parse_weights


def _json_response(payload, status: int = 200) -> Response:
    return Response(
        content=canonical_json(payload), status_code=status, media_type="application/json"
    )


def _error(status: int, message: str) -> Response:
    return _json_response({"schema": "1", "error": message}, status)


def _parse_quiver(data) -> Quiver:
    # Shape errors are 400s; invariant violations (loops, 2-cycles) are 422s.
    if not isinstance(data, dict) or "vertices" not in data or "arrows" not in data:
        raise _Malformed("quiver JSON must have 'vertices' and 'arrows'")
    try:
        return Quiver.from_json_dict(data)
    except ValueError as exc:
        msg = str(exc)
        if "malformed" in msg or "unknown vertex" in msg:
            raise _Malformed(msg) from exc
        raise _Invalid(msg) from exc


class _Malformed(Exception):
    pass


class _Invalid(Exception):
    pass


def create_app() -> FastAPI:
    app = FastAPI(title="wpline engine", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    async def body_of(request: Request) -> dict:
        try:
            data = await request.json()
        except Exception as exc:
            raise _Malformed(f"request body is not JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise _Malformed("request body must be a JSON object")
        return data

    @app.exception_handler(_Malformed)
    async def malformed(_request, exc: _Malformed):
        return _error(400, str(exc))

    @app.exception_handler(_Invalid)
    async def invalid(_request, exc: _Invalid):
        return _error(422, str(exc))

    @app.get("/fixtures")
    async def list_fixtures():
        return _json_response({"schema": "1", "fixtures": fixture_names()})

    @app.get("/fixtures/{name}")
    async def get_fixture(name: str):
        if name not in fixture_names():
            return _error(404, f"unknown fixture {name!r}")
        return _json_response({"schema": "1", "fixture": fixture_json(name)})

    @app.post("/mutate")
    async def post_mutate(request: Request):
        data = await body_of(request)
        q = _parse_quiver(data.get("quiver"))
        vertex = data.get("vertex")
        if not isinstance(vertex, int):
            raise _Malformed("'vertex' must be an integer vertex id")
        try:
            out = mutate(q, vertex)
        except KeyError as exc:
            raise _Invalid(f"bad vertex: {exc}") from exc
        return _json_response({"schema": "1", "quiver": out.to_json_dict()})

    @app.post("/apply")
    async def post_apply(request: Request):
        data = await body_of(request)
        q = _parse_quiver(data.get("quiver"))
        seq = data.get("sequence")
        if not isinstance(seq, list) or not all(isinstance(v, int) for v in seq):
            raise _Malformed("'sequence' must be a list of vertex ids")
        try:
            out = apply_sequence(q, seq)
        except KeyError as exc:
            raise _Invalid(f"bad vertex: {exc}") from exc
        return _json_response({"schema": "1", "quiver": out.to_json_dict()})

    @app.post("/iso")
    async def post_iso(request: Request):
        data = await body_of(request)
        q1 = _parse_quiver(data.get("q1"))
        q2 = _parse_quiver(data.get("q2"))
        wit = is_isomorphic(q1, q2)
        return _json_response(
            {
                "schema": "1",
                "isomorphic": wit is not None,
                "witness": {str(k): v for k, v in sorted(wit.items())} if wit else None,
            }
        )

    @app.post("/search")
    async def post_search(request: Request):
        data = await body_of(request)
        src = _parse_quiver(data.get("source"))
        tgt = _parse_quiver(data.get("target"))
        depth = data.get("maxDepth", 6)
        if not isinstance(depth, int) or depth < 0:
            raise _Malformed("'maxDepth' must be a non-negative integer")
        seq = search(src, tgt, depth)
        return _json_response({"schema": "1", "sequence": seq})

    @app.post("/bundle/eq")
    async def post_bundle_eq(request: Request):
        data = await body_of(request)
        try:
            w = parse_weights(",".join(str(x) for x in data.get("weights", [])))
            a = parse_bundle(w, data.get("a", ""))
            b = parse_bundle(w, data.get("b", ""))
        except (ValueError, TypeError) as exc:
            raise _Malformed(str(exc)) from exc
        return _json_response({"schema": "1", "equal": eq_ext(a, b)})

    @app.post("/replay/{weight_type}")
    async def post_replay(weight_type: str):
        try:
            report = run_replay(weight_type)
        except KeyError as exc:
            return _error(404, str(exc))
        return _json_response(report.to_dict())

    return app
