"""Stateless JSON-over-HTTP facade over the checker, prover and LaTeX exporter.

Endpoints: POST /check, POST /latex, POST /prove, GET /health.  Request
bodies are read and validated by hand so that response bodies stay
byte-identical with the CLI's --json output (FastAPI's automatic models would
re-serialize them differently).
"""

from __future__ import annotations

import json
import os

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import __version__
from .checker import check, matches_sequent, parse_sequent
from .formula import ParseError
from .latex import build_tree, to_qtree
from .prover import Closed, NotPropositionalError, prove
from .render import parse_error_to_dict, report_to_dict, to_json, verdict_name
from .script import parse_proof, serialize_proof

MAX_BODY_BYTES = 1 << 20


class _RequestError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


def _json_response(doc: dict, status: int = 200) -> Response:
    return Response(content=to_json(doc), status_code=status, media_type="application/json")


async def _read_json(request: Request) -> dict:
    declared = request.headers.get("content-length")
    if declared is not None and declared.isdigit() and int(declared) > MAX_BODY_BYTES:
        raise _RequestError(413, "request body exceeds 1 MiB")
    body = await request.body()
    if len(body) > MAX_BODY_BYTES:
        raise _RequestError(413, "request body exceeds 1 MiB")
    try:
        doc = json.loads(body)
    except (UnicodeDecodeError, json.JSONDecodeError):
        raise _RequestError(400, "request body is not valid JSON")
    if not isinstance(doc, dict):
        raise _RequestError(400, "request body must be a JSON object")
    return doc


def _required_text(doc: dict, key: str) -> str:
    value = doc.get(key)
    if not isinstance(value, str) or not value.strip():
        raise _RequestError(400, f"field {key!r} must be a non-empty string")
    return value


def create_app() -> FastAPI:
    app = FastAPI(title="anita", version=__version__, docs_url=None, redoc_url=None)
    origins = os.environ.get("ANITA_CORS_ORIGINS", "*").split(",")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[o.strip() for o in origins],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(_RequestError)
    async def handle_request_error(_request: Request, err: _RequestError) -> Response:
        return _json_response({"error": err.message}, status=err.status)

    @app.get("/health")
    async def health() -> Response:
        return _json_response({"status": "ok", "version": __version__})

    @app.post("/check")
    async def check_endpoint(request: Request) -> Response:
        doc = await _read_json(request)
        proof = _required_text(doc, "proof")
        expect = doc.get("expect")
        if expect is not None and expect not in ("valid", "countermodel"):
            raise _RequestError(400, "field 'expect' must be 'valid' or 'countermodel'")
        expected_sequent = doc.get("expected_sequent")
        if expected_sequent is not None:
            if not isinstance(expected_sequent, str):
                raise _RequestError(400, "field 'expected_sequent' must be a string")
            try:
                expected_sequent = parse_sequent(expected_sequent)
            except ParseError as err:
                raise _RequestError(400, f"bad 'expected_sequent': {err}")

        grading = expect is not None or expected_sequent is not None
        try:
            script = parse_proof(proof)
        except ParseError as err:
            body = parse_error_to_dict(err)
            if grading:
                body["grade_ok"] = False
            return _json_response(body)
        report = check(script)
        body = report_to_dict(report)
        if grading:
            ok = expect is None or verdict_name(report) == expect
            if ok and expected_sequent is not None:
                ok = matches_sequent(script, expected_sequent)
            body["grade_ok"] = ok
        return _json_response(body)

    @app.post("/latex")
    async def latex_endpoint(request: Request) -> Response:
        doc = await _read_json(request)
        proof = _required_text(doc, "proof")
        try:
            script = parse_proof(proof)
        except ParseError as err:
            return _json_response(parse_error_to_dict(err), status=422)
        report = check(script)
        return _json_response({"latex": to_qtree(build_tree(script, report))})

    @app.post("/prove")
    async def prove_endpoint(request: Request) -> Response:
        doc = await _read_json(request)
        text = _required_text(doc, "sequent")
        try:
            sequent = parse_sequent(text)
        except ParseError as err:
            return _json_response({"error": f"bad sequent: {err}"}, status=422)
        try:
            result = prove(sequent)
        except NotPropositionalError as err:
            return _json_response({"error": str(err)}, status=422)
        if isinstance(result, Closed):
            return _json_response({"result": "closed", "script": serialize_proof(result.script)})
        model = {str(atom.predicate): str(sign) for atom, sign in result.model.assignments.items()}
        return _json_response({"result": "open", "countermodel": model})

    return app
