"""Minimal HTTP extraction service.

POST /extract takes an extraction request as JSON and returns ranked
terms; GET /measures lists the measure/variant catalog.  The service is
stateless: every request builds its own immutable network, so concurrent
requests never share mutable state.
"""

from __future__ import annotations

import json
import os

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .centrality import MEASURE_CATALOG
from .pipeline import ExtractionRequest, extract

DEFAULT_MAX_BYTES = 1 << 20  # bounds betweenness cost on the service path

_FIELD_TYPES = {
    "text": str,
    "unit": str,
    "measure": str,
    "variant": str,
    "graph": str,
    "simplified": bool,
    "k_percent": int,
    "phrases": list,
    "phrase_file": str,
}


def _parse_request(payload) -> ExtractionRequest:
    if not isinstance(payload, dict):
        raise ValueError("request body must be a JSON object")
    if "text" not in payload:
        raise ValueError("missing required field 'text'")
    unknown = set(payload) - set(_FIELD_TYPES)
    if unknown:
        raise ValueError(f"unknown fields: {sorted(unknown)}")
    for name, expected in _FIELD_TYPES.items():
        if name in payload and payload[name] is not None:
            value = payload[name]
            if expected is int and isinstance(value, bool):
                raise ValueError(f"field {name!r} must be an integer")
            if not isinstance(value, expected):
                raise ValueError(f"field {name!r} must be of type {expected.__name__}")
    phrases = payload.get("phrases")
    if phrases is not None and not all(isinstance(p, str) for p in phrases):
        raise ValueError("field 'phrases' must be a list of strings")
    return ExtractionRequest(
        text=payload["text"],
        unit=payload.get("unit", "word"),
        measure=payload.get("measure", "degree"),
        variant=payload.get("variant"),
        graph=payload.get("graph", "directed"),
        simplified=bool(payload.get("simplified", False)),
        k_percent=payload.get("k_percent", 5),
        phrases=phrases,
        phrase_file=payload.get("phrase_file"),
    )


def create_app(max_bytes: int | None = None) -> FastAPI:
    if max_bytes is None:
        max_bytes = int(os.environ.get("TERMNET_MAX_BYTES", DEFAULT_MAX_BYTES))
    app = FastAPI(title="termnet", version="0.1.0")

    @app.get("/measures")
    def measures():
        return {
            "measures": [
                {
                    "measure": row["measure"],
                    "directed_variants": row["directed"],
                    "undirected_variants": row["undirected"],
                }
                for row in MEASURE_CATALOG
            ]
        }

    @app.post("/extract")
    async def extract_terms(request: Request):
        body = await request.body()
        if len(body) > max_bytes:
            return JSONResponse(
                {"detail": f"input exceeds limit of {max_bytes} bytes"},
                status_code=413,
            )
        try:
            payload = json.loads(body)
        except json.JSONDecodeError as exc:
            return JSONResponse({"detail": f"malformed JSON: {exc}"}, status_code=400)
        try:
            extraction = _parse_request(payload)
            outcome = extract(extraction)
        except ValueError as exc:
            return JSONResponse({"detail": str(exc)}, status_code=400)
        return {
            "terms": [
                {"term": label, "score": score, "rank": rank}
                for rank, (label, score) in enumerate(outcome.terms.terms, start=1)
            ],
            "measure": outcome.measure,
            "variant": outcome.variant,
            "warnings": outcome.warnings,
        }

    return app


def serve(host: str = "127.0.0.1", port: int | None = None, max_bytes: int | None = None):
    """Run the service under uvicorn (blocking)."""
    import uvicorn

    if port is None:
        port = int(os.environ.get("TERMNET_PORT", 8000))
    uvicorn.run(create_app(max_bytes=max_bytes), host=host, port=port)
