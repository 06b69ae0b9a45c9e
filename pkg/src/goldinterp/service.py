"""Stateless HTTP JSON API over the interpolation, criteria, and export operations.

The service adds nothing numeric: every handler is a thin adapter around the
library, identical requests produce byte-identical responses, and no request
mutates server state.  Domain errors map to 400 with a stable machine code;
malformed or mismatched request bodies fail pydantic validation with 422.
"""

from __future__ import annotations

from typing import Any, Literal

from fastapi import FastAPI, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel, ConfigDict, Field

from . import __version__, export, pipeline
from .core import Node, NodeSequence
from .errors import GoldenInterpError
from .transforms import ORIGINAL

_MAX_BODY_BYTES = 1 << 20

Method = Literal[
    "step",
    "linear",
    "quadratic",
    "golden_ext_step",
    "golden_eq_step",
    "golden_ext_linear",
    "golden_eq_linear",
    "golden_ext_curve",
]


class MethodParams(BaseModel):
    model_config = ConfigDict(extra="forbid")

    L: float | None = None
    q: float | None = None
    side: Literal["left", "right"] | None = None
    keep_mask: list[bool] | None = None

    def as_mapping(self) -> dict[str, Any]:
        return {k: v for k, v in self.model_dump().items() if v is not None}


class InterpolateRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    method: Method
    nodes: list[tuple[float, float]]
    k0: float | None = None
    params: MethodParams = Field(default_factory=MethodParams)
    sample_count: int = 200


class ProfilePayload(BaseModel):
    """A prior interpolate response, or any equivalent sampled profile."""

    model_config = ConfigDict(extra="ignore")

    samples: list[tuple[float, float]]
    transformed_nodes: list[tuple[float, float]] | None = None
    provenance: list[str] | None = None
    nodes: list[tuple[float, float]] | None = None
    added: list[tuple[float, float]] | None = None
    hilltops: list[tuple[float, float]] = []
    method: str = ""
    params: dict[str, Any] = {}
    mirror_about: float | None = None

    def to_profile(self) -> export.ProfileExport:
        nodes: list[Node] = []
        added: list[Node] = []
        if self.nodes is not None or self.added is not None:
            nodes = [Node(x, y) for x, y in self.nodes or []]
            added = [Node(x, y) for x, y in self.added or []]
        elif self.transformed_nodes is not None:
            tags = self.provenance or [ORIGINAL] * len(self.transformed_nodes)
            for (x, y), tag in zip(self.transformed_nodes, tags):
                (nodes if tag == ORIGINAL else added).append(Node(x, y))
        profile = export.ProfileExport(
            tuple(self.samples),
            nodes=tuple(nodes),
            added=tuple(added),
            hilltops=tuple(Node(x, y) for x, y in self.hilltops),
            method=self.method,
            params=self.params,
        )
        if self.mirror_about is not None:
            profile = export.mirror(profile, self.mirror_about)
        return profile


class ObjPayload(ProfilePayload):
    axis: tuple[float, float, float]
    segments: int = 64


def create_app() -> FastAPI:
    app = FastAPI(title="goldinterp", version=__version__)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(GoldenInterpError)
    async def domain_error(_request: Request, exc: GoldenInterpError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"error": exc.code, "detail": str(exc)})

    @app.middleware("http")
    async def limit_body(request: Request, call_next):
        length = request.headers.get("content-length")
        if length is not None and int(length) > _MAX_BODY_BYTES:
            return JSONResponse(status_code=413, content={"error": "BODY_TOO_LARGE"})
        return await call_next(request)

    @app.get("/v1/health")
    async def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/v1/interpolate")
    async def interpolate(req: InterpolateRequest, m: int = Query(2, ge=2)) -> JSONResponse:
        seq = NodeSequence.from_pairs(req.nodes, req.k0)
        doc = pipeline.interpolate_response(
            seq, req.method, req.params.as_mapping(), req.sample_count, m=m
        )
        return JSONResponse(content=doc)

    @app.post("/v1/export/csv")
    async def export_csv(payload: ProfilePayload) -> PlainTextResponse:
        return PlainTextResponse(export.to_csv(payload.to_profile()), media_type="text/csv")

    @app.post("/v1/export/svg")
    async def export_svg(payload: ProfilePayload) -> PlainTextResponse:
        return PlainTextResponse(
            export.to_svg(payload.to_profile()), media_type="image/svg+xml"
        )

    @app.post("/v1/export/obj")
    async def export_obj(payload: ObjPayload) -> PlainTextResponse:
        axis = export.AxisLine(*payload.axis)
        mesh = export.revolve(payload.to_profile(), axis, payload.segments)
        return PlainTextResponse(mesh, media_type="model/obj")

    return app


app = create_app()
