"""FastAPI application exposing the window-combinatorics operations.

Run with:  uvicorn qbps.service.app:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..bps import PreconditionError
from . import handlers
from . import models as m

app = FastAPI(
    title="qbps",
    description="Exact combinatorics of quasi-BPS windows for symmetric quivers",
    version="0.1.0",
)


def _run(fn, req):
    try:
        return fn(req)
    except PreconditionError as exc:
        raise HTTPException(status_code=409, detail=str(exc)) from exc
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/quiver/describe", response_model=m.DescribeResponse)
def describe(req: m.DescribeRequest):
    return _run(handlers.describe, req)


@app.post("/quiver/build", response_model=m.BuildResponse)
def build(req: m.BuildRequest):
    return _run(handlers.build, req)


@app.post("/generators", response_model=m.GeneratorsResponse)
def generators(req: m.GeneratorsRequest):
    return _run(handlers.generators, req)


@app.post("/decompose", response_model=m.DecomposeResponse)
def decompose(req: m.DecomposeRequest):
    return _run(handlers.decompose, req)


@app.post("/sod/framed", response_model=m.SodResponse)
def sod_framed(req: m.FramedSodRequest):
    return _run(handlers.sod_framed, req)


@app.post("/sod/unframed", response_model=m.SodResponse)
def sod_unframed(req: m.UnframedSodRequest):
    return _run(handlers.sod_unframed, req)


@app.post("/sod/preprojective", response_model=m.SodResponse)
def sod_preprojective(req: m.PreprojectiveSodRequest):
    return _run(handlers.sod_preprojective, req)


@app.post("/zonotope", response_model=m.ZonotopeResponse)
def zonotope(req: m.ZonotopeRequest):
    return _run(handlers.zonotope, req)


@app.post("/check/good-weight", response_model=m.GoodWeightResponse)
def good_weight(req: m.GoodWeightRequest):
    return _run(handlers.good_weight, req)


@app.post("/check/support")
def support(req: m.SupportRequest):
    return _run(handlers.support, req)


@app.post("/check/structure")
def structure(req: m.StructureRequest):
    return _run(handlers.structure, req)


@app.post("/check/knorrer", response_model=m.KnorrerResponse)
def knorrer(req: m.KnorrerRequest):
    return _run(handlers.knorrer, req)


@app.post("/verify", response_model=m.VerifyResponse)
def verify(req: m.VerifyRequest):
    return _run(handlers.verify, req)
