"""FastAPI app: POST /<command> with the request model as body."""
from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import SCHEMA, __version__
from ..lattice import LatticeError
from ..partitions import PartitionError
from ..quiver import QuiverError
from . import handlers
from .schemas import (AntichainRequest, AuslanderRequest, CoxeterRequest, HomRequest,
                      LatticeRequest, OrbitRequest, Payload, PresentationRequest,
                      ResolveRequest, VerifyRequest)

app = FastAPI(title="fcy", version=__version__)

USER_ERRORS = (LatticeError, PartitionError, QuiverError, ValueError)


def _run(command: str, req) -> dict:
    try:
        return handlers.dispatch(command, **req.model_dump())
    except USER_ERRORS as e:
        raise HTTPException(status_code=400, detail=str(e)) from None


@app.get("/health")
def health():
    return {"schema": SCHEMA, "status": "ok", "version": __version__}


@app.post("/lattice", response_model=Payload, response_model_by_alias=True)
def lattice(req: LatticeRequest):
    return _run("lattice", req)


@app.post("/antichain", response_model=Payload, response_model_by_alias=True)
def antichain(req: AntichainRequest):
    return _run("antichain", req)


@app.post("/resolve", response_model=Payload, response_model_by_alias=True)
def resolve(req: ResolveRequest):
    return _run("resolve", req)


@app.post("/hom", response_model=Payload, response_model_by_alias=True)
def hom(req: HomRequest):
    return _run("hom", req)


@app.post("/orbit", response_model=Payload, response_model_by_alias=True)
def orbit(req: OrbitRequest):
    return _run("orbit", req)


@app.post("/coxeter", response_model=Payload, response_model_by_alias=True)
def coxeter(req: CoxeterRequest):
    return _run("coxeter", req)


@app.post("/presentation", response_model=Payload, response_model_by_alias=True)
def presentation(req: PresentationRequest):
    return _run("presentation", req)


@app.post("/auslander", response_model=Payload, response_model_by_alias=True)
def auslander(req: AuslanderRequest):
    return _run("auslander", req)


@app.post("/verify", response_model=Payload, response_model_by_alias=True)
def verify(req: VerifyRequest):
    return _run("verify", req)
