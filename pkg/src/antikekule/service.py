"""FastAPI surface over the library.

Run with ``uvicorn antikekule.service:app``.  The bundled CLI talks to this
app in-process, so no server needs to be running for command-line use.
"""

from __future__ import annotations

from typing import Literal

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import generators, verify
from .errors import (
    DisconnectedGraphError,
    FormatError,
    GraphBuildError,
    NonCubicError,
    SizeGuardError,
)
from .graph_core import Graph
from .graph_io import emit_dot, emit_edgelist, emit_graph6, parse_edgelist, parse_graph6
from .matching import maximum_matching, tutte_witness
from .search import enumerate_smallest, report_document

app = FastAPI(title="antikekule", version="0.1.0")


class GraphPayload(BaseModel):
    data: str
    format: Literal["auto", "graph6", "edgelist"] = "auto"


class GenerateRequest(BaseModel):
    family: str
    params: list[int] = Field(default_factory=list)
    seed: int | None = None
    format: Literal["graph6", "edgelist"] = "graph6"


class GenerateResponse(BaseModel):
    graph: str
    n: int
    m: int


class AkRequest(BaseModel):
    graph: GraphPayload
    prune: bool = True
    k_max: int = 6
    jobs: int | None = None


class AkResponse(BaseModel):
    n: int
    m: int
    cubic: bool
    bipartite: bool
    bridge_count: int
    ak: int | None
    sets: list[list[list[int]]]
    subsets_screened: int
    pruning_used: bool
    elapsed_ms: float
    complete: bool


class MatchRequest(BaseModel):
    graph: GraphPayload


class TutteWitnessModel(BaseModel):
    u: list[int]
    odd_components: int


class MatchResponse(BaseModel):
    size: int
    perfect: bool
    pairs: list[list[int]]
    tutte_witness: TutteWitnessModel | None = None


class ConvertRequest(BaseModel):
    graph: GraphPayload
    to: Literal["graph6", "edgelist", "dot"]


class ConvertResponse(BaseModel):
    graph: str


class VerifyRequest(BaseModel):
    suite: str
    max_n: int = 16
    seeds: int = 0


class VerifyRowModel(BaseModel):
    family: str
    n: int
    value: str
    ok: bool
    graph6: str


class VerifyResponse(BaseModel):
    passed: bool
    rows: list[VerifyRowModel]


def _error(code: str, message: str) -> HTTPException:
    return HTTPException(status_code=400, detail={"code": code, "message": message})


def _load_graph(payload: GraphPayload) -> Graph:
    text = payload.data
    fmt = payload.format
    if fmt == "auto":
        stripped = text.lstrip()
        fmt = "edgelist" if stripped[:1].isdigit() else "graph6"
    try:
        if fmt == "edgelist":
            return parse_edgelist(text)
        return parse_graph6(text.strip())
    except (FormatError, GraphBuildError) as exc:
        raise _error("parse", str(exc)) from exc


def _emit(g: Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return emit_edgelist(g)
    if fmt == "dot":
        return emit_dot(g)
    return emit_graph6(g) + "\n"


@app.post("/generate", response_model=GenerateResponse)
def generate(req: GenerateRequest) -> GenerateResponse:
    spec = generators.FamilySpec(req.family, tuple(req.params), req.seed)
    try:
        g = generators.generate(spec)
    except (ValueError, RuntimeError) as exc:
        raise _error("generate", str(exc)) from exc
    return GenerateResponse(graph=_emit(g, req.format), n=g.n, m=g.m)


@app.post("/ak", response_model=AkResponse)
def ak(req: AkRequest) -> AkResponse:
    g = _load_graph(req.graph)
    try:
        report = enumerate_smallest(g, prune=req.prune, k_max=req.k_max, jobs=req.jobs)
    except DisconnectedGraphError as exc:
        raise _error("disconnected", str(exc)) from exc
    except NonCubicError as exc:
        raise _error("non_cubic", str(exc)) from exc
    return AkResponse(**report_document(g, report))


@app.post("/match", response_model=MatchResponse)
def match(req: MatchRequest) -> MatchResponse:
    g = _load_graph(req.graph)
    matching = maximum_matching(g)
    perfect = g.n % 2 == 0 and matching.size == g.n // 2
    witness = None
    if not perfect and g.n <= 16:
        try:
            w = tutte_witness(g)
        except SizeGuardError:
            w = None
        if w is not None:
            witness = TutteWitnessModel(u=list(w.u), odd_components=w.odd_components)
    return MatchResponse(
        size=matching.size,
        perfect=perfect,
        pairs=[list(g.edges[e]) for e in matching.edges],
        tutte_witness=witness,
    )


@app.post("/convert", response_model=ConvertResponse)
def convert(req: ConvertRequest) -> ConvertResponse:
    g = _load_graph(req.graph)
    return ConvertResponse(graph=_emit(g, req.to))


@app.post("/verify", response_model=VerifyResponse)
def run_verify(req: VerifyRequest) -> VerifyResponse:
    try:
        rows = verify.run_suite(req.suite, max_n=req.max_n, seeds=req.seeds)
    except ValueError as exc:
        raise _error("verify", str(exc)) from exc
    models = [VerifyRowModel(**vars(r)) for r in rows]
    return VerifyResponse(passed=all(r.ok for r in rows), rows=models)
