"""Executable checks of the structure theorems over the generator corpus.

Every suite runs the un-pruned enumeration, so the screening algorithm
itself is the oracle that validates the bounds.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import generators
from .graph_core import Graph, bipartition, bridges, is_cubic
from .graph_io import emit_graph6
from .matching import brute_force_maximum_matching, maximum_matching
from .search import (
    candidate_from_bridge,
    candidate_from_triangle,
    enumerate_smallest,
    is_anti_kekule,
)

SUITES = (
    "bounds",
    "bipartite",
    "bridged",
    "fullerene46",
    "fullerene36",
    "torus",
    "matching-oracle",
)


@dataclass(frozen=True)
class VerifyRow:
    family: str
    n: int
    value: str
    ok: bool
    graph6: str


def _ak(g: Graph) -> int:
    report = enumerate_smallest(g, prune=False)
    assert report.ak is not None
    return report.ak


def run_suite(suite: str, max_n: int = 16, seeds: int = 0) -> list[VerifyRow]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    rows: list[VerifyRow] = []
    for spec, g in generators.corpus(max_n, seeds):
        row = _check(suite, spec, g)
        if row is not None:
            rows.append(row)
    return rows


def _check(suite: str, spec, g: Graph) -> VerifyRow | None:
    label = spec.label()
    g6 = emit_graph6(g)
    if suite == "bounds":
        if not is_cubic(g) or bridges(g):
            return None
        ak = _ak(g)
        return VerifyRow(label, g.n, f"ak={ak}", 3 <= ak <= 4, g6)
    if suite == "bipartite":
        if not is_cubic(g) or not bipartition(g).is_bipartite:
            return None
        ak = _ak(g)
        return VerifyRow(label, g.n, f"ak={ak}", ak == 4, g6)
    if suite == "bridged":
        if not bridges(g):
            return None
        ak = _ak(g)
        ok = ak <= 2
        if ak >= 1:
            cand = candidate_from_bridge(g)
            ok = ok and is_anti_kekule(g, cand.edges)
        return VerifyRow(label, g.n, f"ak={ak}", ok, g6)
    if suite == "fullerene46":
        if spec.family != "tube46":
            return None
        ak = _ak(g)
        return VerifyRow(label, g.n, f"ak={ak}", ak == 4, g6)
    if suite == "fullerene36":
        if spec.family != "t36":
            return None
        ak = _ak(g)
        cand = candidate_from_triangle(g)
        ok = ak == 3 and cand is not None and len(cand.edges) == 3
        ok = ok and is_anti_kekule(g, cand.edges)
        return VerifyRow(label, g.n, f"ak={ak}", ok, g6)
    if suite == "torus":
        if spec.family not in ("torus_hex", "klein_hex"):
            return None
        ak = _ak(g)
        return VerifyRow(label, g.n, f"ak={ak}", ak == 4, g6)
    if suite == "matching-oracle":
        if g.n > 12 or g.m > 30:
            return None
        fast = maximum_matching(g).size
        slow = brute_force_maximum_matching(g).size
        return VerifyRow(label, g.n, f"{fast}|{slow}", fast == slow, g6)
    raise AssertionError(suite)
