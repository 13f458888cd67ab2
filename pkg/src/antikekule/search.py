"""Anti-Kekule sets of connected cubic graphs.

An edge set S is anti-Kekule when G - S stays connected but loses all
perfect matchings.  ``enumerate_smallest`` screens edge subsets in
lexicographic order, level by level, and reports every smallest set.
Theorem-derived bounds (bridges -> at most 2, bipartite -> exactly 4,
otherwise 3..4) can skip provably empty levels.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, islice
from math import comb

from .errors import DisconnectedGraphError, NonCubicError
from .graph_core import (
    EdgeSet,
    Graph,
    _connected_masked,
    bipartition,
    bridges,
    components,
    edge_mask,
    is_connected,
    is_cubic,
)
from .matching import _solve, _try_augment, has_perfect_matching


@dataclass(frozen=True)
class AntiKekuleReport:
    ak: int | None
    smallest_sets: tuple[EdgeSet, ...]
    subsets_screened: int
    pruning_used: bool
    elapsed: float
    cubic: bool = True
    complete: bool = True


@dataclass(frozen=True)
class CandidateSet:
    edges: EdgeSet
    provenance: str


def is_anti_kekule(g: Graph, s: EdgeSet) -> bool:
    """True iff G - S is connected and has no perfect matching."""
    seen = set()
    for e in s:
        if not (0 <= e < g.m):
            raise ValueError(f"edge id {e} out of range for m={g.m}")
        if e in seen:
            raise ValueError(f"duplicate edge id {e}")
        seen.add(e)
    mask = edge_mask(s)
    if not _connected_masked(g, mask):
        return False
    match = _solve(g, blocked=mask)
    return any(p == -1 for p in match) or g.n % 2 == 1


def theorem_bounds(g: Graph) -> tuple[int, int]:
    """Level bounds (k_lo, k_hi) for a connected cubic graph."""
    if not is_cubic(g):
        raise NonCubicError("theorem bounds apply to cubic graphs only")
    if not is_connected(g):
        raise DisconnectedGraphError("theorem bounds require a connected graph")
    if bridges(g):
        return (0, 2)
    if bipartition(g).is_bipartite:
        return (4, 4)
    return (3, 4)


# -- screening ---------------------------------------------------------------


def _perfect_matching_masks(g: Graph, limit: int = 8) -> list[int]:
    """Edge-id bitmasks of a few distinct perfect matchings of G.

    Used as a shortcut during screening: a subset disjoint from any stored
    perfect matching cannot be anti-Kekule.
    """
    base = _solve(g)
    if any(p == -1 for p in base):
        return []
    masks = [edge_mask(g.edge_id(v, base[v]) for v in range(g.n) if v < base[v])]
    for eid, (u, v) in enumerate(g.edges):
        if len(masks) >= limit:
            break
        if not (masks[0] >> eid) & 1:
            continue
        alt = _solve(g, blocked=1 << eid)
        if all(p != -1 for p in alt):
            mask = edge_mask(g.edge_id(w, alt[w]) for w in range(g.n) if w < alt[w])
            if mask not in masks:
                masks.append(mask)
    return masks


def _screen_combo(g: Graph, combo: tuple[int, ...], pm_masks: list[int], base_match: list[int]) -> bool:
    """True iff the subset is anti-Kekule (connectivity first, matching second)."""
    mask = 0
    for e in combo:
        mask |= 1 << e
    if not _connected_masked(g, mask):
        return False
    for pm in pm_masks:
        if not pm & mask:
            return False
    match = base_match.copy()
    for e in combo:
        u, v = g.edges[e]
        if match[u] == v:
            match[u] = -1
            match[v] = -1
    n, adj = g.n, g.adj
    for v in range(n):
        if match[v] == -1 and not _try_augment(n, adj, mask, match, v):
            return True
    return False


def _screen_range(g: Graph, k: int, lo: int, hi: int, pm_masks: list[int]) -> list[EdgeSet]:
    base_match = _solve(g)
    found = []
    for combo in islice(combinations(range(g.m), k), lo, hi):
        if _screen_combo(g, combo, pm_masks, base_match):
            found.append(combo)
    return found


def _screen_level(g: Graph, k: int, pm_masks: list[int], jobs: int, pool) -> list[EdgeSet]:
    total = comb(g.m, k)
    if jobs <= 1 or pool is None or total < 4 * jobs:
        return _screen_range(g, k, 0, total, pm_masks)
    step = -(-total // jobs)
    ranges = [(i, min(i + step, total)) for i in range(0, total, step)]
    futures = [pool.submit(_screen_range, g, k, lo, hi, pm_masks) for lo, hi in ranges]
    found: list[EdgeSet] = []
    for f in futures:
        found.extend(f.result())
    return sorted(found)


def enumerate_smallest(
    g: Graph,
    prune: bool = True,
    k_max: int = 6,
    jobs: int | None = None,
) -> AntiKekuleReport:
    """ak(G) and every smallest anti-Kekule set, by ascending-size screening.

    With ``prune`` the level range comes from ``theorem_bounds`` (cubic input
    required); without it the levels are 1, 2, ... capped at ``k_max`` (the
    report is marked incomplete if the cap is hit without success).
    """
    if jobs is None:
        jobs = int(os.environ.get("ANTIKEKULE_JOBS", "1"))
    if not is_connected(g):
        raise DisconnectedGraphError("anti-Kekule search requires a connected graph")
    cubic = is_cubic(g)
    if prune and not cubic:
        raise NonCubicError("pruned search requires a cubic graph; rerun without pruning")
    start = time.perf_counter()
    if not has_perfect_matching(g):
        return AntiKekuleReport(
            ak=0,
            smallest_sets=((),),
            subsets_screened=0,
            pruning_used=prune,
            elapsed=time.perf_counter() - start,
            cubic=cubic,
        )
    if prune:
        k_lo, k_hi = theorem_bounds(g)
        first, last = max(1, k_lo), k_hi
    else:
        first, last = 1, k_max
    pm_masks = _perfect_matching_masks(g)
    screened = 0
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for k in range(first, last + 1):
            screened += comb(g.m, k)
            found = _screen_level(g, k, pm_masks, jobs, pool)
            if found:
                return AntiKekuleReport(
                    ak=k,
                    smallest_sets=tuple(found),
                    subsets_screened=screened,
                    pruning_used=prune,
                    elapsed=time.perf_counter() - start,
                    cubic=cubic,
                )
    finally:
        if pool is not None:
            pool.shutdown()
    if prune:
        raise RuntimeError("no anti-Kekule set within theorem bounds; input violates assumptions")
    return AntiKekuleReport(
        ak=None,
        smallest_sets=(),
        subsets_screened=screened,
        pruning_used=prune,
        elapsed=time.perf_counter() - start,
        cubic=cubic,
        complete=False,
    )


# -- constructive candidates from the structure theorems ---------------------


def candidate_from_vertex(g: Graph, a: int) -> CandidateSet:
    """Edges around two neighbors of ``a`` whose removal strands ``a``'s side.

    Picks the two lowest-id neighbors b, c of a and returns the edges at b
    other than ab plus the edges at c other than ac, deduplicated.
    """
    nbrs = sorted(u for u, _ in g.adj[a])
    if len(nbrs) < 2:
        raise ValueError(f"vertex {a} needs at least two neighbors")
    b, c = nbrs[0], nbrs[1]
    for v in (a, b, c):
        if g.degree(v) < 3:
            raise ValueError(f"vertex {v} has degree < 3")
    picked = set()
    for u, eid in g.adj[b]:
        if u != a:
            picked.add(eid)
    for u, eid in g.adj[c]:
        if u != a:
            picked.add(eid)
    return CandidateSet(edges=tuple(sorted(picked)), provenance=f"neighborhood({a})")


def candidate_from_bridge(g: Graph) -> CandidateSet:
    """Two-edge candidate at the bridge with the smallest split-off side."""
    brs = bridges(g)
    if not brs:
        raise ValueError("graph has no bridge")
    if not has_perfect_matching(g):
        raise ValueError("graph has no perfect matching; ak is 0 and no candidate applies")
    best: tuple[int, int, int] | None = None  # (side size, bridge id, end in side)
    for eid in brs:
        u, v = g.edges[eid]
        side_u = _side_of(g, eid, u)
        side_v = _side_of(g, eid, v)
        for end, side in ((u, side_u), (v, side_v)):
            key = (len(side), eid, end)
            if best is None or key < best:
                best = key
    assert best is not None
    _, eid, u = best
    nbrs = sorted(w for w, e in g.adj[u] if e != eid)
    v = nbrs[0]
    picked = tuple(sorted(e for w, e in g.adj[v] if w != u))
    return CandidateSet(edges=picked, provenance="bridge_neighbor")


def _side_of(g: Graph, bridge_eid: int, end: int) -> tuple[int, ...]:
    """Vertices reachable from ``end`` in G minus the bridge."""
    seen = {end}
    stack = [end]
    while stack:
        v = stack.pop()
        for u, e in g.adj[v]:
            if e != bridge_eid and u not in seen:
                seen.add(u)
                stack.append(u)
    return tuple(sorted(seen))


def _triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for a in range(g.n):
        na = sorted(u for u, _ in g.adj[a] if u > a)
        for i, b in enumerate(na):
            for c in na[i + 1 :]:
                if g.has_edge(b, c):
                    out.append((a, b, c))
    return out


def candidate_from_triangle(g: Graph) -> CandidateSet | None:
    """Three-edge candidate from a triangle; absent if G is triangle-free.

    If two triangles share an edge, the full edge set of the (lexicographically
    first) sharing triangle is returned; otherwise, for the first triangle
    abc, the edge at a leaving the triangle, the edge at c leaving the
    triangle, and ac.
    """
    tris = _triangles(g)
    if not tris:
        return None
    edge_tris: dict[int, list[tuple[int, int, int]]] = {}
    for t in tris:
        a, b, c = t
        for x, y in ((a, b), (a, c), (b, c)):
            edge_tris.setdefault(g.edge_id(x, y), []).append(t)
    shared = sorted(
        t for ts in edge_tris.values() if len(ts) >= 2 for t in ts
    )
    if shared:
        a, b, c = shared[0]
        picked = (g.edge_id(a, b), g.edge_id(a, c), g.edge_id(b, c))
        return CandidateSet(edges=tuple(sorted(picked)), provenance="triangle")
    a, b, c = tris[0]
    e1 = min(e for u, e in g.adj[a] if u not in (b, c))
    e2 = min(e for u, e in g.adj[c] if u not in (a, b))
    picked = (e1, e2, g.edge_id(a, c))
    return CandidateSet(edges=tuple(sorted(picked)), provenance="triangle")


# -- report serialization ----------------------------------------------------


def report_document(g: Graph, report: AntiKekuleReport) -> dict:
    """External report form: endpoint pairs, not raw edge ids."""
    bip = bipartition(g).is_bipartite if is_connected(g) else False
    return {
        "n": g.n,
        "m": g.m,
        "cubic": report.cubic,
        "bipartite": bip,
        "bridge_count": len(bridges(g)),
        "ak": report.ak,
        "sets": [
            sorted([list(g.edges[e]) for e in s]) for s in report.smallest_sets
        ],
        "subsets_screened": report.subsets_screened,
        "pruning_used": report.pruning_used,
        "elapsed_ms": report.elapsed * 1000.0,
        "complete": report.complete,
    }
