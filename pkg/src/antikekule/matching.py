"""Maximum matching via blossom contraction, with no-perfect-matching
certificates (Tutte / Hall witnesses) and a brute-force oracle.

The solver is the classic O(n^3)-class array implementation: repeated
augmenting-path search with blossom bases.  Scan order is ascending edge id
and the lowest-id exposed vertex is tried first, so results are
deterministic for a fixed input.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import SizeGuardError
from .graph_core import (
    BipartitionResult,
    EdgeSet,
    Graph,
    VertexSet,
    odd_component_count,
)


@dataclass(frozen=True)
class Matching:
    edges: EdgeSet

    @property
    def size(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class TutteWitness:
    """Vertex set U with more odd components in G - U than |U|."""

    u: VertexSet
    odd_components: int


@dataclass(frozen=True)
class HallWitness:
    """Subset S of one color class with |N(S)| < |S|."""

    s: VertexSet
    neighborhood_size: int


def _popcount(x: int) -> int:
    return bin(x).count("1")


# -- core solver -------------------------------------------------------------


def _try_augment(n: int, adj, blocked: int, match: list[int], root: int) -> bool:
    """Search for an augmenting path from the exposed vertex ``root``.

    Blossoms are contracted via the ``base`` array.  Edges whose id bit is
    set in ``blocked`` are treated as absent.  Returns True and augments
    ``match`` in place if a path is found.
    """
    p = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    q = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        v = a
        while True:
            v = base[v]
            seen[v] = True
            if match[v] == -1:
                break
            v = p[match[v]]
        v = b
        while True:
            v = base[v]
            if seen[v]:
                return v
            v = p[match[v]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    while q:
        v = q.popleft()
        for to, eid in adj[v]:
            if (blocked >> eid) & 1:
                continue
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and p[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            q.append(i)
            elif p[to] == -1:
                p[to] = v
                if match[to] == -1:
                    # augment along the alternating path back to the root
                    while to != -1:
                        pv = to
                        prev = p[pv]
                        nxt = match[prev]
                        match[pv] = prev
                        match[prev] = pv
                        to = nxt
                    return True
                used[match[to]] = True
                q.append(match[to])
    return False


def _solve(g: Graph, blocked: int = 0, match: list[int] | None = None) -> list[int]:
    """Maximum matching as a partner array (-1 for exposed vertices)."""
    n = g.n
    if match is None:
        match = [-1] * n
        for eid, (u, v) in enumerate(g.edges):
            if (blocked >> eid) & 1:
                continue
            if match[u] == -1 and match[v] == -1:
                match[u] = v
                match[v] = u
    for v in range(n):
        if match[v] == -1:
            _try_augment(n, g.adj, blocked, match, v)
    return match


def _match_to_edges(g: Graph, match: list[int]) -> EdgeSet:
    return tuple(
        sorted(g.edge_id(v, match[v]) for v in range(g.n) if -1 < match[v] and v < match[v])
    )


def maximum_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching; deterministic for a fixed input."""
    return Matching(_match_to_edges(g, _solve(g)))


def has_perfect_matching(g: Graph) -> bool:
    if g.n % 2 == 1:
        return False
    match = _solve(g)
    return all(p != -1 for p in match)


def brute_force_maximum_matching(g: Graph) -> Matching:
    """Exhaustive oracle: branch on every edge in/out (with a size bound)."""
    if g.m > 30:
        raise SizeGuardError(f"brute force limited to m <= 30, got m={g.m}")
    m = g.m
    n = g.n
    edges = g.edges
    best: list[tuple[int, ...]] = [()]

    def rec(i: int, used: int, chosen: tuple[int, ...]) -> None:
        room = min(m - i, (n - _popcount(used)) // 2)
        if len(chosen) + room <= len(best[0]) and best[0] != ():
            return
        if i == m:
            if len(chosen) > len(best[0]):
                best[0] = chosen
            return
        u, v = edges[i]
        if not (used >> u) & 1 and not (used >> v) & 1:
            rec(i + 1, used | (1 << u) | (1 << v), chosen + (i,))
        rec(i + 1, used, chosen)

    rec(0, 0, ())
    return Matching(best[0])


# -- certificates ------------------------------------------------------------


def _adj_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _odd_components_masked(n: int, masks: list[int], removed: int) -> int:
    alive = ((1 << n) - 1) & ~removed
    odd = 0
    while alive:
        seed = alive & -alive
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            while frontier:
                bit = frontier & -frontier
                frontier &= frontier - 1
                nxt |= masks[bit.bit_length() - 1]
            frontier = nxt & alive & ~comp
            comp |= frontier
        alive &= ~comp
        if _popcount(comp) % 2 == 1:
            odd += 1
    return odd


def tutte_witness(g: Graph) -> TutteWitness | None:
    """First (by size, then lexicographic) U with co(G - U) > |U|, if any."""
    if g.n > 16:
        raise SizeGuardError(f"tutte_witness limited to n <= 16, got n={g.n}")
    n = g.n
    masks = _adj_masks(g)
    for size in range(n + 1):
        for u in combinations(range(n), size):
            removed = 0
            for v in u:
                removed |= 1 << v
            odd = _odd_components_masked(n, masks, removed)
            if odd > size:
                return TutteWitness(u=u, odd_components=odd)
    return None


def hall_witness(g: Graph, parts: BipartitionResult) -> HallWitness | None:
    """Violating subset of the W class per Hall's condition, if any."""
    if not parts.is_bipartite:
        raise ValueError("hall_witness requires a two-coloring")
    w, b = parts.white, parts.black
    assert w is not None and b is not None
    if min(len(w), len(b)) > 16:
        raise SizeGuardError("hall_witness limited to min class size <= 16")
    masks = _adj_masks(g)
    if len(w) != len(b):
        s = w if len(w) > len(b) else b
        nbhd = 0
        for v in s:
            nbhd |= masks[v]
        return HallWitness(s=s, neighborhood_size=_popcount(nbhd))
    for size in range(1, len(w) + 1):
        for s in combinations(w, size):
            nbhd = 0
            for v in s:
                nbhd |= masks[v]
            if _popcount(nbhd) < size:
                return HallWitness(s=s, neighborhood_size=_popcount(nbhd))
    return None


def check_odd_component_consistency(g: Graph, witness: TutteWitness) -> bool:
    """Recompute the witness inequality from scratch."""
    count = odd_component_count(g, witness.u)
    return count == witness.odd_components and count > len(witness.u)
