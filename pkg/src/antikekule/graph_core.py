"""Immutable simple undirected graphs with stable integer edge ids.

Vertices are dense 0-based integers; edge id k refers to the k-th pair in
construction order, forever.  All operations are pure functions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import DisconnectedGraphError, GraphBuildError

EdgeSet = tuple[int, ...]
VertexSet = tuple[int, ...]


class Graph:
    """Simple undirected graph; immutable after construction."""

    __slots__ = ("n", "edges", "adj", "_pair_to_id")

    def __init__(self, n: int, pairs) -> None:
        if n < 0:
            raise GraphBuildError("vertex count must be non-negative")
        edges: list[tuple[int, int]] = []
        pair_to_id: dict[tuple[int, int], int] = {}
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphBuildError(f"endpoint out of range: ({u}, {v}) with n={n}")
            if u == v:
                raise GraphBuildError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in pair_to_id:
                raise GraphBuildError(f"duplicate edge {key}")
            eid = len(edges)
            pair_to_id[key] = eid
            edges.append(key)
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "adj", tuple(tuple(a) for a in adj))
        object.__setattr__(self, "_pair_to_id", pair_to_id)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edge_id(self, u: int, v: int) -> int:
        """Edge id for the pair {u, v}; KeyError if absent."""
        return self._pair_to_id[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._pair_to_id

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __reduce__(self):
        return (Graph, (self.n, self.edges))


@dataclass(frozen=True)
class BipartitionResult:
    """Either a proper two-coloring or an odd-cycle witness."""

    white: VertexSet | None = None
    black: VertexSet | None = None
    odd_cycle: VertexSet | None = None

    @property
    def is_bipartite(self) -> bool:
        return self.odd_cycle is None


def build(n: int, pairs) -> Graph:
    """Construct a simple graph; construction order defines edge ids."""
    return Graph(n, pairs)


def is_cubic(g: Graph) -> bool:
    return all(len(a) == 3 for a in g.adj)


def edge_mask(removed) -> int:
    """Bitmask over edge ids for the given iterable of ids."""
    mask = 0
    for e in removed:
        mask |= 1 << e
    return mask


def _connected_masked(g: Graph, blocked: int) -> bool:
    n = g.n
    if n <= 1:
        return True
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    count = 1
    adj = g.adj
    while stack:
        v = stack.pop()
        for u, eid in adj[v]:
            if (blocked >> eid) & 1 or seen[u]:
                continue
            seen[u] = 1
            count += 1
            stack.append(u)
    return count == n


def is_connected(g: Graph, removed: EdgeSet = ()) -> bool:
    """True iff G - removed has one component; vacuous for n <= 1."""
    return _connected_masked(g, edge_mask(removed))


def components(g: Graph, removed_vertices: VertexSet = ()) -> list[VertexSet]:
    """Connected components of the subgraph induced on V - removed_vertices."""
    gone = set(removed_vertices)
    seen = set(gone)
    out: list[VertexSet] = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        q = deque([start])
        while q:
            v = q.popleft()
            for u, _ in g.adj[v]:
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
                    q.append(u)
        out.append(tuple(sorted(comp)))
    return out


def odd_component_count(g: Graph, removed_vertices: VertexSet = ()) -> int:
    return sum(1 for c in components(g, removed_vertices) if len(c) % 2 == 1)


def bridges(g: Graph) -> EdgeSet:
    """Edges whose removal disconnects their component (iterative low-link)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out: list[int] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        # stack entries: (vertex, parent edge id, adjacency iterator index)
        stack = [(root, -1, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, pe, i = stack[-1]
            if i < len(g.adj[v]):
                stack[-1] = (v, pe, i + 1)
                u, eid = g.adj[v][i]
                if eid == pe:
                    continue
                if disc[u] == -1:
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, eid, 0))
                else:
                    low[v] = min(low[v], disc[u])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        out.append(pe)
    return tuple(sorted(out))


def boundary(g: Graph, x: VertexSet) -> EdgeSet:
    """Edges with exactly one endpoint in X."""
    inside = set(x)
    return tuple(
        eid for eid, (u, v) in enumerate(g.edges) if (u in inside) != (v in inside)
    )


def bipartition(g: Graph) -> BipartitionResult:
    """Two-coloring of a connected graph, or an odd-cycle witness."""
    n = g.n
    if n == 0:
        return BipartitionResult(white=(), black=())
    color = [-1] * n
    parent = [-1] * n
    color[0] = 0
    q = deque([0])
    reached = 1
    while q:
        v = q.popleft()
        for u, _ in g.adj[v]:
            if color[u] == -1:
                color[u] = 1 - color[v]
                parent[u] = v
                reached += 1
                q.append(u)
            elif color[u] == color[v]:
                return BipartitionResult(odd_cycle=_odd_cycle(parent, v, u))
    if reached != n:
        raise DisconnectedGraphError("bipartition requires a connected graph")
    white = tuple(v for v in range(n) if color[v] == 0)
    black = tuple(v for v in range(n) if color[v] == 1)
    return BipartitionResult(white=white, black=black)


def _odd_cycle(parent: list[int], v: int, u: int) -> VertexSet:
    """Odd cycle through the conflict edge (v, u) in the BFS tree."""
    pv, pu = [v], [u]
    while parent[pv[-1]] != -1:
        pv.append(parent[pv[-1]])
    while parent[pu[-1]] != -1:
        pu.append(parent[pu[-1]])
    on_pv = {x: i for i, x in enumerate(pv)}
    j = 0
    while pu[j] not in on_pv:
        j += 1
    lca = pu[j]
    cycle = pv[: on_pv[lca] + 1] + pu[:j][::-1]
    return tuple(cycle)
