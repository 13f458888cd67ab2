"""Deterministic constructors for the cubic graph families under study.

Covers the named small graphs, the triangle-capped tube family t36(n),
the quadrangle-capped tube family tube46(n), hexagonal lattices on the
torus and Klein bottle, two gadgets (one bridged, one with no perfect
matching) and seeded random cubic graphs via the pairing model.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .graph_core import Graph, build

FAMILIES = (
    "k4",
    "k33",
    "cube",
    "petersen",
    "prism",
    "t36",
    "tube46",
    "torus_hex",
    "klein_hex",
    "bridged_double_gadget",
    "no_pm_gadget",
    "random_cubic",
)

_ARITY = {
    "k4": 0,
    "k33": 0,
    "cube": 0,
    "petersen": 0,
    "prism": 0,
    "t36": 1,
    "tube46": 1,
    "torus_hex": 2,
    "klein_hex": 2,
    "bridged_double_gadget": 0,
    "no_pm_gadget": 0,
    "random_cubic": 1,
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()
    seed: int | None = None

    def label(self) -> str:
        s = self.family
        if self.params:
            s += "(" + ",".join(str(p) for p in self.params) + ")"
        if self.seed is not None:
            s += f"@{self.seed}"
        return s


def _k4() -> Graph:
    return build(4, list(combinations(range(4), 2)))


def _k33() -> Graph:
    return build(6, [(u, v) for u in (0, 1, 2) for v in (3, 4, 5)])


def _cube() -> Graph:
    # vertices are 3-bit labels; edges flip one bit
    pairs = []
    for v in range(8):
        for bit in (1, 2, 4):
            u = v ^ bit
            if v < u:
                pairs.append((v, u))
    return build(8, pairs)


def _petersen() -> Graph:
    pairs = [(i, (i + 1) % 5) for i in range(5)]
    pairs += [(i, i + 5) for i in range(5)]
    pairs += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build(10, pairs)


def _prism() -> Graph:
    pairs = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    return build(6, pairs)


def _t36(n: int) -> Graph:
    """Triangle-capped tube on 4n + 4 vertices.

    Each cap is two triangles sharing an edge; the cap exits at its two
    degree-2 vertices.  Intermediate layers are 4-cycles attached at
    opposite vertices, which keeps the triangle count at exactly 4.
    """
    if n < 1:
        raise ValueError("t36 requires n >= 1")
    pairs: list[tuple[int, int]] = []
    # cap: a=base, b=base+1 shared edge; c=base+2, d=base+3 exits
    def cap(base: int) -> tuple[int, int]:
        a, b, c, d = base, base + 1, base + 2, base + 3
        pairs.extend([(a, b), (a, c), (b, c), (a, d), (b, d)])
        return c, d

    exit1, exit2 = cap(0)
    nxt = 4
    for _ in range(n - 1):
        w, x, y, z = nxt, nxt + 1, nxt + 2, nxt + 3
        pairs.extend([(w, x), (x, y), (y, z), (z, w)])
        pairs.extend([(exit1, w), (exit2, y)])
        exit1, exit2 = x, z
        nxt += 4
    c2, d2 = cap(nxt)
    pairs.extend([(exit1, c2), (exit2, d2)])
    return build(4 * n + 4, pairs)


def _tube46(n: int) -> Graph:
    """Quadrangle-capped hexagonal tube on 8 + 6n vertices.

    Two hub vertices, each adjacent to alternating vertices of its end
    ring; n + 1 rings of six in total, with three vertical edges between
    consecutive rings at alternating positions.  tube46(0) is the cube.
    """
    if n < 0:
        raise ValueError("tube46 requires n >= 0")
    rings = n + 1
    hub_a = 0
    ring = lambda j, i: 1 + 6 * j + (i % 6)
    hub_b = 1 + 6 * rings
    pairs: list[tuple[int, int]] = []
    pairs.extend((hub_a, ring(0, i)) for i in (0, 2, 4))
    for j in range(rings):
        pairs.extend((ring(j, i), ring(j, i + 1)) for i in range(6))
    for j in range(rings - 1):
        pairs.extend((ring(j, p), ring(j + 1, p)) for p in range(6) if p % 2 == (j + 1) % 2)
    pairs.extend((hub_b, ring(rings - 1, p)) for p in range(6) if p % 2 == rings % 2)
    norm = [(min(u, v), max(u, v)) for u, v in pairs]
    return build(8 + 6 * n, norm)


def _hex_lattice(p: int, q: int, klein: bool) -> Graph:
    """Brick-wall hexagonal lattice on 2pq vertices.

    Cells (i, j) each hold a pair (s = 0, 1); the torus wraps both axes,
    the Klein bottle reverses the j axis on the i wrap.
    """
    if p < 2 or q < 2:
        raise ValueError("hexagonal lattices require p >= 2 and q >= 2")
    vid = lambda i, j, s: (i * q + j) * 2 + s
    pairs = []
    for i in range(p):
        for j in range(q):
            pairs.append((vid(i, j, 1), vid(i, j, 0)))
            pairs.append((vid(i, j, 1), vid(i, (j + 1) % q, 0)))
            i2 = (i + 1) % p
            j2 = j if (i + 1 < p or not klein) else q - 1 - j
            pairs.append((vid(i, j, 1), vid(i2, j2, 0)))
    norm = [(min(u, v), max(u, v)) for u, v in pairs]
    return build(2 * p * q, norm)


def _subdivided_k4(base: int, pairs: list[tuple[int, int]]) -> int:
    """K4 with one edge subdivided; returns the degree-2 vertex id."""
    a, b, c, d, s = range(base, base + 5)
    pairs.extend([(a, b), (a, c), (a, d), (b, c), (b, d), (c, s), (d, s)])
    return s


def _no_pm_gadget() -> Graph:
    pairs: list[tuple[int, int]] = []
    stubs = [_subdivided_k4(5 * i, pairs) for i in range(3)]
    hub = 15
    pairs.extend((hub, s) for s in stubs)
    return build(16, pairs)


def _bridged_double_gadget() -> Graph:
    pairs: list[tuple[int, int]] = []
    s1 = _subdivided_k4(0, pairs)
    s2 = _subdivided_k4(5, pairs)
    pairs.append((s1, s2))
    return build(10, pairs)


def _random_cubic(n: int, seed: int, budget: int = 10_000) -> Graph:
    """Pairing-model cubic graph; rejects loops, multi-edges, disconnection."""
    if n < 4 or n % 2 != 0:
        raise ValueError("random_cubic requires even n >= 4")
    rng = random.Random(seed)
    from .graph_core import is_connected  # local import avoids a cycle at module load

    for _ in range(budget):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        pairs = []
        ok = True
        seen = set()
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            key = (min(u, v), max(u, v))
            if key in seen:
                ok = False
                break
            seen.add(key)
            pairs.append(key)
        if not ok:
            continue
        g = build(n, sorted(pairs))
        if is_connected(g):
            return g
    raise RuntimeError(f"random_cubic(n={n}, seed={seed}): retry budget exhausted")


def generate(spec: FamilySpec) -> Graph:
    if spec.family not in _ARITY:
        raise ValueError(f"unknown family {spec.family!r}")
    if len(spec.params) != _ARITY[spec.family]:
        raise ValueError(
            f"{spec.family} takes {_ARITY[spec.family]} parameter(s), got {len(spec.params)}"
        )
    f, p = spec.family, spec.params
    if f == "k4":
        return _k4()
    if f == "k33":
        return _k33()
    if f == "cube":
        return _cube()
    if f == "petersen":
        return _petersen()
    if f == "prism":
        return _prism()
    if f == "t36":
        return _t36(p[0])
    if f == "tube46":
        return _tube46(p[0])
    if f == "torus_hex":
        return _hex_lattice(p[0], p[1], klein=False)
    if f == "klein_hex":
        return _hex_lattice(p[0], p[1], klein=True)
    if f == "bridged_double_gadget":
        return _bridged_double_gadget()
    if f == "no_pm_gadget":
        return _no_pm_gadget()
    if f == "random_cubic":
        if spec.seed is None:
            raise ValueError("random_cubic requires a seed")
        return _random_cubic(p[0], spec.seed)
    raise AssertionError(f)


def corpus(max_n: int, seeds: int = 0) -> list[tuple[FamilySpec, Graph]]:
    """All family members with n <= max_n plus seeded random cubic graphs."""
    if max_n < 8:
        raise ValueError("corpus requires max_n >= 8")
    specs: list[FamilySpec] = []
    fixed = [("k4", 4), ("k33", 6), ("prism", 6), ("cube", 8), ("petersen", 10)]
    specs.extend(FamilySpec(f) for f, n in fixed if n <= max_n)
    i = 1
    while 4 * i + 4 <= max_n:
        specs.append(FamilySpec("t36", (i,)))
        i += 1
    i = 0
    while 8 + 6 * i <= max_n:
        specs.append(FamilySpec("tube46", (i,)))
        i += 1
    for fam in ("torus_hex", "klein_hex"):
        for p in range(2, max_n):
            for q in range(p, max_n):
                if 2 * p * q <= max_n:
                    specs.append(FamilySpec(fam, (p, q)))
    if 10 <= max_n:
        specs.append(FamilySpec("bridged_double_gadget"))
    if 16 <= max_n:
        specs.append(FamilySpec("no_pm_gadget"))
    for n in range(4, max_n + 1, 2):
        for s in range(seeds):
            specs.append(FamilySpec("random_cubic", (n,), seed=1000 * n + s))
    return [(spec, generate(spec)) for spec in specs]
