"""graph6 (bit-exact), plain edge-list, and DOT export.

graph6 layout: the N(n) header, then the upper-triangle adjacency bits
x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit groups,
each offset by 63.  Trailing pad bits must be zero.  Vertex order is
preserved verbatim through every format.
"""

from __future__ import annotations

from .errors import FormatError
from .graph_core import EdgeSet, Graph, build

_G6_MAX_N = 68_719_476_735  # 2^36 - 1


def _decode_n(s: str) -> tuple[int, int]:
    """Vertex count and the number of header characters consumed."""
    c0 = ord(s[0]) - 63
    if c0 < 63:
        return c0, 1
    if len(s) >= 2 and s[1] == "~":
        if len(s) < 8:
            raise FormatError("truncated graph6 vertex-count header")
        chars = s[2:8]
        consumed = 8
    else:
        if len(s) < 4:
            raise FormatError("truncated graph6 vertex-count header")
        chars = s[1:4]
        consumed = 4
    n = 0
    for ch in chars:
        n = (n << 6) | (ord(ch) - 63)
    return n, consumed


def parse_graph6(s: str) -> Graph:
    if not s:
        raise FormatError("empty graph6 string")
    for ch in s:
        if not (63 <= ord(ch) <= 126):
            raise FormatError(f"invalid graph6 character {ch!r}")
    n, consumed = _decode_n(s)
    payload = s[consumed:]
    bits = n * (n - 1) // 2
    groups = (bits + 5) // 6
    if len(payload) != groups:
        raise FormatError(
            f"graph6 payload length {len(payload)} != expected {groups} for n={n}"
        )
    value = 0
    for ch in payload:
        value = (value << 6) | (ord(ch) - 63)
    total_bits = 6 * groups
    if bits < total_bits and value & ((1 << (total_bits - bits)) - 1):
        raise FormatError("nonzero padding bits in graph6 string")
    pairs = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if (value >> (total_bits - 1 - k)) & 1:
                pairs.append((u, v))
            k += 1
    return build(n, pairs)


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n > _G6_MAX_N:
        raise ValueError(f"graph6 supports at most {_G6_MAX_N} vertices")
    if n <= 62:
        header = chr(n + 63)
    elif n <= 258047:
        header = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        header = "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    bits = n * (n - 1) // 2
    groups = (bits + 5) // 6
    value = 0
    k = 0
    for v in range(1, n):
        for u in range(v):
            value = (value << 1) | (1 if g.has_edge(u, v) else 0)
            k += 1
    value <<= 6 * groups - bits
    chars = []
    for i in range(groups):
        shift = 6 * (groups - 1 - i)
        chars.append(chr(((value >> shift) & 63) + 63))
    return header + "".join(chars)


def parse_edgelist(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"malformed header line {lines[0]!r}; expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"malformed header line {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise FormatError(f"edge count mismatch: header says {m}, found {len(lines) - 1}")
    pairs = []
    for ln in lines[1:]:
        tok = ln.split()
        if len(tok) != 2:
            raise FormatError(f"malformed edge line {ln!r}")
        try:
            pairs.append((int(tok[0]), int(tok[1])))
        except ValueError as exc:
            raise FormatError(f"malformed edge line {ln!r}") from exc
    return build(n, pairs)


def emit_edgelist(g: Graph) -> str:
    pairs = sorted((min(u, v), max(u, v)) for u, v in g.edges)
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in pairs)
    return "\n".join(out) + "\n"


def emit_dot(g: Graph, highlight: EdgeSet = ()) -> str:
    bold = set(highlight)
    out = ["graph G {"]
    for v in range(g.n):
        out.append(f"  {v};")
    for eid, (u, v) in enumerate(g.edges):
        style = " [style=bold]" if eid in bold else ""
        out.append(f"  {u} -- {v}{style};")
    out.append("}")
    return "\n".join(out) + "\n"
