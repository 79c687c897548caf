"""Text serialization of graphs: graph6 (n <= 62) and plain edge lists."""

from __future__ import annotations

from .errors import GraphError
from .graph import Graph, build_graph

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_VERTICES = 62


def _upper_triangle_pairs(n: int):
    # Column-major order of the strict upper triangle: the graph6 bit layout.
    for j in range(1, n):
        for i in range(j):
            yield (i, j)


def parse_graph6(text: str) -> Graph:
    """Decode a single-line graph6 string (single-byte size, n <= 62)."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise GraphError("empty graph6 string")
    head = ord(s[0])
    if head == 126:
        raise GraphError("multi-byte graph6 sizes (n > 62) are not supported")
    if not 63 <= head <= 63 + GRAPH6_MAX_VERTICES:
        raise GraphError(f"malformed graph6 length byte {s[0]!r}")
    n = head - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = s[1:]
    if len(payload) < nbytes:
        raise GraphError(f"truncated graph6 payload: need {nbytes} bytes, got {len(payload)}")
    if len(payload) > nbytes:
        raise GraphError("trailing data after graph6 payload")
    bits: list[int] = []
    for ch in payload:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise GraphError(f"invalid graph6 payload byte {ch!r}")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphError("non-canonical graph6 padding bits")
    edges = [pair for pair, bit in zip(_upper_triangle_pairs(n), bits) if bit]
    return build_graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` as a canonical graph6 string (no header)."""
    n = g.vertex_count
    if n > GRAPH6_MAX_VERTICES:
        raise GraphError(f"graph6 output supports at most {GRAPH6_MAX_VERTICES} vertices, got {n}")
    present = g.edge_set
    bits = [1 if pair in present else 0 for pair in _upper_triangle_pairs(n)]
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + n)]
    for pos in range(0, len(bits), 6):
        val = 0
        for bit in bits[pos:pos + 6]:
            val = (val << 1) | bit
        out.append(chr(63 + val))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain text format: header "n m" then m pairs "u v".

    Tokens may be separated by any whitespace; the edge count must match the
    header exactly.
    """
    tokens = text.split()
    if len(tokens) < 2:
        raise GraphError("edge list needs an 'n m' header")
    try:
        values = [int(tok) for tok in tokens]
    except ValueError as exc:
        raise GraphError(f"non-integer token in edge list: {exc}") from None
    n, m = values[0], values[1]
    if m < 0:
        raise GraphError(f"negative edge count {m}")
    if len(values) != 2 + 2 * m:
        raise GraphError(
            f"header promises {m} edges but body has {(len(values) - 2) / 2:g} pairs"
        )
    pairs = [(values[2 + 2 * i], values[3 + 2 * i]) for i in range(m)]
    return build_graph(n, pairs)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
