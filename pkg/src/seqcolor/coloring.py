"""Proper edge colorings: verification, constructors, exact chromatic index."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CapExceededError,
    ClassTwoError,
    GraphError,
    OversizeError,
    PreconditionError,
    UnknownClassError,
)
from .graph import Edge, Graph, bipartition_of, degree_profile, edge_key

EXHAUSTIVE_EDGE_LIMIT = 20


@dataclass(frozen=True)
class EdgeColoring:
    """Total assignment of colors from {1..color_count} to a host graph's edges.

    Keys of ``assignment`` are normalized (min, max) edges. Instances are
    treated as immutable values; algorithms build fresh dicts and wrap them.
    """

    assignment: dict[Edge, int]
    color_count: int

    def color_of(self, u: int, v: int) -> int:
        return self.assignment[edge_key(u, v)]


@dataclass(frozen=True)
class Verdict:
    """Boolean check outcome plus the witnesses of every violation found."""

    ok: bool
    violations: tuple

    def __bool__(self) -> bool:
        return self.ok


def _require_total(g: Graph, coloring: EdgeColoring) -> None:
    missing = [e for e in g.edges if e not in coloring.assignment]
    if missing:
        raise PreconditionError(
            f"coloring does not cover {len(missing)} edge(s), e.g. {missing[:3]}"
        )


def verify_proper(g: Graph, coloring: EdgeColoring) -> Verdict:
    """Check that no two edges sharing a vertex carry the same color.

    Each violation is reported once as a (vertex, color) clash at the shared
    vertex, in ascending vertex then color order.
    """
    _require_total(g, coloring)
    violations: list[tuple[int, int]] = []
    for v in g.vertices:
        counts: dict[int, int] = {}
        for w in g.adjacency[v]:
            c = coloring.color_of(v, w)
            counts[c] = counts.get(c, 0) + 1
        violations.extend((v, c) for c in sorted(counts) if counts[c] > 1)
    return Verdict(not violations, tuple(violations))


def palette(g: Graph, coloring: EdgeColoring, v: int) -> frozenset[int]:
    """The set of colors appearing on edges incident to ``v``."""
    if not 0 <= v < g.vertex_count:
        raise GraphError(f"unknown vertex {v}")
    try:
        return frozenset(coloring.color_of(v, w) for w in g.adjacency[v])
    except KeyError as exc:
        raise PreconditionError(f"coloring misses an edge at vertex {v}: {exc}") from None


def _flip_alternating_path(col: list[dict[int, int]], start: int, first: int, second: int) -> list[int]:
    """Swap colors ``first``/``second`` along the maximal alternating path from ``start``.

    The walk leaves ``start`` on its ``first``-colored edge (if any) and
    alternates colors; properness makes it a simple path. Returns the visited
    vertices in order, ``start`` excluded.
    """
    path: list[Edge] = []
    visited: list[int] = []
    cur, want = start, first
    while True:
        nxt = next((w for w, c in col[cur].items() if c == want), None)
        if nxt is None:
            break
        path.append((cur, nxt))
        visited.append(nxt)
        cur, want = nxt, first + second - want
    for x, y in path:
        flipped = first + second - col[x][y]
        col[x][y] = flipped
        col[y][x] = flipped
    return visited


def _to_coloring(g: Graph, col: list[dict[int, int]], color_count: int) -> EdgeColoring:
    return EdgeColoring({e: col[e[0]][e[1]] for e in g.edges}, color_count)


def misra_gries(g: Graph) -> EdgeColoring:
    """Proper edge coloring with at most max_degree + 1 colors.

    Classic fan-rotation construction: for each uncolored edge (u, v) grow a
    maximal fan at u, invert one two-colored path through u, then rotate a fan
    prefix so the freed color closes the edge. Edges are processed in input
    order, so the result is deterministic.
    """
    if not g.edges:
        return EdgeColoring({}, 0)
    adj = g.adjacency
    cap = max(len(a) for a in adj) + 1
    col: list[dict[int, int]] = [dict() for _ in g.vertices]

    def is_free(v: int, c: int) -> bool:
        return c not in col[v].values()

    def smallest_free(v: int) -> int:
        used = set(col[v].values())
        return next(c for c in range(1, cap + 1) if c not in used)

    for u, v0 in g.edges:
        fan = [v0]
        in_fan = {v0}
        grown = True
        while grown:
            grown = False
            for w in adj[u]:
                cw = col[u].get(w)
                if w in in_fan or cw is None:
                    continue
                if is_free(fan[-1], cw):
                    fan.append(w)
                    in_fan.add(w)
                    grown = True
                    break
        c = smallest_free(u)
        d = smallest_free(fan[-1])
        if c != d:
            # After the swap d is free at u (c was, and the path leaves u on d).
            _flip_alternating_path(col, u, d, c)
        for i, w in enumerate(fan):
            if not is_free(w, d):
                continue
            # The prefix fan[0..i] must still be a fan under the flipped colors.
            if any(not is_free(fan[j - 1], col[u][fan[j]]) for j in range(1, i + 1)):
                continue
            for j in range(i):
                shifted = col[u][fan[j + 1]]
                col[u][fan[j]] = shifted
                col[fan[j]][u] = shifted
            col[u][w] = d
            col[w][u] = d
            break
        else:
            raise RuntimeError("internal error: no rotatable fan prefix")
    used_colors = max(c for incidence in col for c in incidence.values())
    return _to_coloring(g, col, used_colors)


def konig_color_bipartite(g: Graph) -> EdgeColoring:
    """Proper edge coloring of a bipartite graph with exactly max_degree colors.

    For each edge (u, v): take the smallest color a free at u and b free at v;
    if a clashes at v, swap a and b along the alternating path leaving v. In a
    bipartite graph that path cannot reach u, so a becomes free at both ends.
    """
    if bipartition_of(g) is None:
        raise PreconditionError("graph is not bipartite")
    if not g.edges:
        return EdgeColoring({}, 0)
    max_degree = max(len(a) for a in g.adjacency)
    col: list[dict[int, int]] = [dict() for _ in g.vertices]

    def smallest_free(v: int) -> int:
        used = set(col[v].values())
        return next(c for c in range(1, max_degree + 1) if c not in used)

    for u, v in g.edges:
        a = smallest_free(u)
        b = smallest_free(v)
        if a != b and a in col[v].values():
            on_path = _flip_alternating_path(col, v, a, b)
            assert u not in on_path, "alternating path reached the far endpoint"
        col[u][v] = a
        col[v][u] = a
    return _to_coloring(g, col, max_degree)


def _check_edge_budget(g: Graph, max_edges: int, override_size: bool) -> None:
    if g.edge_count > max_edges and not override_size:
        raise OversizeError(
            f"{g.edge_count} edges exceeds the exhaustive-search guard of {max_edges}; "
            "pass override_size=True to force"
        )


def exact_chromatic_index(
    g: Graph,
    max_colors: int | None = None,
    *,
    max_edges: int = EXHAUSTIVE_EDGE_LIMIT,
    override_size: bool = False,
) -> tuple[int, EdgeColoring]:
    """Smallest t admitting a proper t-coloring, with a witness coloring.

    Backtracking over edges sorted by descending endpoint degree sum. Color
    symmetry is broken by allowing color c+1 only once colors 1..c appear,
    which in particular pins the first edge to color 1. ``max_colors`` defaults
    to max_degree + 1 (always sufficient); if the search exhausts a smaller
    cap, :class:`CapExceededError` reports the lower bound established.
    """
    _check_edge_budget(g, max_edges, override_size)
    if not g.edges:
        return 0, EdgeColoring({}, 0)
    degree = [g.degree(v) for v in g.vertices]
    max_degree = max(degree)
    cap = max_degree + 1 if max_colors is None else max_colors
    if cap < max_degree:
        raise PreconditionError(
            f"color cap {cap} is below the trivial lower bound {max_degree}"
        )
    ordered = sorted(g.edges, key=lambda e: -(degree[e[0]] + degree[e[1]]))
    m = len(ordered)
    used = [0] * g.vertex_count
    assign = [0] * m

    def feasible(t: int, index: int, introduced: int) -> bool:
        if index == m:
            return True
        u, v = ordered[index]
        taken = used[u] | used[v]
        for c in range(1, min(t, introduced + 1) + 1):
            bit = 1 << c
            if taken & bit:
                continue
            used[u] |= bit
            used[v] |= bit
            assign[index] = c
            if feasible(t, index + 1, max(introduced, c)):
                return True
            used[u] &= ~bit
            used[v] &= ~bit
        return False

    for t in range(max_degree, cap + 1):
        if feasible(t, 0, 0):
            return t, EdgeColoring(dict(zip(ordered, assign)), t)
    raise CapExceededError(cap=cap, lower_bound=cap + 1)


def obtain_r_coloring(g: Graph) -> EdgeColoring:
    """A proper coloring with exactly max_degree colors, or a classified failure.

    Strategy, in order: bipartite graphs get the exact-max-degree constructor;
    otherwise the max_degree+1 heuristic is accepted whenever it happens to
    stay within max_degree; small leftovers go to the exact solver. Raises
    :class:`ClassTwoError` when the exact solver proves the graph needs an
    extra color and :class:`UnknownClassError` when nothing could certify the
    instance either way.
    """
    r = degree_profile(g).max_degree
    if r == 0:
        return EdgeColoring({}, 0)
    if bipartition_of(g) is not None:
        return konig_color_bipartite(g)
    heuristic = misra_gries(g)
    if heuristic.color_count <= r:
        return EdgeColoring(heuristic.assignment, r)
    if g.edge_count <= EXHAUSTIVE_EDGE_LIMIT:
        chi_prime, witness = exact_chromatic_index(g)
        if chi_prime == r:
            return witness
        raise ClassTwoError(chi_prime=chi_prime, max_degree=r)
    raise UnknownClassError(
        f"heuristic used {heuristic.color_count} colors and the graph is too large "
        f"({g.edge_count} edges) for the exact solver"
    )


def emit_coloring(coloring: EdgeColoring) -> str:
    """Exchange format: header "t=<color_count>" then one "u v c" line per edge."""
    lines = [f"t={coloring.color_count}"]
    lines.extend(f"{u} {v} {c}" for (u, v), c in sorted(coloring.assignment.items()))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> EdgeColoring:
    """Parse the "u v c" exchange format produced by :func:`emit_coloring`."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith("t="):
        raise GraphError('coloring text must start with a "t=<count>" header')
    try:
        t = int(lines[0][2:])
    except ValueError:
        raise GraphError(f"bad color count header {lines[0]!r}") from None
    if t < 0:
        raise GraphError(f"negative color count {t}")
    assignment: dict[Edge, int] = {}
    for line in lines[1:]:
        fields = line.split()
        if len(fields) != 3:
            raise GraphError(f"expected 'u v c', got {line!r}")
        try:
            u, v, c = (int(f) for f in fields)
        except ValueError:
            raise GraphError(f"non-integer field in {line!r}") from None
        if u == v:
            raise GraphError(f"loop edge in coloring line {line!r}")
        if not 1 <= c <= t:
            raise GraphError(f"color {c} outside 1..{t} in line {line!r}")
        e = edge_key(u, v)
        if e in assignment:
            raise GraphError(f"edge {e} colored twice")
        assignment[e] = c
    return EdgeColoring(assignment, t)
