"""Simple undirected graphs, degree statistics, and instance generators."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import GraphError, PreconditionError

Edge = tuple[int, int]

BIREGULAR_RESAMPLE_LIMIT = 10_000


def edge_key(u: int, v: int) -> Edge:
    """Normalize an unordered edge to (min, max) form."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on dense 0-based vertex ids.

    ``edges`` holds normalized (min, max) pairs in construction order, which
    downstream algorithms use as their deterministic processing order. The
    optional ``bipartition`` records parts (X, Y) known from construction.
    Instances are immutable; use :func:`build_graph` to validate raw input.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    bipartition: tuple[frozenset[int], frozenset[int]] | None = None

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        neighbors: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return tuple(tuple(ns) for ns in neighbors)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edge_set


@dataclass(frozen=True)
class DegreeProfile:
    """Degree statistics of a graph, with ``r`` fixed to the maximum degree.

    ``max_degree_vertices`` is the set of vertices of degree exactly ``r`` and
    ``n_r`` its cardinality; ``near_regular`` means the degree spread is at
    most one.
    """

    n: int
    max_degree: int
    min_degree: int
    r: int
    n_r: int
    max_degree_vertices: frozenset[int]
    near_regular: bool


def build_graph(
    vertex_count: int,
    edges: Iterable[Sequence[int]],
    bipartition: tuple[Iterable[int], Iterable[int]] | None = None,
) -> Graph:
    """Validate raw edge data and return an immutable :class:`Graph`.

    Rejects loops, duplicate edges, out-of-range vertex ids, and bipartitions
    that overlap, fail to cover the vertex set, or are violated by an edge.
    """
    if vertex_count < 0:
        raise GraphError(f"vertex count must be non-negative, got {vertex_count}")
    normalized: list[Edge] = []
    seen: set[Edge] = set()
    for pair in edges:
        u, v = pair
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"vertex id out of range in edge ({u}, {v})")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        e = edge_key(u, v)
        if e in seen:
            raise GraphError(f"duplicate edge {e}")
        seen.add(e)
        normalized.append(e)
    parts = None
    if bipartition is not None:
        x, y = frozenset(bipartition[0]), frozenset(bipartition[1])
        if x & y:
            raise GraphError("bipartition parts overlap")
        if x | y != set(range(vertex_count)):
            raise GraphError("bipartition must cover every vertex exactly once")
        for u, v in normalized:
            if (u in x) == (v in x):
                raise GraphError(f"edge ({u}, {v}) violates the bipartition")
        parts = (x, y)
    return Graph(vertex_count, tuple(normalized), parts)


def degree_profile(g: Graph) -> DegreeProfile:
    """Compute the degree statistics of ``g``."""
    degrees = [g.degree(v) for v in g.vertices]
    max_degree = max(degrees, default=0)
    min_degree = min(degrees, default=0)
    top = frozenset(v for v, d in enumerate(degrees) if d == max_degree)
    return DegreeProfile(
        n=g.vertex_count,
        max_degree=max_degree,
        min_degree=min_degree,
        r=max_degree,
        n_r=len(top),
        max_degree_vertices=top,
        near_regular=max_degree - min_degree <= 1,
    )


def bipartition_of(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Return a bipartition of ``g``, or None if it contains an odd cycle.

    The stored bipartition takes precedence; otherwise one is computed by
    2-coloring each component (isolated vertices land in the first part).
    """
    if g.bipartition is not None:
        return g.bipartition
    side = [-1] * g.vertex_count
    for start in g.vertices:
        if side[start] != -1:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    left = frozenset(v for v in g.vertices if side[v] == 0)
    right = frozenset(v for v in g.vertices if side[v] == 1)
    return (left, right)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise PreconditionError("complete graph needs at least one vertex")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("cycle needs at least three vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def generate_complete_bipartite(a: int, b: int) -> Graph:
    """Complete bipartite graph K_{a,b} with the bipartition recorded.

    Part X is vertices 0..a-1 (degree b each), part Y is a..a+b-1 (degree a).
    """
    if a < 1 or b < 1:
        raise PreconditionError("both part sizes must be at least 1")
    xs = range(a)
    ys = range(a, a + b)
    edges = [(x, y) for x in xs for y in ys]
    return build_graph(a + b, edges, bipartition=(xs, ys))


def generate_random_biregular(r: int, k: int, seed: int) -> Graph:
    """Random bipartite graph with (r-1)k vertices of degree r and rk of degree r-1.

    Stub-pairing (configuration model) with full resample whenever the pairing
    produces a multi-edge, capped at ``BIREGULAR_RESAMPLE_LIMIT`` attempts.
    Output is fully determined by ``seed``.
    """
    if r < 3:
        raise PreconditionError(f"degree parameter must be at least 3, got {r}")
    if k < 1:
        raise PreconditionError(f"scale must be at least 1, got {k}")
    nx, ny = (r - 1) * k, r * k
    xs = range(nx)
    ys = range(nx, nx + ny)
    left_stubs = [x for x in xs for _ in range(r)]
    right_stubs = [y for y in ys for _ in range(r - 1)]
    rng = random.Random(seed)
    for _ in range(BIREGULAR_RESAMPLE_LIMIT):
        rng.shuffle(right_stubs)
        pairs = list(zip(left_stubs, right_stubs))
        if len(set(pairs)) == len(pairs):
            return build_graph(nx + ny, pairs, bipartition=(xs, ys))
    raise GraphError(
        f"no simple stub pairing found after {BIREGULAR_RESAMPLE_LIMIT} attempts "
        f"(r={r}, k={k}, seed={seed})"
    )


def generate_regular_class1(r: int, kind: str = "bipartite") -> Graph:
    """An r-regular Class-1 graph: K_{r,r} by default, K_{r+1} for even r+1."""
    if r < 3:
        raise PreconditionError(f"degree parameter must be at least 3, got {r}")
    if kind == "bipartite":
        return generate_complete_bipartite(r, r)
    if kind == "complete":
        if (r + 1) % 2:
            raise PreconditionError(
                f"complete graph on {r + 1} vertices is not Class 1; need r odd"
            )
        return complete_graph(r + 1)
    raise PreconditionError(f"unsupported family kind {kind!r}")
