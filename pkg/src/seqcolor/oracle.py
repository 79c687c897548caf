"""Exhaustive ground-truth engines for small instances.

Everything here walks the full space of proper colorings, so callers are
guarded by an edge budget (soft limit, overridable). Edge order is always the
graph's input order, keeping node counts reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import isqrt
from typing import Callable, Iterator

from .coloring import EdgeColoring, exact_chromatic_index
from .errors import CapExceededError, ClassTwoError, OversizeError, PreconditionError
from .graph import Graph, build_graph

ORACLE_EDGE_LIMIT = 20


@dataclass(frozen=True)
class OracleResult:
    """Exact optimum plus a witness coloring and search statistics.

    ``cap_stable`` records that re-running with one extra color left the
    optimum unchanged (always true for the fixed-color-count maximization).
    ``sequential_vertices`` carries the witness's sequential set when the
    oracle maximized that quantity.
    """

    value: int
    witness: EdgeColoring
    explored: int
    cap_stable: bool
    sequential_vertices: frozenset[int] | None = None

    def to_record(self, kind: str) -> dict:
        record = {
            "record": f"oracle_{kind}",
            "value": self.value,
            "explored": self.explored,
            "cap_stable": self.cap_stable,
        }
        if self.sequential_vertices is not None:
            record["sequential_vertices"] = sorted(self.sequential_vertices)
        record["t"] = self.witness.color_count
        record["witness"] = [
            f"{u} {v} {c}" for (u, v), c in sorted(self.witness.assignment.items())
        ]
        return record


def _check_budget(g: Graph, max_edges: int, override_size: bool) -> None:
    if g.edge_count > max_edges and not override_size:
        raise OversizeError(
            f"{g.edge_count} edges exceeds the exhaustive-search guard of {max_edges}; "
            "pass override_size=True to force"
        )


def enumerate_proper_colorings(
    g: Graph, color_cap: int, visitor: Callable[[dict], None]
) -> int:
    """Visit every proper coloring of ``g`` with colors from {1..color_cap}.

    The visitor receives a fresh edge->color dict per coloring. Returns the
    number of colorings visited (one for the edgeless graph: the empty
    assignment). Cost is bounded only by the caller's choice of graph and cap.
    """
    if color_cap < 0:
        raise PreconditionError(f"color cap must be non-negative, got {color_cap}")
    edges = g.edges
    m = len(edges)
    used = [0] * g.vertex_count
    assign = [0] * m
    count = 0

    def walk(index: int) -> None:
        nonlocal count
        if index == m:
            visitor(dict(zip(edges, assign)))
            count += 1
            return
        u, v = edges[index]
        taken = used[u] | used[v]
        for c in range(1, color_cap + 1):
            bit = 1 << c
            if taken & bit:
                continue
            used[u] |= bit
            used[v] |= bit
            assign[index] = c
            walk(index + 1)
            used[u] &= ~bit
            used[v] &= ~bit

    walk(0)
    return count


def _min_sum_search(
    g: Graph, color_cap: int, best_value: int, best_assign: list[int] | None
) -> tuple[int, list[int] | None, int]:
    # Branch and bound over edges in input order, colors ascending. Three
    # admissible lower bounds on the uncolored remainder, combined by max:
    # per edge, the smallest color legal at both endpoints right now; per
    # vertex, its k uncolored incident edges need k distinct colors outside
    # its palette (summed over vertices this counts every edge twice); per
    # color class, every class is a matching, so color c can absorb at most
    # floor(active/2) more edges and floor(n/2) in total, and the remainder is
    # priced by filling the cheapest colors within those capacities.
    edges = g.edges
    m = len(edges)
    n = g.vertex_count
    used = [0] * n
    pending = [0] * n
    for u, v in edges:
        pending[u] += 1
        pending[v] += 1
    matching_cap = sum(1 for v in range(n) if pending[v]) // 2
    class_count = [0] * (color_cap + 1)
    assign = [0] * m
    nodes = 0

    def remaining_bound(start: int) -> int | None:
        by_edge = 0
        for idx in range(start, m):
            u, v = edges[idx]
            taken = used[u] | used[v]
            c = 1
            while c <= color_cap and (taken >> c) & 1:
                c += 1
            if c > color_cap:
                return None
            by_edge += c
        doubled = 0
        active = 0
        for v in range(n):
            need = pending[v]
            if not need:
                continue
            active += 1
            mask = used[v]
            c = 1
            while need:
                if c > color_cap:
                    return None
                if not (mask >> c) & 1:
                    doubled += c
                    need -= 1
                c += 1
        by_class = 0
        left = m - start
        if left:
            slack = active // 2
            for c in range(1, color_cap + 1):
                room = matching_cap - class_count[c]
                if room > slack:
                    room = slack
                if room <= 0:
                    continue
                take = room if room < left else left
                by_class += c * take
                left -= take
                if not left:
                    break
            if left:
                return None
        return max(by_edge, (doubled + 1) // 2, by_class)

    def descend(index: int, partial: int) -> None:
        nonlocal best_value, best_assign, nodes
        nodes += 1
        if index == m:
            if partial < best_value:
                best_value = partial
                best_assign = assign.copy()
            return
        u, v = edges[index]
        taken = used[u] | used[v]
        pending[u] -= 1
        pending[v] -= 1
        for c in range(1, color_cap + 1):
            bit = 1 << c
            if taken & bit:
                continue
            used[u] |= bit
            used[v] |= bit
            assign[index] = c
            class_count[c] += 1
            rest = remaining_bound(index + 1)
            if rest is not None and partial + c + rest < best_value:
                descend(index + 1, partial + c)
            class_count[c] -= 1
            used[u] &= ~bit
            used[v] &= ~bit
        pending[u] += 1
        pending[v] += 1

    descend(0, 0)
    return best_value, best_assign, nodes


def exact_edge_chromatic_sum(
    g: Graph, *, max_edges: int = ORACLE_EDGE_LIMIT, override_size: bool = False
) -> OracleResult:
    """Minimum total edge color over all proper colorings of ``g``.

    The color cap starts at the chromatic index and is raised one color at a
    time until the optimum stops improving; ``cap_stable`` records that the
    final +1 re-run changed nothing. (Any coloring can be improved until every
    edge color is below deg(u)+deg(v), so the escalation always terminates.)
    """
    _check_budget(g, max_edges, override_size)
    if not g.edges:
        return OracleResult(0, EdgeColoring({}, 0), explored=0, cap_stable=True)
    chi_prime, seed = exact_chromatic_index(g, max_edges=max_edges, override_size=True)
    seed_assign = [seed.assignment[e] for e in g.edges]
    value = sum(seed_assign)
    value, best_assign, explored = _min_sum_search(g, chi_prime, value, seed_assign)
    cap = chi_prime
    while True:
        next_value, next_assign, nodes = _min_sum_search(g, cap + 1, value, best_assign)
        explored += nodes
        if next_value == value:
            break
        value, best_assign = next_value, next_assign
        cap += 1
    witness = EdgeColoring(dict(zip(g.edges, best_assign)), max(best_assign))
    return OracleResult(value, witness, explored=explored, cap_stable=True)


def exact_max_sequential_set(
    g: Graph, r: int, *, max_edges: int = ORACLE_EDGE_LIMIT, override_size: bool = False
) -> OracleResult:
    """Maximum number of sequential vertices over all proper r-colorings.

    A vertex is sequential when its incident colors are exactly 1..deg(v),
    i.e. no incident edge ever receives a color above deg(v). The search
    marks a vertex lost the moment that happens, and prunes branches whose
    surviving count cannot beat the incumbent.
    """
    _check_budget(g, max_edges, override_size)
    degree = [g.degree(v) for v in g.vertices]
    max_degree = max(degree, default=0)
    if r < max_degree:
        raise PreconditionError(
            f"no proper {r}-coloring exists: max degree is {max_degree}"
        )
    if g.edges:
        try:
            exact_chromatic_index(g, max_colors=r, max_edges=max_edges, override_size=True)
        except CapExceededError:
            raise ClassTwoError(chi_prime=r + 1, max_degree=max_degree) from None

    edges = g.edges
    m = len(edges)
    n = g.vertex_count
    used = [0] * n
    assign = [0] * m
    lost = [False] * n
    lost_count = 0
    best = -1
    best_assign: list[int] = []
    nodes = 0

    def descend(index: int) -> None:
        nonlocal best, best_assign, nodes, lost_count
        nodes += 1
        alive = n - lost_count
        if alive <= best:
            return
        if index == m:
            best = alive
            best_assign = assign.copy()
            return
        u, v = edges[index]
        taken = used[u] | used[v]
        for c in range(1, r + 1):
            bit = 1 << c
            if taken & bit:
                continue
            newly_lost = []
            for w in (u, v):
                if c > degree[w] and not lost[w]:
                    lost[w] = True
                    newly_lost.append(w)
            lost_count += len(newly_lost)
            used[u] |= bit
            used[v] |= bit
            assign[index] = c
            descend(index + 1)
            used[u] &= ~bit
            used[v] &= ~bit
            for w in newly_lost:
                lost[w] = False
            lost_count -= len(newly_lost)

    descend(0)
    witness = EdgeColoring(dict(zip(edges, best_assign)), r)
    sequential = frozenset(
        v
        for v in g.vertices
        if all(witness.color_of(v, w) <= degree[v] for w in g.adjacency[v])
    )
    assert len(sequential) == best
    return OracleResult(
        best, witness, explored=nodes, cap_stable=True, sequential_vertices=sequential
    )


def _graphs_with_degrees(degrees: list[int]) -> Iterator[tuple[tuple[int, int], ...]]:
    # All labeled simple graphs realizing the exact degree sequence, by
    # including/excluding vertex pairs in lexicographic order.
    n = len(degrees)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    remaining = list(degrees)
    chosen: list[tuple[int, int]] = []

    def extend(k: int) -> Iterator[tuple[tuple[int, int], ...]]:
        if k == len(pairs):
            if all(x == 0 for x in remaining):
                yield tuple(chosen)
            return
        i, j = pairs[k]
        if remaining[i] > n - j:
            return
        row_done = j == n - 1
        if not (row_done and remaining[i] > 0):
            yield from extend(k + 1)
        if remaining[i] > 0 and remaining[j] > 0:
            remaining[i] -= 1
            remaining[j] -= 1
            chosen.append((i, j))
            if not (row_done and remaining[i] > 0):
                yield from extend(k + 1)
            chosen.pop()
            remaining[i] += 1
            remaining[j] += 1

    yield from extend(0)


def _is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.vertex_count


def _is_canonical(edges: tuple[tuple[int, int], ...], n_top: int, n: int) -> bool:
    # Degree-preserving relabelings permute the top-degree block and the rest
    # independently; keep only the lexicographically smallest edge set.
    base = tuple(sorted(edges))
    image = list(range(n))
    for top_perm in permutations(range(n_top)):
        image[:n_top] = top_perm
        for low_perm in permutations(range(n_top, n)):
            image[n_top:] = low_perm
            mapped = tuple(
                sorted(
                    (image[u], image[v]) if image[u] < image[v] else (image[v], image[u])
                    for u, v in edges
                )
            )
            if mapped < base:
                return False
    return True


def connected_near_regular_graphs(max_edges: int, min_r: int = 3) -> Iterator[Graph]:
    """All connected graphs with at most ``max_edges`` edges and degree spread <= 1,
    one representative per isomorphism class, max degree at least ``min_r``.

    Vertices of maximum degree come first in each representative. Chromatic
    class is not filtered; run :func:`exact_chromatic_index` on the results.
    """
    if max_edges < 1:
        return
    # Degrees at least r-1 on at least r+1 vertices force r*r - 1 <= 2*max_edges.
    for r in range(min_r, isqrt(2 * max_edges + 1) + 1):
        for n_top in range(1, 2 * max_edges // r + 1):
            for n_low in range(0, (2 * max_edges - r * n_top) // (r - 1) + 1):
                degree_total = r * n_top + (r - 1) * n_low
                if degree_total % 2:
                    continue
                m = degree_total // 2
                if m > max_edges:
                    break
                n = n_top + n_low
                if n < r + 1 or m < n - 1:
                    continue
                degrees = [r] * n_top + [r - 1] * n_low
                for edges in _graphs_with_degrees(degrees):
                    g = build_graph(n, edges)
                    if not _is_connected(g):
                        continue
                    if not _is_canonical(edges, n_top, n):
                        continue
                    yield g
