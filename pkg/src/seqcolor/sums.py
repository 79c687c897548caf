"""Edge-color sums and the closed-form upper bound for near-regular graphs.

For a graph with max degree r, spread at most one, and chromatic index r
(r >= 3), the minimum total edge color over proper colorings is at most
floor((2*n_r*(2r-1) + n*(r-1)*(r^2+2r-2)) / (4r)). The bound follows from the
sequential construction by summing palettes vertex by vertex, so this module
also exposes that per-vertex decomposition for term-level checking.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import EdgeColoring, palette, verify_proper
from .errors import PreconditionError
from .graph import Graph
from .oracle import ORACLE_EDGE_LIMIT, exact_edge_chromatic_sum
from .sequential import SequentialCertificate, sequentialize


def coloring_sum(g: Graph, coloring: EdgeColoring) -> int:
    """Total color over all edges of ``g``."""
    try:
        return sum(coloring.assignment[e] for e in g.edges)
    except KeyError as exc:
        raise PreconditionError(f"incomplete coloring: edge {exc} missing") from None


def chromatic_sum_bound(n: int, n_r: int, r: int) -> int:
    """floor((2*n_r*(2r-1) + n*(r-1)*(r^2+2r-2)) / (4r)), exact integers."""
    if r < 3:
        raise PreconditionError(f"degree parameter must be at least 3, got {r}")
    if not 0 <= n_r <= n:
        raise PreconditionError(f"need 0 <= n_r <= n, got n_r={n_r}, n={n}")
    return (2 * n_r * (2 * r - 1) + n * (r - 1) * (r * r + 2 * r - 2)) // (4 * r)


@dataclass(frozen=True)
class PaletteSumDecomposition:
    """Per-vertex palette sums and the vertex classes behind the sum bound.

    ``doubled_total`` equals twice the coloring sum (every edge is counted at
    both endpoints). With t colors, ``full_palette`` holds vertices seeing all
    of 1..t (each contributes t(t+1)/2), ``missing_top`` those seeing exactly
    1..t-1 (each contributes t(t-1)/2), and ``other_deficient`` the rest.
    """

    per_vertex: tuple[int, ...]
    doubled_total: int
    full_palette: frozenset[int]
    missing_top: frozenset[int]
    other_deficient: frozenset[int]


def vertex_sum_decomposition(g: Graph, coloring: EdgeColoring) -> PaletteSumDecomposition:
    """Sum each vertex's palette and classify vertices for the bound's terms."""
    verdict = verify_proper(g, coloring)
    if not verdict:
        raise PreconditionError(f"coloring is not proper: clashes {verdict.violations[:3]}")
    t = coloring.color_count
    everything = frozenset(range(1, t + 1))
    below_top = frozenset(range(1, t))
    sums = []
    full, missing_top, other = set(), set(), set()
    for v in g.vertices:
        colors = palette(g, coloring, v)
        sums.append(sum(colors))
        if colors == everything:
            full.add(v)
        elif colors == below_top:
            missing_top.add(v)
        else:
            other.add(v)
    doubled = sum(sums)
    assert doubled == 2 * coloring_sum(g, coloring), "palette sums must double-count edges"
    return PaletteSumDecomposition(
        per_vertex=tuple(sums),
        doubled_total=doubled,
        full_palette=frozenset(full),
        missing_top=frozenset(missing_top),
        other_deficient=frozenset(other),
    )


@dataclass(frozen=True)
class SumReport:
    """Achieved sum of the constructed coloring against the closed-form bound.

    ``exact_sum`` is the brute-force minimum when the oracle ran, else None.
    Whenever all fields are present, exact_sum <= actual_sum <= bound.
    """

    actual_sum: int
    bound: int
    exact_sum: int | None
    r: int
    n: int
    n_r: int
    certificate: SequentialCertificate

    def to_record(self) -> dict:
        return {
            "record": "sum_report",
            "n": self.n,
            "r": self.r,
            "n_r": self.n_r,
            "actual_sum": self.actual_sum,
            "bound": self.bound,
            "exact_sum": self.exact_sum,
        }


def sum_report(
    g: Graph,
    run_oracle: bool = False,
    coloring: EdgeColoring | None = None,
    *,
    max_edges: int = ORACLE_EDGE_LIMIT,
) -> SumReport:
    """Run the sequential pipeline and compare its sum against the bound.

    The exact minimum is attached when ``run_oracle`` is set and the instance
    fits the oracle's edge budget. Precondition and class failures propagate
    from :func:`sequentialize`.
    """
    certificate = sequentialize(g, coloring=coloring)
    actual = coloring_sum(g, certificate.coloring)
    bound = chromatic_sum_bound(certificate.n, certificate.n_r, certificate.r)
    exact = None
    if run_oracle and g.edge_count <= max_edges:
        exact = exact_edge_chromatic_sum(g, max_edges=max_edges).value
    assert actual <= bound, "constructed coloring exceeded the closed-form bound"
    if exact is not None:
        assert exact <= actual, "oracle minimum exceeded the constructed sum"
    return SumReport(
        actual_sum=actual,
        bound=bound,
        exact_sum=exact,
        r=certificate.r,
        n=certificate.n,
        n_r=certificate.n_r,
        certificate=certificate,
    )
