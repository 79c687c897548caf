import pytest
from hypothesis import given, strategies as st

from seqcolor import (
    ClassTwoError,
    EdgeColoring,
    GraphError,
    MissingColorPartition,
    PreconditionError,
    biregular_set_bound,
    build_graph,
    cycle_graph,
    degree_profile,
    generate_complete_bipartite,
    misra_gries,
    missing_color_partition,
    obtain_r_coloring,
    select_swap_color,
    sequential_set_bound,
    sequentialize,
    swap_colors,
    verify_proper,
    verify_sequential,
)

from .conftest import class_one_near_regular, graphs
from .test_coloring import K4_MATCHING_COLORING

# Hand-checked proper 3-coloring of the complete bipartite graph on parts
# {0,1} and {2,3,4}: vertex 2 misses color 3, vertex 3 misses 1, vertex 4
# misses 2.
K23_COLORING = EdgeColoring(
    {(0, 2): 1, (0, 3): 2, (0, 4): 3, (1, 2): 2, (1, 3): 3, (1, 4): 1}, 3
)


class TestMissingColorPartition:
    def test_k4_all_empty(self, k4):
        part = missing_color_partition(k4, K4_MATCHING_COLORING)
        assert part.r == 3
        assert all(cls == frozenset() for cls in part.classes.values())
        assert part.deficient_total == 0

    def test_k23_hand_example(self, k23):
        part = missing_color_partition(k23, K23_COLORING)
        assert part.classes == {1: frozenset({3}), 2: frozenset({4}), 3: frozenset({2})}

    def test_rejects_not_near_regular(self, star3):
        c = obtain_r_coloring(star3)
        with pytest.raises(PreconditionError, match="spread"):
            missing_color_partition(star3, c)

    def test_rejects_wrong_color_count(self, k4):
        widened = EdgeColoring(dict(K4_MATCHING_COLORING.assignment), 4)
        with pytest.raises(PreconditionError, match="colors"):
            missing_color_partition(k4, widened)

    def test_rejects_improper(self, k23):
        bad = dict(K23_COLORING.assignment)
        bad[(0, 2)] = 2  # clashes with (1, 2) at vertex 2 and (0, 3) at vertex 0
        with pytest.raises(PreconditionError, match="not proper"):
            missing_color_partition(k23, EdgeColoring(bad, 3))

    def test_rejects_small_degree(self):
        g = cycle_graph(6)
        c = obtain_r_coloring(g)
        with pytest.raises(PreconditionError, match="at least 3"):
            missing_color_partition(g, c)

    @given(class_one_near_regular())
    def test_partition_identity(self, g):
        profile = degree_profile(g)
        part = missing_color_partition(g, obtain_r_coloring(g))
        classes = list(part.classes.values())
        union = frozenset().union(*classes)
        assert sum(len(cls) for cls in classes) == len(union)  # pairwise disjoint
        assert union == frozenset(g.vertices) - profile.max_degree_vertices
        assert part.deficient_total == profile.n - profile.n_r


class TestSelectSwapColor:
    def test_all_empty_prefers_top(self):
        part = MissingColorPartition({1: frozenset(), 2: frozenset(), 3: frozenset()}, 3)
        assert select_swap_color(part) == 3

    def test_tie_prefers_top(self, k23):
        part = missing_color_partition(k23, K23_COLORING)
        assert select_swap_color(part) == 3

    def test_unique_maximum(self):
        part = MissingColorPartition(
            {1: frozenset({0}), 2: frozenset({1, 2}), 3: frozenset({3})}, 3
        )
        assert select_swap_color(part) == 2

    def test_tie_below_top_prefers_smallest(self):
        part = MissingColorPartition(
            {1: frozenset({0, 1}), 2: frozenset({2, 3}), 3: frozenset()}, 3
        )
        assert select_swap_color(part) == 1

    @given(class_one_near_regular())
    def test_pigeonhole(self, g):
        profile = degree_profile(g)
        part = missing_color_partition(g, obtain_r_coloring(g))
        chosen = select_swap_color(part)
        deficient = profile.n - profile.n_r
        assert len(part.classes[chosen]) >= -(-deficient // profile.r)


class TestSwapColors:
    def test_identity_when_top(self, k23):
        assert swap_colors(K23_COLORING, 3, 3) is K23_COLORING

    def test_k23_hand_example(self, k23):
        swapped = swap_colors(K23_COLORING, 1, 3)
        assert swapped.color_of(0, 4) == 1 and swapped.color_of(1, 3) == 1
        assert swapped.color_of(0, 2) == 3 and swapped.color_of(1, 4) == 3
        assert swapped.color_of(0, 3) == 2 and swapped.color_of(1, 2) == 2
        assert verify_proper(k23, swapped)

    def test_color_out_of_range(self):
        with pytest.raises(PreconditionError, match="range"):
            swap_colors(K23_COLORING, 0, 3)
        with pytest.raises(PreconditionError, match="top color"):
            swap_colors(K23_COLORING, 1, 2)

    @given(graphs(), st.data())
    def test_involution_and_properness(self, g, data):
        coloring = misra_gries(g)
        if coloring.color_count == 0:
            return
        low = data.draw(st.integers(1, coloring.color_count))
        swapped = swap_colors(coloring, low, coloring.color_count)
        assert verify_proper(g, swapped)
        assert swap_colors(swapped, low, coloring.color_count) == coloring


class TestVerifySequential:
    def test_k4_full_vertex_set(self, k4):
        assert verify_sequential(k4, K4_MATCHING_COLORING, range(4))

    def test_empty_set_vacuous(self, k4):
        assert verify_sequential(k4, K4_MATCHING_COLORING, ())

    def test_gap_in_palette_reported(self):
        g = build_graph(3, [(0, 1), (1, 2)])
        c = EdgeColoring({(0, 1): 1, (1, 2): 3}, 3)
        verdict = verify_sequential(g, c, [0, 1, 2])
        assert not verdict
        assert verdict.violations == (1, 2)  # vertex 1 sees {1,3}; vertex 2 sees {3}

    def test_unknown_vertex(self, k4):
        with pytest.raises(GraphError, match="unknown"):
            verify_sequential(k4, K4_MATCHING_COLORING, [7])


class TestBounds:
    @pytest.mark.parametrize(
        "n,n_r,r,expected", [(4, 4, 3, 4), (5, 2, 3, 3), (14, 6, 4, 8)]
    )
    def test_sequential_set_bound(self, n, n_r, r, expected):
        assert sequential_set_bound(n, n_r, r) == expected

    @pytest.mark.parametrize("n,r,expected", [(5, 3, 3), (14, 4, 8)])
    def test_biregular_set_bound(self, n, r, expected):
        assert biregular_set_bound(n, r) == expected

    def test_ceiling_identity_small_range(self):
        for r in range(3, 11):
            for n in range(0, 31):
                for n_r in range(0, n + 1):
                    expected = n_r + -(-(n - n_r) // r)
                    assert sequential_set_bound(n, n_r, r) == expected

    def test_biregular_agreement(self):
        for r in range(3, 7):
            for k in range(1, 6):
                n = (2 * r - 1) * k
                assert sequential_set_bound(n, (r - 1) * k, r) == r * k
                assert biregular_set_bound(n, r) == r * k

    def test_argument_validation(self):
        with pytest.raises(PreconditionError):
            sequential_set_bound(4, 5, 3)
        with pytest.raises(PreconditionError):
            sequential_set_bound(4, 4, 2)
        with pytest.raises(PreconditionError):
            biregular_set_bound(5, 2)


class TestSequentialize:
    def test_k4(self, k4):
        cert = sequentialize(k4)
        assert cert.sequential_vertices == frozenset(range(4))
        assert cert.size == cert.bound == 4
        assert cert.verified
        assert not cert.swapped

    def test_k23_with_injected_coloring(self, k23):
        cert = sequentialize(k23, coloring=K23_COLORING)
        assert cert.swap_color == 3
        assert cert.coloring == K23_COLORING  # no swap needed
        assert cert.sequential_vertices == frozenset({0, 1, 2})
        assert cert.size >= cert.bound == 3
        assert cert.verified

    def test_k23_default_acquisition(self, k23):
        cert = sequentialize(k23)
        assert cert.verified and cert.size >= 3
        assert {0, 1} <= cert.sequential_vertices

    def test_petersen_class_two(self, petersen):
        with pytest.raises(ClassTwoError):
            sequentialize(petersen)

    def test_star_not_near_regular(self, star3):
        with pytest.raises(PreconditionError, match="spread"):
            sequentialize(star3)

    def test_c5_degree_too_small(self):
        with pytest.raises(PreconditionError, match="at least 3"):
            sequentialize(cycle_graph(5))

    def test_record_fields(self, k23):
        record = sequentialize(k23, coloring=K23_COLORING).to_record()
        assert record["record"] == "certificate"
        assert record["swap_color"] is None
        assert record["sequential_vertices"] == [0, 1, 2]
        assert record["size"] == 3 and record["bound"] == 3
        assert record["verified"] is True
        assert record["coloring"][0] == "0 2 1"

    @given(class_one_near_regular())
    def test_certificate_properties(self, g):
        profile = degree_profile(g)
        cert = sequentialize(g)
        assert cert.verified
        assert profile.max_degree_vertices <= cert.sequential_vertices
        assert cert.size >= cert.bound
        assert cert.bound == sequential_set_bound(profile.n, profile.n_r, profile.r)
        assert verify_sequential(g, cert.coloring, cert.sequential_vertices)
        assert verify_proper(g, cert.coloring)


def test_forced_swap_path():
    # K4 minus the edge (2,3), colored so both degree-2 vertices miss color 1:
    # the swap with color 3 must fire and make them sequential.
    g = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    alpha = EdgeColoring({(0, 1): 1, (0, 2): 2, (0, 3): 3, (1, 2): 3, (1, 3): 2}, 3)
    cert = sequentialize(g, coloring=alpha)
    assert cert.swapped and cert.swap_color == 1
    assert cert.sequential_vertices == frozenset(range(4))
    assert cert.verified
    assert cert.coloring.color_of(0, 1) == 3
    assert cert.coloring.color_of(1, 2) == 1
    assert cert.size == 4 >= cert.bound == 3
