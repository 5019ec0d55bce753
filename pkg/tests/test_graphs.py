from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from laptree.graphs import (
    CandidateShape,
    DoubleStarlikeParams,
    Graph,
    build_candidate,
    build_double_starlike,
    canonical_form,
    graph6_decode,
    graph6_encode,
    line_graph,
    tree_centers,
)

import oracles
from conftest import trees_of_order


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i + 1) for i in range(leaves)])


class TestGraphType:
    def test_from_edges_sorts_and_symmetrizes(self):
        g = Graph.from_edges(3, [(2, 0), (1, 2)])
        assert g.adj == ((2,), (2,), (0, 1))

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 0)])

    def test_rejects_asymmetric_adjacency(self):
        with pytest.raises(ValueError):
            Graph([[1], []])

    def test_rejects_unsorted_adjacency(self):
        with pytest.raises(ValueError):
            Graph([[2, 1], [0, 2], [0, 1]])

    def test_immutable(self):
        g = path_graph(3)
        with pytest.raises(AttributeError):
            g.adj = ()

    def test_edge_count_and_degrees(self):
        g = star_graph(3)
        assert g.size == 3
        assert g.degree_multiset() == (3, 1, 1, 1)

    def test_complement_of_path(self):
        g = path_graph(3).complement()
        assert list(g.edges()) == [(0, 2)]

    def test_delete_vertex_and_edge(self):
        g = path_graph(4)
        assert g.delete_vertex(0).adj == path_graph(3).adj
        assert g.delete_edge(1, 2).connected_components() == 2
        with pytest.raises(ValueError):
            g.delete_edge(0, 3)


class TestBuildDoubleStarlike:
    def test_one_one_is_path(self):
        for n in range(1, 8):
            g = build_double_starlike(DoubleStarlikeParams(1, n, 1))
            assert canonical_form(g) == canonical_form(path_graph(n + 2))

    def test_n_one_is_star(self):
        g = build_double_starlike(DoubleStarlikeParams(3, 1, 2))
        assert canonical_form(g) == canonical_form(star_graph(5))

    def test_342_degree_multiset(self):
        g = build_double_starlike(DoubleStarlikeParams(3, 4, 2))
        assert g.degree_multiset() == (4, 3, 2, 2, 1, 1, 1, 1, 1)

    def test_rejects_zero_params(self):
        for bad in ((0, 2, 1), (1, 0, 1), (1, 2, 0)):
            with pytest.raises(ValueError):
                DoubleStarlikeParams(*bad)

    @given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 6))
    def test_tree_on_expected_order(self, p, n, q):
        g = build_double_starlike(DoubleStarlikeParams(p, n, q))
        assert g.order == n + p + q
        assert g.size == n + p + q - 1
        assert g.is_connected()
        if n >= 2:
            expected = tuple(
                sorted([p + 1, q + 1] + [2] * (n - 2) + [1] * (p + q), reverse=True)
            )
            assert g.degree_multiset() == expected

    @given(st.integers(1, 6), st.integers(2, 6), st.integers(1, 6))
    def test_mirror_symmetry(self, p, n, q):
        a = build_double_starlike(DoubleStarlikeParams(p, n, q))
        b = build_double_starlike(DoubleStarlikeParams(q, n, p))
        assert canonical_form(a) == canonical_form(b)


class TestBuildCandidate:
    def test_plain_shape_is_double_starlike(self):
        shape = CandidateShape(hubs_adjacent=False, a=0, b=0, hub_path_len=5)
        g = build_candidate((3, 2), shape)
        h = build_double_starlike(DoubleStarlikeParams(3, 5, 2))
        assert canonical_form(g) == canonical_form(h)

    def test_adjacent_shape_differs_from_reference(self):
        shape = CandidateShape(
            hubs_adjacent=True, a=0, b=1, branch_lengths_p=(2,)
        )
        g = build_candidate((3, 2), shape)
        h = build_double_starlike(DoubleStarlikeParams(3, 4, 2))
        assert g.degree_multiset() == h.degree_multiset()
        assert canonical_form(g) != canonical_form(h)

    def test_branched_shape_degree_multiset(self):
        shape = CandidateShape(
            hubs_adjacent=False, a=1, b=0, hub_path_len=3, branch_lengths_q=(2,)
        )
        g = build_candidate((4, 3), shape)
        assert g.degree_multiset() == (5, 4, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1)

    def test_rejects_too_many_branches(self):
        shape = CandidateShape(
            hubs_adjacent=False, a=3, b=0, hub_path_len=3,
            branch_lengths_q=(1, 1, 1),
        )
        with pytest.raises(ValueError):
            build_candidate((4, 2), shape)

    def test_rejects_inconsistent_shape(self):
        with pytest.raises(ValueError):
            CandidateShape(hubs_adjacent=True, a=0, b=0, hub_path_len=4)
        with pytest.raises(ValueError):
            CandidateShape(hubs_adjacent=False, a=0, b=0, hub_path_len=2)
        with pytest.raises(ValueError):
            CandidateShape(hubs_adjacent=True, a=1, b=0, branch_lengths_q=(0,))


class TestLineGraph:
    def test_path_shifts_down(self):
        for n in range(2, 8):
            lg = line_graph(path_graph(n))
            assert canonical_form(lg) == canonical_form(path_graph(n - 1))

    def test_claw_becomes_triangle(self):
        lg = line_graph(star_graph(3))
        assert lg.order == 3 and lg.size == 3

    def test_double_starlike_line_graph_size(self):
        lg = line_graph(build_double_starlike(DoubleStarlikeParams(3, 4, 2)))
        assert lg.order == 8
        assert lg.size == 11

    @given(st.integers(2, 9), st.randoms(use_true_random=False))
    def test_size_formula(self, n, rnd):
        g = oracles.random_graph(rnd, n)
        lg = line_graph(g)
        assert lg.order == g.size
        assert lg.size == sum(d * (d - 1) // 2 for d in g.degrees())


class TestCanonicalForm:
    def test_invariant_under_relabeling(self):
        rng = random.Random(7)
        for n in range(2, 10):
            t = oracles.random_tree(rng, n)
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_form(t) == canonical_form(t.relabel(perm))

    def test_distinguishes_path_from_star(self):
        assert canonical_form(path_graph(4)) != canonical_form(star_graph(3))

    def test_mirror_parameters_agree(self):
        a = build_double_starlike(DoubleStarlikeParams(3, 4, 2))
        b = build_double_starlike(DoubleStarlikeParams(2, 4, 3))
        assert canonical_form(a) == canonical_form(b)

    def test_rejects_non_tree(self):
        with pytest.raises(ValueError):
            canonical_form(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))

    def test_agrees_with_independent_key(self):
        rng = random.Random(11)
        trees = [oracles.random_tree(rng, rng.randint(2, 11)) for _ in range(120)]
        by_lib = {}
        for t in trees:
            by_lib.setdefault(canonical_form(t), set()).add(oracles.tree_key(t))
        assert all(len(keys) == 1 for keys in by_lib.values())
        assert len(set(frozenset(k) for k in by_lib.values())) == len(by_lib)

    def test_centers_of_paths(self):
        assert tree_centers(path_graph(5)) == [2]
        assert tree_centers(path_graph(6)) == [2, 3]


class TestGraph6:
    def test_single_edge_encodes_to_known_string(self):
        assert graph6_encode(Graph.from_edges(2, [(0, 1)])) == "A_"

    def test_decode_empty_pair(self):
        g = graph6_decode("A?")
        assert g.order == 2 and g.size == 0

    def test_header_prefix_accepted(self):
        assert graph6_decode(">>graph6<<A_").size == 1

    @given(st.integers(1, 7))
    def test_round_trip_on_trees(self, n):
        for t in trees_of_order(n):
            assert graph6_decode(graph6_encode(t)) == t

    def test_rejects_bad_length(self):
        with pytest.raises(ValueError):
            graph6_decode("A")
        with pytest.raises(ValueError):
            graph6_decode("A__")

    def test_rejects_nonzero_padding(self):
        # order 2 needs one bit; the last five bits must stay clear
        with pytest.raises(ValueError):
            graph6_decode("A" + chr(63 + 0b111111))

    def test_rejects_bad_header(self):
        with pytest.raises(ValueError):
            graph6_decode(chr(62) + "?")
        with pytest.raises(ValueError):
            graph6_decode("")

    def test_rejects_order_above_limit(self):
        with pytest.raises(ValueError):
            graph6_decode("D??", max_order=4)

    def test_encode_rejects_large_order(self):
        with pytest.raises(ValueError):
            graph6_encode(Graph([[ ] for _ in range(63)]))
