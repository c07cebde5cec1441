#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from hypothesis import given, settings
from hypothesis import strategies as st
from parameterized import parameterized

from arlab.graph import (EdgeColoring, GraphError, KstCopy, Multigraph,
                         SimpleGraph, UnsupportedParameterError, edge_index,
                         edge_multiplicity, edge_pair, enumerate_kst_copies,
                         find_cycle, has_rainbow_copy, mask_of, popcount,
                         normalize_colors, representing_graph,
                         simplify_multigraph)
from arlab.util import binom

from .base import TestCase
from .strategies import colorings, graphs


class TestEdgeIndex(TestCase):
    @parameterized.expand([
        ((0, 1), 0),
        ((0, 2), 1),
        ((0, 3), 2),
        ((1, 2), 3),
        ((1, 3), 4),
        ((2, 3), 5),
    ])
    def test_k4_indices(self, edge, index):
        self.assertEqual(edge_index(4, *edge), index)
        self.assertEqual(edge_pair(4, index), edge)

    def test_symmetric(self):
        self.assertEqual(edge_index(5, 3, 1), edge_index(5, 1, 3))

    def test_loop(self):
        with self.assertRaises(GraphError):
            edge_index(4, 2, 2)

    def test_out_of_range(self):
        with self.assertRaises(GraphError):
            edge_index(4, 1, 4)

    @given(st.integers(min_value=2, max_value=12))
    def test_indices_cover_range(self, n):
        indices = sorted(edge_index(n, u, v)
                         for u in range(n) for v in range(u + 1, n))
        self.assertEqual(indices, list(range(binom(n, 2))))


class TestSimpleGraph(TestCase):
    def test_complete(self):
        k4 = SimpleGraph.complete(4)
        self.assertEqual(k4.num_edges, 6)
        self.assertIsTrue(k4.is_complete)
        self.assertEqual(k4.edges[0], (0, 1))
        self.assertEqual(k4.edges[-1], (2, 3))

    def test_empty(self):
        g = SimpleGraph.empty(3)
        self.assertEqual(g.num_edges, 0)
        self.assertIsFalse(g.is_complete)
        self.assertEqual(g.edges, ())

    def test_from_edges(self):
        g = SimpleGraph.from_edges(4, [(2, 1), (0, 3)])
        self.assertEqual(g.edges, ((0, 3), (1, 2)))
        self.assertIsTrue(g.has_edge(1, 2))
        self.assertIsTrue(g.has_edge(2, 1))
        self.assertIsFalse(g.has_edge(0, 1))
        self.assertIsFalse(g.has_edge(0, 7))

    def test_duplicated_edge(self):
        with self.assertRaises(GraphError):
            SimpleGraph.from_edges(3, [(0, 1), (1, 0)])

    def test_mask_beyond_range(self):
        with self.assertRaises(GraphError):
            SimpleGraph(3, 1 << 3)

    def test_neighbors(self):
        g = SimpleGraph.from_edges(4, [(0, 1), (1, 3)])
        self.assertEqual(g.neighbors(1), (0, 3))
        self.assertEqual(g.neighbors(2), ())

    def test_union_difference(self):
        a = SimpleGraph.from_edges(3, [(0, 1)])
        b = SimpleGraph.from_edges(3, [(1, 2)])
        self.assertEqual(a.union(b).edges, ((0, 1), (1, 2)))
        self.assertEqual(a.union(b).difference(a), b)
        with self.assertRaises(GraphError):
            a.union(SimpleGraph.empty(4))

    def test_relabel(self):
        g = SimpleGraph.from_edges(3, [(0, 1)])
        self.assertEqual(g.relabel([2, 0, 1]).edges, ((0, 2),))

    def test_to_networkx(self):
        g = SimpleGraph.from_edges(4, [(0, 1), (2, 3)]).to_networkx()
        self.assertEqual(g.number_of_nodes(), 4)
        self.assertEqual(g.number_of_edges(), 2)

    @given(graphs())
    def test_edges_round_trip(self, g):
        self.assertEqual(SimpleGraph.from_edges(g.n, g.edges), g)
        self.assertEqual(mask_of(g.n, g.edges), g.mask)
        self.assertEqual(popcount(g.mask), len(g.edges))


class TestEdgeColoring(TestCase):
    def setUp(self):
        super().setUp()
        self.k3 = SimpleGraph.complete(3)

    def test_from_colors_normalizes(self):
        c = EdgeColoring.from_colors(self.k3, [5, 5, 7])
        self.assertEqual(c.colors, (0, 0, 1))
        self.assertEqual(c.num_colors, 2)

    def test_not_normalized(self):
        with self.assertRaises(GraphError):
            EdgeColoring(self.k3, (1, 0, 0))

    def test_wrong_length(self):
        with self.assertRaises(GraphError):
            EdgeColoring(self.k3, (0, 1))

    def test_from_mapping(self):
        c = EdgeColoring.from_mapping(
            self.k3, {(1, 0): 'a', (0, 2): 'b', (1, 2): 'a'})
        self.assertEqual(c.colors, (0, 1, 0))
        self.assertEqual(c.color_of(2, 1), 0)

    def test_from_mapping_missing(self):
        with self.assertRaises(GraphError):
            EdgeColoring.from_mapping(self.k3, {(0, 1): 0})

    def test_rainbow_and_monochromatic(self):
        self.assertEqual(EdgeColoring.rainbow(self.k3).num_colors, 3)
        self.assertEqual(EdgeColoring.monochromatic(self.k3).num_colors, 1)
        self.assertEqual(
            EdgeColoring.monochromatic(SimpleGraph.empty(3)).num_colors, 0)

    def test_color_class(self):
        c = EdgeColoring.from_colors(self.k3, [0, 1, 0])
        self.assertEqual(c.color_class(0).edges, ((0, 1), (1, 2)))

    def test_is_rainbow(self):
        c = EdgeColoring.from_colors(self.k3, [0, 1, 0])
        self.assertIsTrue(c.is_rainbow(0b011))
        self.assertIsFalse(c.is_rainbow(0b101))

    @settings(max_examples=30)
    @given(colorings(max_n=5), st.randoms(use_true_random=False))
    def test_permute_keeps_rainbow_copies(self, c, rnd):
        perm = list(range(c.host.n))
        rnd.shuffle(perm)
        other = c.permute_vertices(perm)
        self.assertEqual(other.num_colors, c.num_colors)
        self.assertEqual(has_rainbow_copy(other, 2, 2) is None,
                         has_rainbow_copy(c, 2, 2) is None)

    @given(st.lists(st.integers(min_value=0, max_value=9), max_size=20))
    def test_normalize_idempotent(self, colors):
        once = normalize_colors(colors)
        self.assertEqual(normalize_colors(once), once)
        self.assertEqual(len(set(once)), len(set(colors)))

    @given(st.lists(st.integers(min_value=0, max_value=9), max_size=20),
           st.permutations(range(10)))
    def test_normalize_ignores_color_names(self, colors, rename):
        renamed = [rename[c] for c in colors]
        self.assertEqual(normalize_colors(renamed), normalize_colors(colors))


class TestKstCopy(TestCase):
    def test_sorted_parts(self):
        copy = KstCopy((3, 1), (4, 0))
        self.assertEqual(copy.X, (1, 3))
        self.assertEqual(copy.Y, (0, 4))
        self.assertEqual(copy.s, 2)
        self.assertEqual(copy.t, 2)

    def test_edges(self):
        copy = KstCopy((0, 1), (2,))
        self.assertEqual(copy.edges, ((0, 2), (1, 2)))
        self.assertEqual(copy.edge_mask(3), 0b110)
        self.assertEqual(copy.to_dict(), {'X': [0, 1], 'Y': [2]})

    def test_order(self):
        self.assertLess(KstCopy((0, 1), (2, 3)), KstCopy((0, 2), (1, 3)))
        self.assertLess(KstCopy((0, 1), (2, 3)), KstCopy((0, 1), (2, 4)))

    def test_overlapping_parts(self):
        with self.assertRaises(GraphError):
            KstCopy((0, 1), (1, 2))

    def test_small_interior(self):
        with self.assertRaises(UnsupportedParameterError):
            KstCopy((0,), (1, 2))


class TestEnumerateCopies(TestCase):
    def test_k4_c4(self):
        copies = enumerate_kst_copies(SimpleGraph.complete(4), 2, 2)
        self.assertEqual(copies, [
            KstCopy((0, 1), (2, 3)),
            KstCopy((0, 2), (1, 3)),
            KstCopy((0, 3), (1, 2)),
        ])

    @parameterized.expand([
        (5, 2, 2, 15),
        (5, 2, 3, 10),
        (6, 2, 2, 45),
        (3, 2, 2, 0),
        (4, 2, 1, 12),
    ])
    def test_counts(self, n, s, t, count):
        self.assertEqual(
            len(enumerate_kst_copies(SimpleGraph.complete(n), s, t)), count)

    def test_sparse_host(self):
        g = SimpleGraph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
        self.assertEqual(enumerate_kst_copies(g, 2, 2),
                         [KstCopy((0, 1), (2, 3))])

    def test_unsupported(self):
        with self.assertRaises(UnsupportedParameterError):
            enumerate_kst_copies(SimpleGraph.complete(4), 1, 2)
        with self.assertRaises(UnsupportedParameterError):
            enumerate_kst_copies(SimpleGraph.complete(4), 2, 0)

    @settings(max_examples=30)
    @given(graphs(min_n=4, max_n=6))
    def test_copies_are_in_host(self, g):
        copies = enumerate_kst_copies(g, 2, 2)
        self.assertEqual(copies, sorted(set(copies)))
        for copy in copies:
            self.assertIsTrue(g.contains(copy.edge_mask(g.n)))


class TestRainbow(TestCase):
    def test_rainbow_k4(self):
        c = EdgeColoring.rainbow(SimpleGraph.complete(4))
        self.assertEqual(has_rainbow_copy(c, 2, 2), KstCopy((0, 1), (2, 3)))

    def test_monochromatic(self):
        c = EdgeColoring.monochromatic(SimpleGraph.complete(5))
        self.assertIsNone(has_rainbow_copy(c, 2, 2))

    def test_star_coloring(self):
        # edges at vertex 0 share color 0; a C4 uses two of them
        host = SimpleGraph.complete(4)
        colors = [0 if u == 0 else i for i, (u, v) in enumerate(host.edges)]
        c = EdgeColoring.from_colors(host, colors)
        self.assertIsNone(has_rainbow_copy(c, 2, 2))

    def test_representing_graph(self):
        host = SimpleGraph.complete(4)
        rep = representing_graph(EdgeColoring.monochromatic(host))
        self.assertEqual(rep.edges, ((0, 1),))
        rep = representing_graph(EdgeColoring.rainbow(host))
        self.assertEqual(rep, host)

    @settings(max_examples=50)
    @given(colorings(max_n=6, max_colors=6))
    def test_representing_graph_one_edge_per_color(self, c):
        rep = representing_graph(c)
        self.assertEqual(rep.num_edges, c.num_colors)
        self.assertIsTrue(c.is_rainbow(rep.mask))


class TestMultigraph(TestCase):
    def test_multiplicity(self):
        F = Multigraph.from_edges(3, [(0, 1), (1, 0), (1, 2)])
        self.assertEqual(F.num_edges, 3)
        self.assertEqual(edge_multiplicity(F), 2)
        self.assertEqual(F.as_dict(), {(0, 1): 2, (1, 2): 1})
        self.assertEqual(simplify_multigraph(F).edges, ((0, 1), (1, 2)))

    def test_empty(self):
        F = Multigraph.from_edges(3, [])
        self.assertEqual(edge_multiplicity(F), 0)
        self.assertEqual(simplify_multigraph(F).num_edges, 0)

    def test_add_path(self):
        F = Multigraph(4).add_path([0, 1, 2]).add_path([2, 1, 3])
        self.assertEqual(F.as_dict(), {(0, 1): 1, (1, 2): 2, (1, 3): 1})
        self.assertEqual(F, Multigraph.from_edges(
            4, [(0, 1), (1, 2), (2, 1), (1, 3)]))
        self.assertEqual(F.add_path([3]), F)

    def test_loop(self):
        with self.assertRaises(GraphError):
            Multigraph.from_edges(3, [(1, 1)])


class TestFindCycle(TestCase):
    def test_triangle(self):
        cycle = find_cycle(SimpleGraph.complete(3))
        self.assertEqual(sorted(cycle), [0, 1, 2])

    def test_forest(self):
        path = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        self.assertIsNone(find_cycle(path))
        self.assertIsNone(find_cycle(SimpleGraph.empty(3)))

    @settings(max_examples=50)
    @given(graphs(min_n=2, max_n=7))
    def test_cycle_edges_exist(self, g):
        cycle = find_cycle(g)
        if g.num_edges > g.n - 1:
            self.assertIsNotNone(cycle)
        if cycle is not None:
            self.assertGreaterEqual(len(cycle), 3)
            for i, u in enumerate(cycle):
                self.assertIsTrue(g.has_edge(u, cycle[(i + 1) % len(cycle)]))
