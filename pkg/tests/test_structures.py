#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from hypothesis import given, settings
from hypothesis import strategies as st
from parameterized import parameterized

from arlab.graph import (EdgeColoring, KstCopy, SimpleGraph,
                         UnsupportedParameterError, edge_index)
from arlab.harness import c4_decomposition_packing, random_ring
from arlab.structures import (APEX_EXCLUSION, APEX_IN_EXTERIOR,
                              CONSECUTIVE_OVERLAP, DEGENERATE,
                              EDGE_DISJOINTNESS, HOST_CONTAINMENT,
                              MAXIMALITY, PART_SIZES, TAIL_MEMBERSHIP,
                              WRAP_OVERLAP, KstRing, KstString,
                              NotExtractableError, Packing, StringTie,
                              find_rainbow_string_tie,
                              greedy_maximal_packing,
                              interior_path_multigraph, packing_to_ring,
                              residual_copies, ring_to_string_tie,
                              validate_packing, validate_ring,
                              validate_string, validate_string_tie)

from .base import TestCase

# x_1 = {a, b}, x_2 = {b, c} with a, b, c = 0, 1, 2
B1 = KstCopy((0, 1), (3, 4))
B2 = KstCopy((1, 2), (5, 6))


class TestValidateString(TestCase):
    def test_single_copy(self):
        report = validate_string(KstString((KstCopy((0, 1), (2, 3)),)),
                                 SimpleGraph.complete(4))
        self.assertIsTrue(report.valid)
        self.assertEqual(report.length, 1)

    def test_length_two(self):
        report = validate_string(KstString((B1, B2)), SimpleGraph.complete(7))
        self.assertIsTrue(report.valid)
        self.assertEqual(str(report), 'valid string of length 2')

    def test_shared_edge(self):
        S = KstString((KstCopy((0, 1), (2, 3)), KstCopy((0, 4), (2, 5))))
        report = validate_string(S, SimpleGraph.complete(6))
        self.assertIsFalse(report.valid)
        self.assertEqual(report.violations, (EDGE_DISJOINTNESS,))

    def test_disjoint_interiors(self):
        S = KstString((B1, KstCopy((2, 7), (5, 6))))
        report = validate_string(S, SimpleGraph.complete(8))
        self.assertIn(CONSECUTIVE_OVERLAP, report.violations)

    def test_part_sizes(self):
        S = KstString((B1, KstCopy((1, 2), (5, 6, 7))))
        report = validate_string(S, SimpleGraph.complete(8))
        self.assertIn(PART_SIZES, report.violations)

    def test_not_in_host(self):
        report = validate_string(KstString((B1, B2)), SimpleGraph.complete(6))
        self.assertEqual(report.violations, (HOST_CONTAINMENT,))
        sparse = SimpleGraph.from_edges(7, B1.edges)
        report = validate_string(KstString((B1, B2)), sparse)
        self.assertIn(HOST_CONTAINMENT, report.violations)

    def test_empty(self):
        report = validate_string(KstString(()), SimpleGraph.complete(3))
        self.assertIsFalse(report.valid)


class TestValidateRing(TestCase):
    def test_length_two(self):
        report = validate_ring(KstRing.of([B1, B2]), SimpleGraph.complete(7))
        self.assertIsTrue(report.valid)
        self.assertEqual(report.flags, ())

    def test_wrap(self):
        B3 = KstCopy((2, 7), (8, 9))
        report = validate_ring(KstRing.of([B1, B2, B3]),
                               SimpleGraph.complete(10))
        self.assertEqual(report.violations, (WRAP_OVERLAP,))

    def test_degenerate(self):
        report = validate_ring(KstRing.of([B1]), SimpleGraph.complete(5))
        self.assertIsTrue(report.valid)
        self.assertEqual(report.flags, (DEGENERATE,))


class TestValidateTie(TestCase):
    def test_valid(self):
        tie = StringTie(KstString((B1, B2)), 7, (0,), 2)
        report = validate_string_tie(tie, SimpleGraph.complete(8))
        self.assertIsTrue(report.valid)
        self.assertEqual(tie.apex_edges, ((0, 7), (2, 7)))

    def test_length_one(self):
        tie = StringTie(KstString((KstCopy((0, 1), (2, 3)),)), 4, (0,), 1)
        report = validate_string_tie(tie, SimpleGraph.complete(5))
        self.assertEqual(report.violations, (TAIL_MEMBERSHIP,))

    def test_apex_in_interior(self):
        tie = StringTie(KstString((B1, B2)), 1, (0,), 2)
        report = validate_string_tie(tie, SimpleGraph.complete(8))
        self.assertIn(APEX_EXCLUSION, report.violations)

    def test_apex_in_exterior_is_flagged(self):
        tie = StringTie(KstString((B1, B2)), 3, (0,), 2)
        report = validate_string_tie(tie, SimpleGraph.complete(8))
        self.assertIsTrue(report.valid)
        self.assertIn(APEX_IN_EXTERIOR, report.flags)

    def test_missing_apex_edge(self):
        host = SimpleGraph(8, SimpleGraph.complete(8).mask &
                           ~(1 << edge_index(8, 2, 7)))
        tie = StringTie(KstString((B1, B2)), 7, (0,), 2)
        self.assertFalse(validate_string_tie(tie, host).valid)


class TestFindRainbowTie(TestCase):
    def test_monochromatic(self):
        c = EdgeColoring.monochromatic(SimpleGraph.complete(6))
        self.assertIsNone(find_rainbow_string_tie(c, 2, 2, 3))

    def test_two_colors(self):
        host = SimpleGraph.complete(6)
        c = EdgeColoring.from_colors(host, [i % 2 for i in range(15)])
        self.assertIsNone(find_rainbow_string_tie(c, 2, 2, 2))

    def test_rainbow_k7(self):
        c = EdgeColoring.rainbow(SimpleGraph.complete(7))
        tie = find_rainbow_string_tie(c, 2, 2, 2)
        self.assertIsNotNone(tie)
        self.assertIsTrue(validate_string_tie(tie, c.host).valid)
        self.assertEqual(tie.base.length, 2)
        self.assertIsTrue(c.is_rainbow(tie.edge_mask(7)))

    @parameterized.expand([(2,), (4,)])
    def test_threads(self, threads):
        c = EdgeColoring.rainbow(SimpleGraph.complete(7))
        self.assertEqual(find_rainbow_string_tie(c, 2, 2, 2, threads),
                         find_rainbow_string_tie(c, 2, 2, 2))

    def test_max_len_one(self):
        c = EdgeColoring.rainbow(SimpleGraph.complete(7))
        self.assertIsNone(find_rainbow_string_tie(c, 2, 2, 1))

    def test_invalid(self):
        c = EdgeColoring.rainbow(SimpleGraph.complete(5))
        with self.assertRaises(UnsupportedParameterError):
            find_rainbow_string_tie(c, 2, 2, 0)
        with self.assertRaises(UnsupportedParameterError):
            find_rainbow_string_tie(c, 1, 2, 2)


class TestRingToTie(TestCase):
    def test_disjoint_exteriors(self):
        C2 = KstCopy((1, 2), (5, 6))
        C3 = KstCopy((0, 2), (7, 8))
        ring = KstRing.of([B1, C2, C3])
        host = SimpleGraph.complete(10)
        tie = ring_to_string_tie(ring, host)
        self.assertEqual(tie, StringTie(KstString((C2, C3)), 3, (1,), 0))
        self.assertIsTrue(validate_string_tie(tie, host).valid)

    def test_apex_from_first_exterior(self):
        A1 = KstCopy((0, 1), (7, 8))
        A2 = KstCopy((1, 2), (3, 4))
        A3 = KstCopy((0, 2), (5, 6))
        host = SimpleGraph.complete(10)
        tie = ring_to_string_tie(KstRing.of([A1, A2, A3]), host)
        self.assertEqual(tie, StringTie(KstString((A2, A3)), 7, (1,), 0))
        self.assertIn(tie.apex, A1.Y)
        self.assertIsTrue(validate_string_tie(tie, host).valid)

    def test_shared_exterior(self):
        copies = [KstCopy((0, 1), (10, 11)), KstCopy((1, 2), (12, 13)),
                  KstCopy((2, 3), (14, 15)), KstCopy((3, 4), (10, 16)),
                  KstCopy((0, 4), (17, 18))]
        host = SimpleGraph.complete(19)
        ring = KstRing.of(copies)
        self.assertIsTrue(validate_ring(ring, host).valid)
        tie = ring_to_string_tie(ring, host)
        self.assertEqual(
            tie, StringTie(KstString((copies[1], copies[2])), 10, (1,), 3))
        report = validate_string_tie(tie, host)
        self.assertIsTrue(report.valid)
        self.assertNotIn(APEX_IN_EXTERIOR, report.flags)

    def test_length_two(self):
        with self.assertRaises(NotExtractableError):
            ring_to_string_tie(KstRing.of([B1, B2]), SimpleGraph.complete(7))

    def test_invalid_ring(self):
        B3 = KstCopy((2, 7), (8, 9))
        with self.assertRaises(NotExtractableError):
            ring_to_string_tie(KstRing.of([B1, B2, B3]),
                               SimpleGraph.complete(10))

    def test_equal_interiors(self):
        ring = KstRing.of([KstCopy((0, 1), (2, 3)), KstCopy((0, 1), (4, 5)),
                           KstCopy((0, 1), (6, 7))])
        with self.assertRaises(NotExtractableError):
            ring_to_string_tie(ring, SimpleGraph.complete(9))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=2, max_value=3),
           st.integers(min_value=1, max_value=3),
           st.integers(min_value=3, max_value=5),
           st.booleans(), st.randoms(use_true_random=False))
    def test_random_rings(self, s, t, length, overlap, rnd):
        ring, host = random_ring(s, t, length, rnd, overlap)
        self.assertIsTrue(validate_ring(ring, host).valid)
        try:
            tie = ring_to_string_tie(ring, host)
        except NotExtractableError:
            return
        self.assertIsTrue(validate_string_tie(tie, host).valid)
        self.assertLess(tie.base.length, ring.length)
        self.assertLessEqual(set(tie.base.copies), set(ring.copies))


class TestPacking(TestCase):
    def test_k4(self):
        P = greedy_maximal_packing(SimpleGraph.complete(4), 2, 2)
        self.assertEqual(P.copies, (KstCopy((0, 1), (2, 3)),))
        self.assertIsTrue(P.maximal)
        self.assertIsTrue(validate_packing(P).valid)
        self.assertEqual(residual_copies(P), [])

    def test_edgeless(self):
        P = greedy_maximal_packing(SimpleGraph.empty(5), 2, 2)
        self.assertEqual(P.k, 0)
        self.assertIsTrue(validate_packing(P).valid)

    def test_k9_maximal(self):
        P = greedy_maximal_packing(SimpleGraph.complete(9), 2, 2)
        self.assertIsTrue(validate_packing(P).valid)
        self.assertGreaterEqual(P.k, 1)

    def test_not_maximal(self):
        P = Packing(SimpleGraph.complete(6), (KstCopy((0, 1), (2, 3)),),
                    2, 2, maximal=True)
        self.assertEqual(validate_packing(P).violations, (MAXIMALITY,))

    def test_shared_edge(self):
        P = Packing(SimpleGraph.complete(4), (KstCopy((0, 1), (2, 3)),
                                              KstCopy((0, 2), (1, 3))), 2, 2)
        self.assertIn(EDGE_DISJOINTNESS, validate_packing(P).violations)

    def test_interior_paths(self):
        P = Packing(SimpleGraph.complete(9), (KstCopy((0, 1, 2), (6, 7)),
                                              KstCopy((0, 1, 3), (4, 5))),
                    3, 2)
        F, generator = interior_path_multigraph(P)
        self.assertEqual(F.num_edges, 4)
        self.assertEqual(F.as_dict(), {(0, 1): 2, (1, 2): 1, (1, 3): 1})
        self.assertEqual(generator, {(0, 1): 0, (1, 2): 0, (1, 3): 1})


class TestPackingToRing(TestCase):
    def test_single(self):
        P = greedy_maximal_packing(SimpleGraph.complete(4), 2, 2)
        self.assertIsNone(packing_to_ring(P))

    def test_disjoint_interiors(self):
        P = Packing(SimpleGraph.complete(8), (KstCopy((0, 1), (4, 5)),
                                              KstCopy((2, 3), (6, 7))), 2, 2)
        self.assertIsNone(packing_to_ring(P))

    def test_shared_interior(self):
        copies = (KstCopy((0, 1), (2, 3)), KstCopy((0, 1), (4, 5)))
        P = Packing(SimpleGraph.complete(6), copies, 2, 2)
        ring = packing_to_ring(P)
        self.assertEqual(ring.copies, copies)
        self.assertIsTrue(validate_ring(ring, P.host).valid)

    def test_greedy_dense(self):
        P = greedy_maximal_packing(SimpleGraph.complete(8), 2, 2)
        if P.k > 7:
            ring = packing_to_ring(P)
            self.assertIsNotNone(ring)
            self.assertIsTrue(validate_ring(ring, P.host).valid)

    def test_triangle_of_interiors(self):
        copies = (KstCopy((0, 1), (3, 4)), KstCopy((0, 2), (5, 6)),
                  KstCopy((1, 2), (7, 8)))
        P = Packing(SimpleGraph.complete(9), copies, 2, 2)
        ring = packing_to_ring(P)
        self.assertIsTrue(validate_ring(ring, P.host).valid)
        self.assertEqual(ring.length, 3)
        self.assertEqual(ring.copies[0], copies[0])

    def test_k9_decomposition(self):
        P = c4_decomposition_packing(9)
        self.assertEqual(P.k, 9)
        self.assertIsTrue(validate_packing(P).valid)
        F, _ = interior_path_multigraph(P)
        self.assertEqual(F.num_edges, 9)
        ring = packing_to_ring(P)
        self.assertIsNotNone(ring)
        self.assertIsTrue(validate_ring(ring, P.host).valid)
        self.assertLessEqual(set(ring.copies), set(P.copies))
