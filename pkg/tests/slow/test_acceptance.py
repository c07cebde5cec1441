#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Longer runs: exact values, full bound tables and large sample streams."""

import io
import sys
from copy import copy
from unittest import mock

from parameterized import parameterized

from arlab.antiramsey import ar_exact, theorem_bound
from arlab.cli import EXIT_OK, main
from arlab.extremal import kst_family, minus_one_edge_family, turan_exact
from arlab.graph import SimpleGraph, has_rainbow_copy, simplify_multigraph
from arlab.harness import (FAIL, INCONCLUSIVE, PASS, c4_decomposition_packing,
                           random_dense_packing, verify_bounds,
                           verify_lemma1, verify_lemma2, verify_lemma3)
from arlab.options import config
from arlab.structures import (interior_path_multigraph, packing_to_ring,
                              validate_ring)
from arlab.util import instance_rng

from ..base import TestCase

_config = copy(vars(config))


def brute_force_ex(n, family):
    """Largest free subgraph of K_n by scanning every edge subset."""
    host = SimpleGraph.complete(n)
    best = 0
    for mask in range(1 << host.num_edges):
        edges = bin(mask).count('1')
        if edges > best and family.is_free(SimpleGraph(n, mask)):
            best = edges
    return best


class TestExactValues(TestCase):
    @parameterized.expand([
        ('c4_4', 4, kst_family(2, 2), 4),
        ('c4_5', 5, kst_family(2, 2), 6),
        ('p4_4', 4, minus_one_edge_family(2, 2), 3),
        ('p3_4', 4, kst_family(2, 1), 2),
    ])
    def test_turan(self, _, n, family, value):
        result = turan_exact(n, family, threads=1)
        self.assertIsTrue(result.exact)
        self.assertEqual(result.value, value)
        self.assertEqual(brute_force_ex(n, family), value)

    def test_ar_k4(self):
        result = ar_exact(4, 2, 2, threads=1)
        self.assertIsTrue(result.exact)
        self.assertEqual(result.value, 4)
        self.assertIsNone(has_rainbow_copy(result.witness, 2, 2))

    @parameterized.expand([(5, 5), (6, 7)])
    def test_ar_c4(self, n, value):
        result = ar_exact(n, 2, 2)
        self.assertIsTrue(result.exact)
        self.assertEqual(result.value, value)
        self.assertEqual(theorem_bound(n, 2, 2).ar, value)


class TestBoundTables(TestCase):
    @parameterized.expand([(2, 2), (2, 3)])
    def test_no_violations(self, s, t):
        runs, reports = verify_bounds(6, s, t)
        for run in runs:
            self.assertNotEqual(run.outcome, FAIL, run.summary())
        for report in reports:
            if report.exact:
                self.assertEqual(report.violations(), [])
                self.assertLessEqual(report.lower, report.ar)
                self.assertLessEqual(report.ar, report.upper_rep)
                self.assertLessEqual(report.ar, report.upper_thm)
                self.assertLessEqual(report.ar, float(report.upper_kst))

    def test_c4_rows(self):
        _, reports = verify_bounds(6, 2, 2, n_min=5)
        rows = [(r.n, r.lower, r.ar, r.upper_rep) for r in reports]
        self.assertEqual(rows, [(5, 5, 5, 6), (6, 7, 7, 7)])


class TestLemmaSuites(TestCase):
    @parameterized.expand([(6, 2, 2), (7, 2, 2), (7, 2, 3)])
    def test_lemma1(self, n, s, t):
        run = verify_lemma1(n, s, t, 1000, max_len=3, seed=0)
        self.assertNotEqual(run.outcome, FAIL)
        self.assertEqual(run.checked, 1000)
        if t == 2:
            self.assertEqual(run.outcome, PASS)
            self.assertGreater(run.eligible, 0)

    def test_lemma1_too_few_colors(self):
        run = verify_lemma1(6, 2, 3, 1000, max_len=3, seed=0)
        self.assertEqual(run.outcome, INCONCLUSIVE)
        self.assertEqual(run.eligible, 0)

    @parameterized.expand([(2, 2), (3, 2), (3, 3)])
    def test_lemma2(self, s, t):
        run = verify_lemma2(s, t, 100, seed=0)
        self.assertNotEqual(run.outcome, FAIL)
        self.assertEqual(run.checked, 100)
        for cert in run.inconclusive:
            self.assertIn('note', cert)

    def test_lemma3_decomposition(self):
        P = c4_decomposition_packing(9)
        F, _ = interior_path_multigraph(P)
        self.assertEqual(F.num_edges, P.k)
        ring = packing_to_ring(P)
        self.assertIsNotNone(ring)
        self.assertIsTrue(validate_ring(ring, P.host).valid)

    def test_lemma3_dense_packings(self):
        for index in range(50):
            P = random_dense_packing(9, 2, 2, instance_rng(0, index))
            F, _ = interior_path_multigraph(P)
            self.assertEqual(F.num_edges, P.k)
            self.assertGreaterEqual(simplify_multigraph(F).num_edges, P.k)
        self.assertEqual(verify_lemma3(9, 2, 2, 50, seed=0).outcome, PASS)

    def test_lemma3_numeric(self):
        run = verify_lemma3(6, 2, 2, 500, seed=4)
        self.assertEqual(run.outcome, PASS)


class TestDeterminism(TestCase):
    def tearDown(self):
        vars(config).clear()
        vars(config).update(_config)
        super().tearDown()

    def run_main(self, *argv):
        out = io.StringIO()
        with mock.patch.object(sys, 'stdout', out):
            code = main(list(argv))
        self.assertEqual(code, EXIT_OK)
        return out.getvalue()

    @parameterized.expand([
        ('bounds', ['bounds', '--n', '5', '--s', '2', '--t', '2']),
        ('ar', ['ar', '--n', '5', '--s', '2', '--t', '2']),
        ('lemma1', ['verify', 'lemma1', '--n', '6', '--s', '2', '--t', '2',
                    '--samples', '50', '--max-len', '3']),
        ('lemma2', ['verify', 'lemma2', '--s', '2', '--t', '2',
                    '--instances', '100', '--overlap-exteriors']),
        ('lemma3', ['verify', 'lemma3', '--n', '9', '--s', '2', '--t', '2',
                    '--trials', '20']),
    ])
    def test_threads(self, _, argv):
        outputs = {self.run_main('--seed', '7', '--threads', str(threads),
                                 *argv)
                   for threads in (1, 2, 8)}
        self.assertEqual(len(outputs), 1)
