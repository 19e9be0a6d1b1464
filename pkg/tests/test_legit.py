# -*- coding: utf-8 -*-

"""
test_legit
----------------------------------

Tests for `secants.legit` module.
"""

from __future__ import absolute_import, unicode_literals, print_function

import itertools
import os
import shutil
import tempfile
import unittest

from secants.errors import ColoringError, HypergraphError, UncoloredVertexError
from secants.legit import (BLUE, GENERATOR_MODES, RED, LinearHypergraph, generate_linear_hypergraph,
                           multiplicity_lists, permute_edges, read_coloring, read_hypergraph, target,
                           two_phase_coloring, verify_legitimate, write_coloring, write_hypergraph)

from . import SLOW


class LinearHypergraphTest(unittest.TestCase):

    def test_valid(self):
        hypergraph = LinearHypergraph(2, [[0, 1], [1, 2]])
        self.assertEqual(3, hypergraph.num_vertices)
        self.assertEqual(((1,), (1, 2), (2,)), hypergraph.edges_of)
        self.assertEqual([0], hypergraph.private_vertices(1))
        self.assertEqual(1, hypergraph.intersection(1, 2))
        self.assertEqual({2: 1}, hypergraph.neighbors(1))

    def test_invalid(self):
        cases = (
            (2, [[0, 1], [2]]),
            (2, [[0, 1]]),
            (3, [[0, 1, 2], [0, 1, 3], [4, 5, 6]]),
            (2, [[0, 0], [1, 2]]),
            (0, []),
        )
        for n, edges in cases:
            with self.assertRaises(HypergraphError):
                LinearHypergraph(n, edges)
        with self.assertRaises(HypergraphError):
            LinearHypergraph(2, [[0, 1], [2, 3]], num_vertices=3)

    def test_captured(self):
        # F_1 and F_2 share 0, F_3 meets F_2 in 0 as well, so that meeting was captured by F_1
        hypergraph = LinearHypergraph(3, [[0, 1, 2], [0, 3, 4], [0, 5, 6]])
        self.assertTrue(hypergraph.captured(3, 2))
        self.assertFalse(hypergraph.captured(2, 1))


class TargetTest(unittest.TestCase):

    def test_targets_are_distinct(self):
        for n in range(1, 80):
            targets = [target(n, i) for i in range(1, n + 1)]
            self.assertEqual(n, len(set(targets)))
            self.assertTrue(all(0 <= t <= n for t in targets))

    def test_values(self):
        self.assertEqual([3, 1, 2], [target(3, i) for i in (1, 2, 3)])
        self.assertEqual([2, 1], [target(2, i) for i in (1, 2)])


class TwoPhaseColoringTest(unittest.TestCase):

    def test_single_edge(self):
        coloring = two_phase_coloring(LinearHypergraph(1, [[0]]))
        self.assertEqual((BLUE,), coloring.colors)
        self.assertEqual((1,), coloring.blue_counts)

    def test_two_edges_sharing_a_vertex(self):
        coloring = two_phase_coloring(LinearHypergraph(2, [[0, 1], [1, 2]]))
        self.assertEqual((2, 1), coloring.blue_counts)
        self.assertEqual((0, 0), coloring.recolors)
        self.assertEqual((BLUE, BLUE, RED), coloring.colors)

    def test_disjoint_triples(self):
        hypergraph = LinearHypergraph(3, [[0, 1, 2], [3, 4, 5], [6, 7, 8]])
        coloring = two_phase_coloring(hypergraph)
        self.assertEqual((3, 0, 3), tuple(d.phase1_blue for d in coloring.diagnostics))
        self.assertEqual((3, 1, 2), coloring.blue_counts)
        self.assertEqual((0, 1, 1), coloring.recolors)
        self.assertEqual(BLUE, coloring.colors[3])
        self.assertEqual(RED, coloring.colors[6])
        self.assertEqual((2, 2, 2), tuple(d.disjoint for d in coloring.diagnostics))
        self.assertEqual((3, 3, 3), tuple(d.private for d in coloring.diagnostics))

    def test_uncolored(self):
        hypergraph = LinearHypergraph(2, [[0, 1], [2, 3]])
        with self.assertRaises(UncoloredVertexError):
            verify_legitimate(hypergraph, [BLUE, BLUE, None, RED])
        with self.assertRaises(UncoloredVertexError):
            verify_legitimate(hypergraph, [BLUE, BLUE, RED])
        with self.assertRaises(UncoloredVertexError):
            verify_legitimate(hypergraph, [BLUE, BLUE, 'green', RED])

    def test_collision_certificate(self):
        hypergraph = LinearHypergraph(2, [[0, 1], [2, 3]])
        legitimate, certificate = verify_legitimate(hypergraph, [BLUE] * 4)
        self.assertFalse(legitimate)
        self.assertEqual([1, 2], certificate['pair'])
        self.assertEqual([(2, 0), (2, 0)], multiplicity_lists(hypergraph, [BLUE] * 4))

    def test_coloring_error_carries_the_edge(self):
        error = ColoringError('edge 3 is stuck', edge=3, diagnostics={'private': 0})
        self.assertEqual(3, error.edge)
        self.assertEqual({'private': 0}, error.diagnostics)

    def assert_legitimate(self, hypergraph):
        coloring = two_phase_coloring(hypergraph)
        n = hypergraph.n
        legitimate, certificate = verify_legitimate(hypergraph, coloring)
        self.assertTrue(legitimate, certificate['pair'])
        self.assertEqual(coloring.targets, coloring.blue_counts)
        self.assertEqual(tuple(target(n, i) for i in range(1, n + 1)), coloring.targets)
        self.assertTrue(all(d.feasible for d in coloring.diagnostics))
        for v, color in enumerate(coloring.colors):
            first = hypergraph.edges_of[v][0]
            if color != (BLUE if first % 2 else RED):
                self.assertEqual(1, len(hypergraph.edges_of[v]), 'recolored a shared vertex %d' % v)
        self.assertEqual(coloring.colors, two_phase_coloring(hypergraph).colors)

    def assert_corpus(self, sizes, seeds):
        for n, seed, mode in itertools.product(sizes, seeds, GENERATOR_MODES):
            hypergraph = generate_linear_hypergraph(n, seed, mode=mode)
            self.assert_legitimate(hypergraph)
            self.assert_legitimate(permute_edges(hypergraph, seed + 1))

    def test_corpus(self):
        self.assert_corpus(range(1, 26), range(4))

    @unittest.skipUnless(SLOW, 'set SECANTS_SLOW=1 to run')
    def test_full_corpus(self):
        self.assert_corpus(range(1, 61), range(50))

    def test_dense_and_sparse(self):
        for probability in (0.0, 1.0):
            self.assert_legitimate(generate_linear_hypergraph(12, 7, intersection_probability=probability))


class GeneratorTest(unittest.TestCase):

    def test_shapes(self):
        self.assertEqual(1, generate_linear_hypergraph(1, 0).num_vertices)
        hypergraph = generate_linear_hypergraph(3, 0, intersection_probability=0.0)
        self.assertEqual(9, hypergraph.num_vertices)

    def test_complete_pairwise(self):
        hypergraph = generate_linear_hypergraph(6, 0, intersection_probability=1.0)
        for i, j in itertools.combinations(range(1, 7), 2):
            self.assertIsNotNone(hypergraph.intersection(i, j))

    def test_linear_and_uniform(self):
        for n, seed, mode in itertools.product((4, 9, 15), range(5), GENERATOR_MODES):
            hypergraph = generate_linear_hypergraph(n, seed, mode=mode)
            self.assertEqual(n, len(hypergraph.edges))
            for first, second in itertools.combinations(hypergraph.edges, 2):
                self.assertLessEqual(len(set(first) & set(second)), 1)
            self.assertTrue(all(len(edge) == n for edge in hypergraph.edges))

    def test_sunflower_shares_vertices(self):
        hypergraph = generate_linear_hypergraph(10, 3, mode='sunflower', intersection_probability=0.0)
        self.assertTrue(any(len(edges) >= 3 for edges in hypergraph.edges_of))

    def test_seeded(self):
        self.assertEqual(generate_linear_hypergraph(8, 4, mode='mixed'), generate_linear_hypergraph(8, 4, mode='mixed'))

    def test_unknown_mode(self):
        with self.assertRaises(HypergraphError):
            generate_linear_hypergraph(4, 0, mode='star')

    def test_permute_edges(self):
        hypergraph = generate_linear_hypergraph(7, 2)
        permuted = permute_edges(hypergraph, 9)
        self.assertEqual(sorted(hypergraph.edges), sorted(permuted.edges))
        self.assertEqual(permuted, permute_edges(hypergraph, 9))


class FilesTest(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_round_trip(self):
        hypergraph = generate_linear_hypergraph(5, 1)
        path = os.path.join(self.directory, 'h.json')
        write_hypergraph(path, hypergraph)
        self.assertEqual(hypergraph, read_hypergraph(path))

        coloring = two_phase_coloring(hypergraph)
        coloring_path = os.path.join(self.directory, 'c.json')
        write_coloring(coloring_path, coloring)
        self.assertEqual(list(coloring.colors), read_coloring(coloring_path))
        self.assertTrue(verify_legitimate(hypergraph, read_coloring(coloring_path))[0])

    def test_malformed(self):
        path = os.path.join(self.directory, 'bad.json')
        with open(path, 'w') as handle:
            handle.write('{"edges": [[0]]}')
        with self.assertRaises(HypergraphError):
            read_hypergraph(path)
