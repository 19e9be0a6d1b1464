# -*- coding: utf-8 -*-

"""
test_plane
----------------------------------

Tests for `secants.plane` module.
"""

from __future__ import absolute_import, unicode_literals, print_function

import itertools
import unittest

import numpy as np

from secants.errors import PlaneError
from secants.field import make_field
from secants.plane import build_plane, line_through, plane_of_order


def incidence_matrix(plane):
    matrix = np.zeros((plane.N, plane.N), dtype=np.int64)
    rows = np.repeat(np.arange(plane.N), plane.q + 1)
    matrix[rows, plane.incidence.ravel()] = 1
    return matrix


class ProjectivePlaneTest(unittest.TestCase):

    def test_sizes(self):
        for q, n in ((2, 7), (3, 13), (4, 21), (9, 91)):
            plane = plane_of_order(q)
            self.assertEqual(n, plane.N)
            self.assertEqual((n, 3), plane.triples.shape)
            self.assertEqual((n, q + 1), plane.incidence.shape)

    def test_closed_form_index(self):
        plane = plane_of_order(5)
        self.assertEqual(0, plane.index_of(0, 0, 1))
        self.assertEqual(4, plane.index_of(0, 1, 3))
        self.assertEqual(1 + 5 + 2 * 5 + 3, plane.index_of(1, 2, 3))
        self.assertEqual(plane.index_of(1, 2, 3), plane.index_of(2, 4, 1))

    def test_index_round_trip(self):
        for q in (4, 7, 9):
            plane = plane_of_order(q)
            field = plane.field
            triples = plane.triples
            expected = np.arange(plane.N)
            self.assertTrue(np.array_equal(expected, plane.index_of(triples[:, 0], triples[:, 1], triples[:, 2])))
            scale = field.primitive_element()
            scaled = field.mul(triples, scale)
            self.assertTrue(np.array_equal(expected, plane.index_of(scaled[:, 0], scaled[:, 1], scaled[:, 2])))

    def test_zero_triple(self):
        with self.assertRaises(PlaneError):
            plane_of_order(3).index_of(0, 0, 0)

    def test_axioms(self):
        for q in (2, 3, 4, 5, 7, 8, 9):
            plane = plane_of_order(q)
            matrix = incidence_matrix(plane)
            off_diagonal = ~np.eye(plane.N, dtype=bool)
            points = matrix.T.dot(matrix)
            lines = matrix.dot(matrix.T)
            self.assertTrue(np.all(points[off_diagonal] == 1), 'two points, one line (q=%d)' % q)
            self.assertTrue(np.all(lines[off_diagonal] == 1), 'two lines, one point (q=%d)' % q)
            self.assertTrue(np.all(np.diag(points) == q + 1))
            self.assertTrue(np.all(matrix.sum(axis=1) == q + 1))

    def test_incidence_agrees_with_dot_product(self):
        for q in (4, 5, 9):
            plane = plane_of_order(q)
            field = plane.field
            lines = np.repeat(plane.triples, q + 1, axis=0)
            points = plane.triples[plane.incidence.ravel()]
            dot = field.add(field.add(field.mul(lines[:, 0], points[:, 0]), field.mul(lines[:, 1], points[:, 1])),
                            field.mul(lines[:, 2], points[:, 2]))
            self.assertTrue(np.all(dot == 0))

    def test_incident(self):
        plane = plane_of_order(3)
        for line in range(plane.N):
            on = set(int(i) for i in plane.points_on(line))
            for point in range(plane.N):
                self.assertEqual(point in on, plane.incident(point, line))

    def test_duality(self):
        plane = plane_of_order(4)
        for point, line in itertools.product(range(plane.N), repeat=2):
            self.assertEqual(point in plane.points_on(line), line in plane.lines_through(point))
        self.assertTrue(np.array_equal(plane.point_lines, plane.line_points))

    def test_block_generation_matches_table(self):
        plane = build_plane(make_field(5))
        blocks = list(plane.line_blocks(3, 20))
        self.assertEqual(3, blocks[0][0])
        generated = np.concatenate([indices for _, indices in blocks])
        self.assertTrue(np.array_equal(plane.incidence[3:20], generated))

    def test_large_plane_has_no_table(self):
        plane = plane_of_order(257)
        self.assertFalse(plane.has_incidence_table)
        with self.assertRaises(PlaneError):
            plane.incidence
        at_infinity = plane.points_on(0)
        self.assertEqual(258, len(at_infinity))
        self.assertTrue(np.all(plane.triples[at_infinity][:, 2] == 0))
        first, block = next(plane.line_blocks(100, 110))
        self.assertEqual((10, 258), block.shape)

    def test_line_through(self):
        plane = plane_of_order(2)
        self.assertEqual(plane.index_of(1, 0, 0), line_through(plane, plane.index_of(0, 0, 1), plane.index_of(0, 1, 0)))
        self.assertEqual(plane.index_of(0, 0, 1), plane.line_through(plane.index_of(1, 0, 0), plane.index_of(0, 1, 0)))

        plane = plane_of_order(3)
        first, second = plane.index_of(1, 1, 1), plane.index_of(1, 2, 1)
        line = plane.line_through(first, second)
        self.assertTrue(plane.incident(first, line))
        self.assertTrue(plane.incident(second, line))

    def test_identical_points(self):
        plane = plane_of_order(3)
        with self.assertRaisesRegex(PlaneError, 'identical points'):
            plane.line_through(5, 5)
        with self.assertRaisesRegex(PlaneError, 'identical lines'):
            plane.meet(2, 2)

    def test_meet(self):
        plane = plane_of_order(8)
        rng = np.random.default_rng(8)
        for _ in range(100):
            first, second = (int(v) for v in rng.choice(plane.N, size=2, replace=False))
            point = plane.meet(first, second)
            self.assertTrue(plane.incident(point, first))
            self.assertTrue(plane.incident(point, second))

    def test_dump(self):
        rows = plane_of_order(2).dump()
        self.assertEqual(7, len(rows))
        self.assertEqual((0, 0, 0, 1), rows[0])
        self.assertEqual((6, 1, 1, 1), rows[-1])
        with self.assertRaises(PlaneError):
            plane_of_order(2).dump('planes')


class AffineFrameTest(unittest.TestCase):

    def test_affine_points(self):
        plane = plane_of_order(5)
        frame = plane.affine_embed()
        points = frame.all_points()
        self.assertEqual(25, frame.size)
        self.assertEqual(25, len(set(int(i) for i in points)))
        self.assertTrue(np.all(plane.triples[points][:, 2] != 0))
        self.assertEqual(25, int(frame.affine_mask().sum()))

    def test_line_at_infinity(self):
        plane = plane_of_order(5)
        frame = plane.affine_embed()
        at_infinity = plane.points_on(frame.infinite_line)
        self.assertEqual(6, len(at_infinity))
        self.assertTrue(np.all(plane.triples[at_infinity][:, 2] == 0))

    def test_line_contains_its_graph(self):
        plane = plane_of_order(5)
        frame = plane.affine_embed()
        on = set(int(i) for i in plane.points_on(frame.line(1, 0)))
        for x in range(5):
            self.assertIn(frame.point(x, x), on)
        self.assertEqual(1, sum(1 for i in on if plane.triple(i)[2] == 0))

        field = plane.field
        on = set(int(i) for i in plane.points_on(frame.line(3, 2)))
        for x in range(5):
            self.assertIn(frame.point(x, field.add(field.mul(3, x), 2)), on)

    def test_vertical_line(self):
        plane = plane_of_order(7)
        frame = plane.affine_embed()
        on = set(int(i) for i in plane.points_on(frame.vertical(2)))
        for y in range(7):
            self.assertIn(frame.point(2, y), on)
        self.assertIn(plane.index_of(0, 1, 0), on)

    def test_parallel_lines_meet_at_infinity(self):
        plane = plane_of_order(7)
        frame = plane.affine_embed()
        point = plane.meet(frame.line(2, 0), frame.line(2, 3))
        self.assertEqual(plane.index_of(1, 2, 0), point)

    def test_coordinates(self):
        plane = plane_of_order(5)
        frame = plane.affine_embed()
        self.assertEqual((3, 4), frame.coordinates(frame.point(3, 4)))
        self.assertIsNone(frame.coordinates(plane.index_of(0, 1, 0)))

    def test_extension_field_frame(self):
        plane = plane_of_order(4)
        frame = plane.affine_embed()
        self.assertEqual(16, len(set(int(i) for i in frame.all_points())))
        for d, b in itertools.product(range(4), repeat=2):
            on = set(int(i) for i in plane.points_on(frame.line(d, b)))
            field = plane.field
            for x in range(4):
                self.assertIn(frame.point(x, field.add(field.mul(d, x), b)), on)
