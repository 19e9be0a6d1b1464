# -*- coding: utf-8 -*-

"""
test_construct
----------------------------------

Tests for `secants.construct` module.
"""

from __future__ import absolute_import, unicode_literals, print_function

import os
import shutil
import tempfile
import unittest
from fractions import Fraction

import numpy as np

from secants.construct import (RANDOM_GENERATOR, FamilyParams, build_construction, ec_region, family_params,
                               parabola_family, parabola_params, parabola_region, parse_construction,
                               point_set_from_payload, random_set, read_set_file, write_set_file)
from secants.errors import ParameterError
from secants.plane import plane_of_order
from secants.spectrum import PointSet


def column_counts(point_set):
    """
    Number of points of the set in each affine column x = 0..p-1.
    """
    frame = point_set.plane.affine_embed()
    counts = [0] * point_set.plane.q
    for index in point_set.indices():
        coordinates = frame.coordinates(index)
        if coordinates is not None:
            counts[coordinates[0]] += 1
    return counts


class RandomSetTest(unittest.TestCase):

    def test_extreme_densities(self):
        plane = plane_of_order(7)
        self.assertEqual(0, random_set(plane, 0, 3).size)
        self.assertEqual(plane.N, random_set(plane, 1, 3).size)

    def test_seeded(self):
        plane = plane_of_order(11)
        self.assertEqual(random_set(plane, Fraction(1, 2), 5), random_set(plane, '1/2', 5))
        self.assertNotEqual(random_set(plane, Fraction(1, 2), 5), random_set(plane, Fraction(1, 2), 6))

    def test_size_concentrates(self):
        plane = plane_of_order(499)
        point_set = random_set(plane, Fraction(1, 2), 0)
        self.assertLessEqual(abs(point_set.size - plane.N / 2.0), 4 * np.sqrt(plane.N / 4.0))

    def test_bad_density(self):
        plane = plane_of_order(3)
        with self.assertRaises(ParameterError):
            random_set(plane, Fraction(3, 2), 0)
        with self.assertRaises(ParameterError):
            random_set(plane, 'half', 0)
        with self.assertRaises(ParameterError):
            random_set(plane, Fraction(1, 2), -1)


class ParabolaRegionTest(unittest.TestCase):

    def test_p5(self):
        plane = plane_of_order(5)
        point_set = parabola_region(plane, parabola_params(plane.field, 1, 0, 0))
        frame = plane.affine_embed()
        self.assertEqual(10, point_set.size)
        self.assertEqual([4, 3, 0, 0, 3], column_counts(point_set))
        self.assertIn(frame.point(1, 2), point_set)
        self.assertNotIn(frame.point(2, 1), point_set)

    def test_p7(self):
        plane = plane_of_order(7)
        point_set = parabola_region(plane, parabola_params(plane.field, 1, 0, 0))
        self.assertEqual(28, point_set.size)
        self.assertEqual([6, 5, 2, 4, 4, 2, 5], column_counts(point_set))

    def test_no_points_at_infinity(self):
        plane = plane_of_order(11)
        point_set = parabola_region(plane, parabola_params(plane.field, '1/4', 1, 1))
        self.assertFalse(np.any(point_set.mask[plane.points_on(plane.affine_embed().infinite_line)]))

    def test_rational_parameters(self):
        field = plane_of_order(5).field
        params = parabola_params(field, '1/4', 1, 1)
        self.assertEqual((4, 1, 1), (params.alpha, params.beta, params.gamma))
        with self.assertRaises(ParameterError):
            parabola_params(field, '1/5', 1, 1)

    def test_rejected_planes(self):
        with self.assertRaises(ParameterError):
            parabola_region(plane_of_order(3), parabola_params(plane_of_order(3).field, 1, 0, 0))
        with self.assertRaises(ParameterError):
            parabola_region(plane_of_order(4), parabola_params(plane_of_order(5).field, 1, 0, 0))
        with self.assertRaises(ParameterError):
            parabola_region(plane_of_order(5), parabola_params(plane_of_order(5).field, 0, 1, 1))


class ParabolaFamilyTest(unittest.TestCase):

    def test_examples(self):
        plane = plane_of_order(7)
        point_set = parabola_family(plane, family_params('3/10'))
        self.assertEqual(14, point_set.size)
        self.assertIn(plane.affine_embed().point(3, 3), point_set)
        self.assertEqual([2] * 7, column_counts(point_set))

        plane = plane_of_order(11)
        self.assertEqual(55, parabola_family(plane, family_params(Fraction(1, 2))).size)

    def test_a(self):
        self.assertEqual(2, FamilyParams(3, 10).a(7))
        self.assertEqual(Fraction(1, 2), family_params('2/4').c)

    def test_out_of_range(self):
        for c in ('0', '1', '3/2', '-1/3'):
            with self.assertRaises(ParameterError):
                family_params(c)
        with self.assertRaises(ParameterError):
            parabola_family(plane_of_order(7), family_params('1/100'))


class EcRegionTest(unittest.TestCase):

    def test_p5(self):
        plane = plane_of_order(5)
        point_set = ec_region(plane)
        frame = plane.affine_embed()
        self.assertEqual(15, point_set.size)
        self.assertIn(frame.point(0, 0), point_set)
        self.assertIn(frame.point(1, 2), point_set)

    def test_each_column_holds_half(self):
        for p in (7, 11, 13):
            point_set = ec_region(plane_of_order(p))
            self.assertEqual([(p + 1) // 2] * p, column_counts(point_set))

    def test_rejected_planes(self):
        with self.assertRaises(ParameterError):
            ec_region(plane_of_order(3))
        with self.assertRaises(ParameterError):
            ec_region(plane_of_order(9))


class ParseConstructionTest(unittest.TestCase):

    def test_random(self):
        spec = parse_construction('random:density=1/2,seed=7')
        self.assertEqual('random', spec.kind)
        self.assertEqual('7', spec.get('seed'))
        self.assertEqual('random:density=1/2,seed=7', spec.text)
        self.assertEqual('random:density=1/2', parse_construction('random').text)

    def test_defaults(self):
        self.assertEqual('parabola:a=1/4,b=1,g=1', parse_construction('parabola:g=1,a=1/4,b=1').text)
        self.assertEqual('parabola:a=1,b=0,g=0', parse_construction('parabola').text)
        self.assertEqual('ecregion', parse_construction(' ECREGION ').text)

    def test_errors(self):
        for text in ('circle', 'random:radius=2', 'family', 'family:c=2', 'parabola:a', 'random:density=x'):
            with self.assertRaises(ParameterError):
                parse_construction(text)


class BuildConstructionTest(unittest.TestCase):

    def test_seed_precedence(self):
        plane = plane_of_order(7)
        spec = parse_construction('random:density=1/2,seed=7')
        point_set, metadata = build_construction(plane, spec)
        self.assertEqual(7, metadata['seed'])
        self.assertEqual(RANDOM_GENERATOR, metadata['generator'])
        self.assertEqual(random_set(plane, Fraction(1, 2), 7), point_set)

        point_set, metadata = build_construction(plane, spec, seed=3)
        self.assertEqual(3, metadata['seed'])
        self.assertEqual(random_set(plane, Fraction(1, 2), 3), point_set)

    def test_explicit_kinds(self):
        plane = plane_of_order(5)
        point_set, metadata = build_construction(plane, parse_construction('parabola:a=1,b=0,g=0'))
        self.assertEqual(10, point_set.size)
        self.assertEqual(1, metadata['alpha'])
        point_set, _ = build_construction(plane, parse_construction('ecregion'))
        self.assertEqual(15, point_set.size)
        point_set, metadata = build_construction(plane_of_order(7), parse_construction('family:c=3/10'))
        self.assertEqual((14, 2), (point_set.size, metadata['a']))


class SetFileTest(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_round_trip(self):
        plane = plane_of_order(7)
        point_set = random_set(plane, Fraction(1, 2), 11)
        path = os.path.join(self.directory, 'set.json')
        write_set_file(path, point_set)
        q, payload = read_set_file(path)
        self.assertEqual(7, q)
        self.assertEqual(point_set, point_set_from_payload(plane, payload))

    def test_affine_only(self):
        plane = plane_of_order(5)
        point_set = point_set_from_payload(plane, {'q': 5, 'affine': [[1, 2], [6, 3]], 'projective': [[0, 2, 0]]})
        frame = plane.affine_embed()
        self.assertEqual(PointSet.from_indices(plane, [frame.point(1, 2), frame.point(1, 3), 1]), point_set)

    def test_wrong_order(self):
        with self.assertRaises(ParameterError):
            point_set_from_payload(plane_of_order(5), {'q': 7, 'affine': []})
