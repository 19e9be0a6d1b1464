# -*- coding: utf-8 -*-

"""
test_field
----------------------------------

Tests for `secants.field` module.
"""

from __future__ import absolute_import, unicode_literals, print_function

import unittest

import numpy as np

from secants.errors import FieldError
from secants.field import Field, is_irreducible, legendre, lift, make_field, smallest_irreducible

from . import odd_primes


class MakeFieldTest(unittest.TestCase):

    def test_prime_field(self):
        field = make_field(7)
        self.assertEqual((7, 1, 7), (field.p, field.k, field.q))
        self.assertTrue(field.is_prime_field)
        self.assertIsNone(field.modulus)

    def test_extension_modulus_is_smallest_irreducible(self):
        self.assertEqual((1, 0, 1), make_field(9).modulus)
        self.assertEqual((1, 1, 1), make_field(4).modulus)

    def test_not_a_prime_power(self):
        for q in (1, 6, 12, 100):
            with self.assertRaisesRegex(FieldError, 'not a prime power'):
                make_field(q)

    def test_same_order_same_field(self):
        self.assertEqual(Field(3, 2), make_field(9))
        self.assertIs(make_field(8), make_field(8))

    def test_rejects_reducible_modulus(self):
        with self.assertRaises(FieldError):
            Field(2, 2, modulus=(1, 0, 1))


class IrreducibleTest(unittest.TestCase):

    def test_degree_two_and_three(self):
        self.assertTrue(is_irreducible([1, 1, 1], 2))
        self.assertFalse(is_irreducible([1, 0, 1], 2))
        self.assertTrue(is_irreducible([1, 1, 0, 1], 2))

    def test_degree_four_without_roots(self):
        self.assertTrue(is_irreducible([1, 1, 0, 0, 1], 2))
        # (x^2 + x + 1)^2 has no root but is reducible
        self.assertFalse(is_irreducible([1, 0, 1, 0, 1], 2))

    def test_smallest(self):
        # x^2 + 1 splits mod 5, x^2 + x + 1 does not
        self.assertEqual((1, 1, 1), smallest_irreducible(5, 2))
        self.assertEqual((1, 0, 1), smallest_irreducible(7, 2))
        # coefficients compare from the constant term up, so 1 + x^2 + x^3 precedes 1 + x + x^3
        self.assertEqual((1, 0, 1, 1), smallest_irreducible(2, 3))


class ArithmeticTest(unittest.TestCase):

    def assert_axioms(self, q, samples=10000):
        field = make_field(q)
        rng = np.random.default_rng(q)
        a, b, c = (rng.integers(0, q, samples) for _ in range(3))
        zero = np.zeros(samples, dtype=np.int64)
        one = np.ones(samples, dtype=np.int64)
        self.assertTrue(np.array_equal(field.add(a, b), field.add(b, a)))
        self.assertTrue(np.array_equal(field.mul(a, b), field.mul(b, a)))
        self.assertTrue(np.array_equal(field.add(field.add(a, b), c), field.add(a, field.add(b, c))))
        self.assertTrue(np.array_equal(field.mul(field.mul(a, b), c), field.mul(a, field.mul(b, c))))
        self.assertTrue(np.array_equal(field.mul(a, field.add(b, c)),
                                       field.add(field.mul(a, b), field.mul(a, c))))
        self.assertTrue(np.array_equal(field.add(a, zero), a))
        self.assertTrue(np.array_equal(field.mul(a, one), a))
        self.assertTrue(np.array_equal(field.add(a, field.neg(a)), zero))

    def test_axioms(self):
        for q in (7, 8, 9, 16, 25, 27):
            self.assert_axioms(q)

    def test_every_nonzero_element_has_an_inverse(self):
        for q in (9, 13, 16, 32):
            field = make_field(q)
            nonzero = np.arange(1, q, dtype=np.int64)
            self.assertTrue(np.all(field.mul(nonzero, field.inv(nonzero)) == 1))

    def test_zero_inverse(self):
        with self.assertRaises(FieldError):
            make_field(7).inv(0)
        with self.assertRaises(FieldError):
            make_field(9).inv(np.array([1, 0]))

    def test_scalars_stay_ints(self):
        field = make_field(5)
        self.assertEqual(2, field.add(3, 4))
        self.assertEqual(4, field.inv(4))
        self.assertEqual(3, field.div(1, 2))
        self.assertIsInstance(make_field(9).mul(4, 5), int)

    def test_primitive_element_has_full_order(self):
        for q in (7, 8, 9, 16, 25, 27):
            field = make_field(q)
            self.assertEqual(q - 1, field.multiplicative_order(field.primitive_element()))


class LegendreTest(unittest.TestCase):

    def test_examples(self):
        field = make_field(7)
        self.assertEqual(-1, legendre(field, 3))
        self.assertEqual(0, legendre(field, 0))
        self.assertEqual(1, legendre(make_field(5), 4))

    def test_requires_odd_prime_field(self):
        for q in (2, 9, 4):
            with self.assertRaisesRegex(FieldError, 'Legendre requires odd prime field'):
                legendre(make_field(q), 1)

    def test_completely_multiplicative(self):
        for p in odd_primes(3, 101):
            field = make_field(p)
            x, y = np.meshgrid(np.arange(1, p), np.arange(1, p), indexing='ij')
            self.assertTrue(np.array_equal(field.legendre(x * y % p),
                                           field.legendre(x) * field.legendre(y)))
            self.assertEqual(0, int(field.legendre(np.arange(p)).sum()))

    def test_euler_criterion_above_the_table(self):
        field = make_field(65537)
        self.assertEqual(-1, legendre(field, 3))
        self.assertEqual(1, legendre(field, 4))
        self.assertEqual(0, legendre(field, 65537))
        self.assertEqual([1, -1], list(field.legendre(np.array([9, 3]))))


class LiftTest(unittest.TestCase):

    def test_lift(self):
        field = make_field(11)
        self.assertEqual(4, lift(field, field.inv(3)))
        self.assertEqual(10, lift(field, -1))

    def test_lift_needs_prime_field(self):
        with self.assertRaisesRegex(FieldError, 'order defined only on prime fields'):
            lift(make_field(4), 1)
