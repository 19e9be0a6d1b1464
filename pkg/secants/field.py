# -*- coding: utf-8 -*-

"""
field
----------------------------------

Arithmetic in GF(p) and GF(p^k) over integer-encoded elements.

An element of GF(p^k) is the polynomial c_0 + c_1 x + ... + c_{k-1} x^{k-1} reduced modulo
the field's irreducible polynomial, stored as the integer c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
For prime fields the encoding is the integer lift itself. Every arithmetic method accepts
python ints or numpy integer arrays and answers in kind.
"""

from __future__ import absolute_import, unicode_literals, print_function

import functools
import itertools
import logging

import numpy as np

from .errors import FieldError

logger = logging.getLogger(__name__)

# Below this characteristic the Legendre symbol is a table lookup.
LEGENDRE_TABLE_LIMIT = 1 << 16


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    i = 5
    w = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += w
        w = 6 - w
    return True


def prime_factors(n):
    """
    Distinct prime factors of `n` by trial division, ascending.
    """
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


def factor_prime_power(q):
    """
    Return `(p, k)` with `q == p ** k`, or raise FieldError("not a prime power").
    """
    if q < 2:
        raise FieldError('not a prime power: %r' % (q,))
    p = prime_factors(q)[0]
    k = 0
    rest = q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise FieldError('not a prime power: %d' % q)
    return p, k


def _poly_divmod(numerator, divisor, p):
    """
    Remainder of `numerator` by a monic `divisor`, coefficients low-degree-first, mod p.
    """
    remainder = list(numerator)
    degree = len(divisor) - 1
    for shift in range(len(remainder) - 1 - degree, -1, -1):
        lead = remainder[shift + degree] % p
        if lead:
            for i, coefficient in enumerate(divisor):
                remainder[shift + i] = (remainder[shift + i] - lead * coefficient) % p
    return [c % p for c in remainder[:degree]]


def is_irreducible(coefficients, p):
    """
    True when the monic polynomial `coefficients` (low-degree-first) has no monic factor of
    degree 1..k//2 over GF(p). Degree-1 factors are roots, so for k <= 3 this is the root test.
    """
    coefficients = [c % p for c in coefficients]
    k = len(coefficients) - 1
    if k < 1 or coefficients[-1] != 1:
        return False
    for degree in range(1, k // 2 + 1):
        for lower in itertools.product(range(p), repeat=degree):
            divisor = list(lower) + [1]
            if not any(_poly_divmod(coefficients, divisor, p)):
                return False
    return True


def smallest_irreducible(p, k):
    """
    The lexicographically smallest monic irreducible of degree `k` over GF(p), comparing
    coefficients from the constant term upward.
    """
    for lower in itertools.product(range(p), repeat=k):
        candidate = list(lower) + [1]
        if is_irreducible(candidate, p):
            return tuple(candidate)
    raise FieldError('no irreducible polynomial of degree %d over GF(%d)' % (k, p))


def _scalar(value):
    if isinstance(value, np.ndarray) and value.ndim == 0:
        return int(value)
    if isinstance(value, np.integer):
        return int(value)
    return value


class Field(object):
    """
    The finite field GF(p^k). Immutable once built.
    """

    def __init__(self, p, k=1, modulus=None):
        if not is_prime(p):
            raise FieldError('not a prime power: characteristic %r is not prime' % (p,))
        if k < 1:
            raise FieldError('extension degree must be at least 1')
        self.p = p
        self.k = k
        self.q = p ** k
        self._inverse_table = None
        self._character_table = None
        self._primitive = None

        if k == 1:
            self.modulus = None
        else:
            if modulus is None:
                modulus = smallest_irreducible(p, k)
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != k + 1 or not is_irreducible(modulus, p):
                raise FieldError('modulus %r is not a monic irreducible of degree %d' % (modulus, k))
            self.modulus = modulus
            self._build_tables()

    def __repr__(self):
        if self.k == 1:
            return 'Field(GF(%d))' % self.p
        return 'Field(GF(%d^%d), modulus=%r)' % (self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    @property
    def is_prime_field(self):
        return self.k == 1

    # encoding

    def digits(self, element):
        """
        Polynomial coefficients of `element`, constant term first.
        """
        element = int(element)
        return [(element // self.p ** i) % self.p for i in range(self.k)]

    def from_digits(self, digits):
        return sum((int(c) % self.p) * self.p ** i for i, c in enumerate(digits))

    def element(self, value):
        """
        Coerce an integer to a field element. For prime fields this reduces mod p; for
        extension fields the value must already be an encoding.
        """
        if self.k == 1:
            if _is_array(value):
                return np.mod(np.asarray(value, dtype=np.int64), self.p)
            return int(value) % self.p
        if not 0 <= int(value) < self.q:
            raise FieldError('%r is not an element encoding of GF(%d)' % (value, self.q))
        return int(value)

    def elements(self):
        return np.arange(self.q, dtype=np.int64)

    # tables for GF(p^k)

    def _poly_mulmod(self, a, b):
        a_digits = self.digits(a)
        b_digits = self.digits(b)
        product = [0] * (2 * self.k - 1)
        for i, x in enumerate(a_digits):
            if x:
                for j, y in enumerate(b_digits):
                    product[i + j] = (product[i + j] + x * y) % self.p
        return self.from_digits(_poly_divmod(product, self.modulus, self.p))

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        encodings = np.arange(q, dtype=np.int64)
        place = p ** np.arange(k, dtype=np.int64)
        digits = (encodings[:, None] // place[None, :]) % p

        self._add = (((digits[:, None, :] + digits[None, :, :]) % p) * place).sum(axis=2)
        self._neg = (((p - digits) % p) * place).sum(axis=1)

        order = q - 1
        cofactors = [order // r for r in prime_factors(order)]
        generator = None
        for candidate in range(1, q):
            if all(self._slow_power(candidate, e) != 1 for e in cofactors):
                generator = candidate
                break
        self._primitive = generator

        exp = np.zeros(order, dtype=np.int64)
        value = 1
        for i in range(order):
            exp[i] = value
            value = self._poly_mulmod(value, generator)
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(order, dtype=np.int64)

        mul = exp[(log[:, None] + log[None, :]) % order]
        mul[0, :] = 0
        mul[:, 0] = 0
        self._mul = mul
        inverse = exp[(-log) % order]
        inverse[0] = 0
        self._inverse_table = inverse
        logger.debug('built GF(%d^%d) tables, generator %d', p, k, generator)

    def _slow_power(self, a, e):
        result = 1
        base = a
        while e:
            if e & 1:
                result = self._poly_mulmod(result, base)
            base = self._poly_mulmod(base, base)
            e >>= 1
        return result

    # arithmetic

    def add(self, a, b):
        if self.k == 1:
            return _scalar(np.mod(np.add(a, b, dtype=np.int64), self.p)) if _is_array(a, b) \
                else (int(a) + int(b)) % self.p
        return _scalar(self._add[a, b])

    def neg(self, a):
        if self.k == 1:
            return _scalar(np.mod(np.negative(np.asarray(a, dtype=np.int64)), self.p)) if _is_array(a) \
                else (-int(a)) % self.p
        return _scalar(self._neg[a])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return _scalar(np.mod(np.multiply(a, b, dtype=np.int64), self.p)) if _is_array(a, b) \
                else (int(a) * int(b)) % self.p
        return _scalar(self._mul[a, b])

    @property
    def inverse_table(self):
        """
        `inverse_table[a]` is the inverse of a nonzero `a`; entry 0 is 0.
        """
        if self._inverse_table is None:
            table = np.zeros(self.q, dtype=np.int64)
            for a in range(1, self.q):
                table[a] = pow(a, self.p - 2, self.p)
            self._inverse_table = table
        return self._inverse_table

    def inv(self, a):
        if _is_array(a):
            a = np.asarray(a, dtype=np.int64)
            if np.any(a == 0):
                raise FieldError('zero has no multiplicative inverse')
            return self.inverse_table[a]
        a = int(a) % self.p if self.k == 1 else int(a)
        if a == 0:
            raise FieldError('zero has no multiplicative inverse')
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return int(self._inverse_table[a])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, e):
        if e < 0:
            return self.power(self.inv(a), -e)
        if self.k == 1:
            return pow(int(a) % self.p, e, self.p)
        return self._slow_power(int(a), e)

    def primitive_element(self):
        """
        The smallest encoding whose multiplicative order is q - 1.
        """
        if self._primitive is None:
            order = self.q - 1
            cofactors = [order // r for r in prime_factors(order)] if order > 1 else []
            for candidate in range(1, self.q):
                if all(self.power(candidate, e) != 1 for e in cofactors):
                    self._primitive = candidate
                    break
        return self._primitive

    def multiplicative_order(self, a):
        if int(a) == 0:
            raise FieldError('zero has no multiplicative order')
        order = 1
        value = a
        while value != 1:
            value = self.mul(value, a)
            order += 1
        return order

    # prime-field structure

    def _require_prime(self, message):
        if self.k != 1:
            raise FieldError(message)

    def lift(self, x):
        """
        The integer representative of `x` in [0, p-1]; this fixes the order `<` on GF(p).
        """
        self._require_prime('order defined only on prime fields')
        if _is_array(x):
            return np.mod(np.asarray(x, dtype=np.int64), self.p)
        return int(x) % self.p

    @property
    def quadratic_character(self):
        """
        Table of the Legendre symbol over GF(p) as int8 values in {-1, 0, 1}.
        """
        if self.k != 1 or self.p == 2:
            raise FieldError('Legendre requires odd prime field')
        if self.p > LEGENDRE_TABLE_LIMIT:
            raise FieldError('no character table above p = %d' % LEGENDRE_TABLE_LIMIT)
        if self._character_table is None:
            table = -np.ones(self.p, dtype=np.int8)
            squares = (np.arange(self.p, dtype=np.int64) ** 2) % self.p
            table[squares] = 1
            table[0] = 0
            table.flags.writeable = False
            self._character_table = table
        return self._character_table

    def legendre(self, x):
        """
        chi(x) via Euler's criterion x^((p-1)/2) mod p, read from a residue table when p is small.
        """
        if self.k != 1 or self.p == 2:
            raise FieldError('Legendre requires odd prime field')
        if self.p <= LEGENDRE_TABLE_LIMIT:
            table = self.quadratic_character
            if _is_array(x):
                return table[np.mod(np.asarray(x, dtype=np.int64), self.p)].astype(np.int64)
            return int(table[int(x) % self.p])
        if _is_array(x):
            return np.array([self.legendre(int(v)) for v in np.ravel(x)], dtype=np.int64).reshape(np.shape(x))
        value = pow(int(x) % self.p, (self.p - 1) // 2, self.p)
        return -1 if value == self.p - 1 else value


def _is_array(*values):
    return any(isinstance(value, np.ndarray) for value in values)


@functools.lru_cache(maxsize=None)
def make_field(q):
    """
    Build GF(q). For q = p^k with k > 1 the modulus is the lexicographically smallest monic
    irreducible of degree k, so every build of the same order yields the same field.
    """
    q = int(q)
    p, k = factor_prime_power(q)
    field = Field(p, k)
    logger.debug('made %r', field)
    return field


def legendre(field, x):
    return field.legendre(x)


def lift(field, x):
    return field.lift(x)
