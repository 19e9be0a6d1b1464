# -*- coding: utf-8 -*-

"""
spectrum
----------------------------------

Secant-size spectra of point sets and the exact counting identities they obey.

For a set S of s points in a plane of order q with N = q^2 + q + 1 lines, the per-line
counts n_l satisfy the standard equations

    sum n_l = s(q + 1)        sum n_l(n_l - 1) = s(s - 1)

and, multiplied through by N, the variance identity N * sum n_l^2 - (sum n_l)^2 = q s (N - s).
All three are checked in integers. The lower bounds on the most frequent secant size are
irrational and are evaluated in floating point.
"""

from __future__ import absolute_import, unicode_literals, print_function

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ParameterError
from .parallel import ordered_map, partition

logger = logging.getLogger(__name__)

# sqrt(2/pi) / (1/sqrt(3)): how far apart the leading constants of the two bounds are.
BOUND_GAP = math.sqrt(2.0 / math.pi) * math.sqrt(3.0)


class PointSet(object):
    """
    Membership bitmap over the point indices of `plane`.
    """

    def __init__(self, plane, mask):
        mask = np.array(mask, dtype=bool, copy=True)
        if mask.shape != (plane.N,):
            raise ParameterError('point set bitmap must have %d entries, got %r' % (plane.N, mask.shape))
        mask.flags.writeable = False
        self.plane = plane
        self.mask = mask
        self.size = int(mask.sum())

    @classmethod
    def empty(cls, plane):
        return cls(plane, np.zeros(plane.N, dtype=bool))

    @classmethod
    def full(cls, plane):
        return cls(plane, np.ones(plane.N, dtype=bool))

    @classmethod
    def from_indices(cls, plane, indices):
        mask = np.zeros(plane.N, dtype=bool)
        mask[np.asarray(list(indices), dtype=np.int64)] = True
        return cls(plane, mask)

    @classmethod
    def from_int(cls, plane, bitmap):
        return cls.from_indices(plane, [i for i in range(plane.N) if (bitmap >> i) & 1])

    @classmethod
    def from_affine(cls, plane, xs, ys):
        frame = plane.affine_embed()
        xs = np.asarray(xs, dtype=np.int64)
        ys = np.asarray(ys, dtype=np.int64)
        if xs.size == 0:
            return cls.empty(plane)
        return cls.from_indices(plane, np.atleast_1d(frame.point(xs, ys)))

    def __len__(self):
        return self.size

    def __contains__(self, index):
        return bool(self.mask[int(index)])

    def __eq__(self, other):
        return isinstance(other, PointSet) and self.plane.q == other.plane.q \
            and bool(np.array_equal(self.mask, other.mask))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'PointSet(q=%d, size=%d)' % (self.plane.q, self.size)

    def indices(self):
        return np.flatnonzero(self.mask)

    def to_int(self):
        value = 0
        for index in self.indices():
            value |= 1 << int(index)
        return value

    def complement(self):
        return PointSet(self.plane, ~self.mask)


@dataclass(frozen=True, eq=False)
class SecantSpectrum:
    q: int
    N: int
    set_size: int
    counts: np.ndarray
    histogram: np.ndarray
    mu: Fraction
    mode_k: int
    mode_count: int

    @property
    def sum_n(self):
        return sum(k * int(c) for k, c in enumerate(self.histogram))

    @property
    def sum_n_squared(self):
        return sum(k * k * int(c) for k, c in enumerate(self.histogram))

    @property
    def sum_pairs(self):
        return sum(k * (k - 1) * int(c) for k, c in enumerate(self.histogram))

    @property
    def variance_numerator(self):
        """
        N * sum (n_l - mu)^2 with the denominator cleared.
        """
        return self.N * self.sum_n_squared - self.sum_n ** 2

    def as_dict(self):
        return {
            'q': self.q,
            'N': self.N,
            'set_size': self.set_size,
            'histogram': [{'k': k, 'count': int(c)} for k, c in enumerate(self.histogram)],
            'mu': '%d/%d' % (self.mu.numerator, self.mu.denominator),
            'mode_k': self.mode_k,
            'mode_count': self.mode_count,
        }


def _spectrum_from_counts(plane, set_size, counts):
    histogram = np.bincount(counts, minlength=plane.q + 2).astype(np.int64)
    mode_k = int(np.argmax(histogram))
    return SecantSpectrum(
        q=plane.q,
        N=plane.N,
        set_size=int(set_size),
        counts=counts,
        histogram=histogram,
        mu=Fraction(int(set_size) * (plane.q + 1), plane.N),
        mode_k=mode_k,
        mode_count=int(histogram[mode_k]),
    )


def compute_spectra(plane, point_sets, threads=1):
    """
    Spectra of several sets of one plane, sharing each generated block of lines.

    Lines are split into contiguous ranges, one per worker thread; each range writes its own
    slice of the count matrix, so the result does not depend on `threads`.
    """
    point_sets = list(point_sets)
    if not point_sets:
        return []
    for point_set in point_sets:
        if point_set.plane.q != plane.q:
            raise ParameterError('point set of order %d used with plane of order %d'
                                 % (point_set.plane.q, plane.q))
    masks = np.stack([point_set.mask for point_set in point_sets])
    counts = np.zeros((len(point_sets), plane.N), dtype=np.int64)

    def count_range(bounds):
        start, stop = bounds
        for first, indices in plane.line_blocks(start, stop):
            counts[:, first:first + len(indices)] = masks[:, indices].sum(axis=2)
        return stop - start

    ordered_map(count_range, partition(plane.N, threads), threads=threads)
    logger.debug('counted %d sets over %d lines of %r', len(point_sets), plane.N, plane)
    return [_spectrum_from_counts(plane, point_set.size, counts[row])
            for row, point_set in enumerate(point_sets)]


def compute_spectrum(plane, point_set, threads=1):
    return compute_spectra(plane, [point_set], threads=threads)[0]


@dataclass(frozen=True)
class IdentityReport:
    eq1: bool
    eq2: bool
    var_ok: bool
    eq1_residual: int
    eq2_residual: int
    var_residual: int

    @property
    def passed(self):
        return self.eq1 and self.eq2 and self.var_ok

    def as_dict(self):
        return {
            'eq1': self.eq1,
            'eq2': self.eq2,
            'var': self.var_ok,
            'residuals': {'eq1': self.eq1_residual, 'eq2': self.eq2_residual, 'var': self.var_residual},
        }


def verify_counting_identities(spectrum):
    s = spectrum.set_size
    q = spectrum.q
    eq1_residual = spectrum.sum_n - s * (q + 1)
    eq2_residual = spectrum.sum_pairs - s * (s - 1)
    var_residual = spectrum.variance_numerator - q * s * (spectrum.N - s)
    report = IdentityReport(
        eq1=eq1_residual == 0,
        eq2=eq2_residual == 0,
        var_ok=var_residual == 0,
        eq1_residual=eq1_residual,
        eq2_residual=eq2_residual,
        var_residual=var_residual,
    )
    if not report.passed:
        logger.warning('counting identities failed for q=%d, s=%d: %r', q, s, report)
    return report


@dataclass(frozen=True)
class BoundsReport:
    q: int
    s: int
    N: int
    V: Fraction
    prop_bound: float
    prop_statement_bound: float
    cor_bound: float
    thm_lower: float
    thm_upper_ref: float

    def as_dict(self):
        return {
            'V': '%d/%d' % (self.V.numerator, self.V.denominator),
            'prop': self.prop_bound,
            'prop_statement': self.prop_statement_bound,
            'cor': self.cor_bound,
            'thm_lower': self.thm_lower,
            'thm_upper_ref': self.thm_upper_ref,
        }


def bounds_report(q, s):
    """
    Evaluate the lower bounds on max_k |L_k| for a set of size `s`.

    `prop_bound` is N^(3/2) / sqrt(12V + 13N), the form the variance argument actually
    reaches; `prop_statement_bound` uses +N instead of +13N and is reported alongside.
    """
    N = q * q + q + 1
    if not 0 <= s <= N:
        raise ParameterError('set size %d outside [0, %d]' % (s, N))
    V = Fraction(q * s * (N - s), N)
    return BoundsReport(
        q=q,
        s=s,
        N=N,
        V=V,
        prop_bound=N ** 1.5 / math.sqrt(12 * float(V) + 13 * N),
        prop_statement_bound=N ** 1.5 / math.sqrt(12 * float(V) + N),
        cor_bound=N / math.sqrt(3 * q + 13),
        thm_lower=q ** 1.5 / math.sqrt(3) - 3 * q,
        thm_upper_ref=math.sqrt(2 / math.pi) * q ** 1.5,
    )


def max_frequency(spectrum):
    return spectrum.mode_k, spectrum.mode_count


def complement(point_set):
    return point_set.complement()


def cor_ceiling(q):
    """
    The smallest integer m with m >= N / sqrt(3q + 13), computed without floats.
    """
    N = q * q + q + 1
    d = 3 * q + 13
    m = math.isqrt(N * N // d)
    while m * m * d < N * N:
        m += 1
    while m > 0 and (m - 1) * (m - 1) * d >= N * N:
        m -= 1
    return m


def meets_cor_bound(spectrum):
    return spectrum.mode_count ** 2 * (3 * spectrum.q + 13) >= spectrum.N ** 2


def expected_mode_frequency(q, density=Fraction(1, 2)):
    """
    Exact expected number of k-secants for the likeliest k, N * max_k C(q+1, k) r^k (1-r)^(q+1-k),
    for a set that contains each point independently with probability r = `density`.

    At r = 1/2 this is the central term N * C(q+1, (q+1)//2) / 2^(q+1).
    """
    N = q * q + q + 1
    r = Fraction(density)
    return max(N * math.comb(q + 1, k) * r ** k * (1 - r) ** (q + 1 - k) for k in range(q + 2))
