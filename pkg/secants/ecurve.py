# -*- coding: utf-8 -*-

"""
ecurve
----------------------------------

Point counts of Weierstrass curves Y^2 = X^3 + aX + b over F_p, and their link to the
region {(x, v) : x^3 - v is a square}.

The line v = mx + b meets that region in n points, where x^3 - mx - b is zero for Z of the
x and a nonzero square for n - Z of them. Each square gives two points of
Y^2 = X^3 - mX - b and each root one, so together with the point at infinity the curve has
2n + 1 - Z points.
"""

from __future__ import absolute_import, unicode_literals, print_function

import logging
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .construct import ec_region
from .errors import ParameterError, SingularCurveError
from .field import make_field
from .parallel import ordered_map, partition
from .spectrum import compute_spectrum, meets_cor_bound, cor_ceiling

logger = logging.getLogger(__name__)


def _prime_field(p):
    field = make_field(p)
    if not field.is_prime_field or field.p <= 3:
        raise ParameterError('elliptic curves here need a prime p > 3, got %d' % p)
    return field


def discriminant(p, a, b):
    """
    4a^3 + 27b^2 mod p; the curve is singular exactly when this is 0.
    """
    return (4 * a ** 3 + 27 * b ** 2) % p


@dataclass(frozen=True)
class Curve:
    p: int
    a: int
    b: int
    count: int

    @property
    def trace(self):
        return self.p + 1 - self.count

    def as_dict(self):
        return {'p': self.p, 'a': self.a, 'b': self.b, 'count': self.count, 'trace': self.trace,
                'hasse': hasse_holds(self)}


def hasse_holds(curve):
    return curve.trace ** 2 <= 4 * curve.p


def curve_count(p, a, b):
    """
    |E(F_p)| = 1 + sum over x of (1 + chi(x^3 + ax + b)).
    """
    field = _prime_field(p)
    a %= p
    b %= p
    if discriminant(p, a, b) == 0:
        raise SingularCurveError('singular curve: 4a^3 + 27b^2 = 0 mod %d for a=%d, b=%d' % (p, a, b))
    xs = field.elements()
    values = (xs * xs % p * xs + a * xs + b) % p
    return Curve(p=p, a=a, b=b, count=int(1 + p + field.legendre(values).sum()))


def curve_count_bruteforce(p, a, b):
    """
    Count the affine solutions of y^2 = x^3 + ax + b by trying every pair, plus infinity.
    Singular curves are counted too.
    """
    _prime_field(p)
    xs, ys = np.meshgrid(np.arange(p, dtype=np.int64), np.arange(p, dtype=np.int64), indexing='ij')
    lhs = ys * ys % p
    rhs = (xs * xs % p * xs + a * xs + b) % p
    return int((lhs == rhs).sum()) + 1


def cubic_root_count(p, m, b):
    """
    Number of distinct x in F_p with x^3 - mx - b = 0.
    """
    _prime_field(p)
    xs = np.arange(p, dtype=np.int64)
    return int(((xs * xs % p * xs - m * xs - b) % p == 0).sum())


def trace_distribution(p):
    """
    trace -> number of nonsingular (a, b) over F_p having it.
    """
    field = _prime_field(p)
    xs = field.elements()
    cubes = xs * xs % p * xs
    bs = np.arange(p, dtype=np.int64)
    traces = Counter()
    for a in range(p):
        values = (cubes[None, :] + a * xs[None, :] + bs[:, None]) % p
        sums = field.legendre(values).sum(axis=1)
        for b in range(p):
            if discriminant(p, a, b):
                traces[int(-sums[b])] += 1
    return dict(sorted(traces.items()))


@dataclass(frozen=True)
class LineCurveRelation:
    m: int
    b: int
    n_line: int
    roots: int
    curve_count: int
    skipped: bool = False

    @property
    def holds(self):
        return self.skipped or self.curve_count == 2 * self.n_line + 1 - self.roots

    def as_dict(self):
        return {'m': self.m, 'b': self.b, 'n_line': self.n_line, 'roots': self.roots,
                'curve_count': self.curve_count, 'skipped': self.skipped, 'holds': self.holds}


def line_is_singular(p, m, b):
    return (-4 * m ** 3 + 27 * b ** 2) % p == 0


def line_curve_check(plane, m, b, point_set=None):
    """
    Relate the line v = mx + b to the curve Y^2 = X^3 - mX - b. Lines whose curve is singular
    come back with `skipped` set and no counts.
    """
    p = plane.q
    _prime_field(p)
    m %= p
    b %= p
    if line_is_singular(p, m, b):
        return LineCurveRelation(m=m, b=b, n_line=0, roots=0, curve_count=0, skipped=True)
    if point_set is None:
        point_set = ec_region(plane)
    line = plane.affine_embed().line(m, b)
    n_line = int(point_set.mask[plane.points_on(line)].sum())
    relation = LineCurveRelation(
        m=m,
        b=b,
        n_line=n_line,
        roots=cubic_root_count(p, m, b),
        curve_count=curve_count(p, (-m) % p, (-b) % p).count,
    )
    if not relation.holds:
        logger.warning('line-curve relation failed: %r', relation)
    return relation


def _scan_slopes(p, counts, bounds):
    """
    Relation check for slopes start..stop-1 against every intercept, from the line counts.
    """
    field = make_field(p)
    xs = field.elements()
    bs = np.arange(p, dtype=np.int64)
    checked = violations = skipped = 0
    first = None
    for m in range(*bounds):
        shape = (xs * xs % p * xs - m * xs) % p
        roots = np.bincount(shape, minlength=p)
        sums = field.legendre((shape[None, :] - bs[:, None]) % p).sum(axis=1)
        curve_counts = 1 + p + sums
        singular = (-4 * m ** 3 + 27 * bs * bs) % p == 0
        n_line = counts[m]
        wrong = ~singular & (curve_counts != 2 * n_line + 1 - roots)
        skipped += int(singular.sum())
        checked += int((~singular).sum())
        violations += int(wrong.sum())
        if first is None and wrong.any():
            at = int(np.flatnonzero(wrong)[0])
            first = {'m': m, 'b': at, 'n_line': int(n_line[at]), 'roots': int(roots[at]),
                     'curve_count': int(curve_counts[at])}
    return checked, violations, skipped, first


@dataclass(frozen=True, eq=False)
class EcScanReport:
    p: int
    spectrum: object
    relations_checked: int
    relation_violations: int
    skipped_lines: int
    first_violation: dict = None

    @property
    def reference(self):
        """
        p^(3/2) log p (log log p)^2, the growth the mode frequency is measured against.
        """
        log_p = math.log(self.p)
        return self.p ** 1.5 * log_p * math.log(log_p) ** 2

    @property
    def passed(self):
        return self.relation_violations == 0 and meets_cor_bound(self.spectrum)

    def as_dict(self):
        spectrum = self.spectrum
        return {
            'p': self.p,
            'set_size': spectrum.set_size,
            'histogram': [{'k': k, 'count': int(c)} for k, c in enumerate(spectrum.histogram)],
            'mode_k': spectrum.mode_k,
            'mode_count': spectrum.mode_count,
            'cor_ceiling': cor_ceiling(self.p),
            'cor_ok': meets_cor_bound(spectrum),
            'mode_ratio': spectrum.mode_count / self.reference,
            'mode_per_p32': spectrum.mode_count / self.p ** 1.5,
            'relations_checked': self.relations_checked,
            'relation_violations': self.relation_violations,
            'skipped_lines': self.skipped_lines,
            'first_violation': self.first_violation,
        }


def ec_spectrum_scan(plane, threads=1):
    """
    Spectrum of the square region plus the line-curve relation on every non-vertical line.
    Vertical lines and lines with a singular curve count as skipped.
    """
    p = plane.q
    _prime_field(p)
    point_set = ec_region(plane)
    spectrum = compute_spectrum(plane, point_set, threads=threads)
    frame = plane.affine_embed()
    ms, bs = np.meshgrid(np.arange(p, dtype=np.int64), np.arange(p, dtype=np.int64), indexing='ij')
    counts = spectrum.counts[frame.line(ms.ravel(), bs.ravel())].reshape(p, p)

    parts = ordered_map(lambda bounds: _scan_slopes(p, counts, bounds), partition(p, threads), threads=threads)
    first = next((part[3] for part in parts if part[3] is not None), None)
    report = EcScanReport(
        p=p,
        spectrum=spectrum,
        relations_checked=sum(part[0] for part in parts),
        relation_violations=sum(part[1] for part in parts),
        skipped_lines=sum(part[2] for part in parts) + p,
        first_violation=first,
    )
    logger.info('ec scan p=%d: %d relations, %d violations, %d skipped', p,
                report.relations_checked, report.relation_violations, report.skipped_lines)
    return report
