# -*- coding: utf-8 -*-

"""
charwalk
----------------------------------

Walks of the Legendre symbol and the secant counts they control.

`psi_walk(p, a)` is the prefix sum Psi(a, t) = chi(a) + chi(a + 1) + ... + chi(a + t) and
`phi_sum(p, u, a)` the window sum chi(u) + chi(u - 1) + ... + chi(u - a + 1).

For the region under y = alpha x^2 + beta x + gamma, the projection function pr_d(b) counts
the region's points on y = dx + b. Stepping the intercept changes it by

    pr_d(b + 1) - pr_d(b) = chi((beta - d)^2 + 4 alpha (b - gamma))

(a line gains a point where it crosses the parabola and loses the one it wraps past at
y = p - 1), so every profile is a walk of the character and the profiles of different slopes
are cyclic shifts of each other.
"""

from __future__ import absolute_import, unicode_literals, print_function

import logging
import math
from collections import Counter
from dataclasses import dataclass, field as dataclass_field

import numpy as np

from .construct import ParabolaParams, parabola_family, parabola_region
from .errors import ParameterError
from .field import make_field
from .parallel import ordered_map
from .spectrum import compute_spectrum

logger = logging.getLogger(__name__)

ENVELOPE_EXPONENTS = (1, 2)


def _characters(p):
    field = make_field(p)
    return field, field.legendre(np.arange(p, dtype=np.int64))


@dataclass(frozen=True, eq=False)
class Walk:
    p: int
    a: int
    values: np.ndarray

    def __len__(self):
        return len(self.values)


def psi_walk(p, a):
    """
    The walk t -> Psi(a, t) for t in [0, p - 1]. Its last value is always 0.
    """
    field, chars = _characters(p)
    steps = chars[(int(a) + np.arange(p, dtype=np.int64)) % p]
    return Walk(p=p, a=int(a) % p, values=np.cumsum(steps))


def phi_sum(p, u, a):
    if not 0 <= a <= p:
        raise ParameterError('window length %d outside [0, %d]' % (a, p))
    field = make_field(p)
    return sum(field.legendre((int(u) - t) % p) for t in range(a))


@dataclass(frozen=True)
class LevelStats:
    """
    Occupation counts of a walk's levels, with the log-power envelopes they are compared to.
    """
    p: int
    counts: dict
    zero_count: int
    max_level: int
    max_level_count: int
    range: int
    envelopes: dict = dataclass_field(default_factory=dict)

    @property
    def range_within_envelope(self):
        return self.range <= self.envelopes[1]

    @property
    def zeros_within_envelope(self):
        return self.zero_count <= self.envelopes[2]

    def as_dict(self):
        root = math.sqrt(self.p)
        return {
            'p': self.p,
            'counts': [{'level': level, 'count': count} for level, count in sorted(self.counts.items())],
            'zero_count': self.zero_count,
            'max_level': self.max_level,
            'max_level_count': self.max_level_count,
            'range': self.range,
            'zero_count_per_sqrt_p': self.zero_count / root,
            'max_level_count_per_sqrt_p': self.max_level_count / root,
            'envelopes': {'A%d' % exponent: value for exponent, value in sorted(self.envelopes.items())},
            'range_within_envelope': self.range_within_envelope,
            'zeros_within_envelope': self.zeros_within_envelope,
        }


def _level_stats(p, values):
    levels, occurrences = np.unique(np.asarray(values, dtype=np.int64), return_counts=True)
    counts = {int(level): int(count) for level, count in zip(levels, occurrences)}
    top = int(np.argmax(occurrences))
    log_p = math.log(p)
    return LevelStats(
        p=p,
        counts=counts,
        zero_count=counts.get(0, 0),
        max_level=int(levels[top]),
        max_level_count=int(occurrences[top]),
        range=int(levels[-1] - levels[0]),
        envelopes={exponent: math.sqrt(p) * log_p ** exponent for exponent in ENVELOPE_EXPONENTS},
    )


def level_stats(walk):
    """
    Level statistics of `walk`. The envelope flags are reported, never enforced.
    """
    return _level_stats(walk.p, walk.values)


@dataclass(frozen=True, eq=False)
class PhiProfile:
    p: int
    a: int
    values: np.ndarray
    stats: LevelStats

    @property
    def class_frequencies(self):
        """
        Secant size -> number of lines, within any one non-vertical parallel class of the
        family of parabolas with this `a`.
        """
        return dict(sorted(Counter(int(self.a + value) for value in self.values).items()))


def phi_profile(p, a):
    """
    Phi(u, a) for every u in F_p, by cyclic prefix sums.
    """
    if not 0 <= a <= p:
        raise ParameterError('window length %d outside [0, %d]' % (a, p))
    field, chars = _characters(p)
    sums = np.concatenate([[0], np.cumsum(np.concatenate([chars, chars]))])
    u = np.arange(p, dtype=np.int64)
    values = sums[u + p + 1] - sums[u + p + 1 - a]
    return PhiProfile(p=p, a=a, values=values, stats=_level_stats(p, values))


@dataclass(frozen=True, eq=False)
class ProjectionProfile:
    p: int
    params: ParabolaParams
    d: int
    pr: np.ndarray

    @property
    def total(self):
        return int(self.pr.sum())

    @property
    def range(self):
        return int(self.pr.max() - self.pr.min())

    @property
    def image(self):
        return sorted(set(int(v) for v in self.pr))

    @property
    def is_interval(self):
        image = self.image
        return image == list(range(image[0], image[-1] + 1))


def _parabola_values(field, params):
    xs = field.elements()
    return field.add(field.add(field.mul(params.alpha, field.mul(xs, xs)), field.mul(params.beta, xs)),
                     params.gamma)


def _profile(p, f, d):
    """
    pr_d from the parabola values `f`; column x contributes the cyclic intercept run
    [f(x) + 1 - dx, p - 1 - dx] of length p - 1 - f(x).
    """
    xs = np.arange(p, dtype=np.int64)
    lengths = p - 1 - f
    starts = (f + 1 - d * xs) % p
    ends = starts + lengths
    diff = np.zeros(2 * p + 1, dtype=np.int64)
    np.add.at(diff, starts, 1)
    np.add.at(diff, ends, -1)
    runs = np.cumsum(diff)[:2 * p]
    return runs[:p] + runs[p:]


def projection_profile(plane, params, d):
    field = plane.field
    if not field.is_prime_field or field.p <= 3:
        raise ParameterError('projection profiles need a prime p > 3')
    d = int(d) % field.p
    if d == 0:
        raise ParameterError('horizontal slope excluded')
    pr = _profile(field.p, _parabola_values(field, params), d)
    return ProjectionProfile(p=field.p, params=params, d=d, pr=pr)


def profile_from_walk(p, pr0):
    """
    pr_1 for (alpha, beta, gamma) = (1/4, 1, 1) rebuilt from its first value: the increments
    are chi(b - 1), so pr_1(b) = pr0 + Psi(p - 1, b - 1).
    """
    walk = psi_walk(p, p - 1)
    return int(pr0) + np.concatenate([[0], walk.values[:p - 1]])


def cyclic_shift(field, params, d):
    """
    s_d with pr_d(b) = pr_1(b + s_d): ((beta - d)^2 - (beta - 1)^2) / (4 alpha).
    """
    top = field.sub(field.mul(field.sub(params.beta, d), field.sub(params.beta, d)),
                    field.mul(field.sub(params.beta, 1), field.sub(params.beta, 1)))
    return field.div(top, field.mul(4 % field.p, params.alpha))


@dataclass(frozen=True)
class LawResult:
    name: str
    passed: bool
    counterexample: dict = None

    def as_dict(self):
        return {'passed': self.passed, 'counterexample': self.counterexample}


@dataclass(frozen=True, eq=False)
class LawReport:
    p: int
    params: ParabolaParams
    laws: tuple
    shifts: dict
    range: int
    range_bounds: tuple
    displayed_form_matches: int
    increments_checked: int

    @property
    def passed(self):
        return all(law.passed for law in self.laws)

    def law(self, name):
        for law in self.laws:
            if law.name == name:
                return law
        raise KeyError(name)

    def as_dict(self):
        return {
            'p': self.p,
            'params': {'alpha': self.params.alpha, 'beta': self.params.beta, 'gamma': self.params.gamma},
            'laws': {law.name: law.as_dict() for law in self.laws},
            'shifts': [{'d': d, 'shift': shift} for d, shift in sorted(self.shifts.items())],
            'range': self.range,
            'range_bounds': list(self.range_bounds),
            'displayed_form_matches': self.displayed_form_matches,
            'increments_checked': self.increments_checked,
            'passed': self.passed,
        }


def range_bounds(p):
    return math.sqrt(p) / (2 * math.pi), math.sqrt(p) * math.log(p)


def check_range_law(plane, params, d=1):
    """
    The range of pr_d lies between sqrt(p)/(2 pi) and sqrt(p) ln p.
    """
    profile = projection_profile(plane, params, d)
    low, high = range_bounds(profile.p)
    passed = low <= profile.range <= high
    counterexample = None if passed else {'d': profile.d, 'range': profile.range}
    return LawResult('L5', passed, counterexample)


def increment_laws(field, params, pr, d):
    """
    For the profile `pr` of slope `d`, return `(increments, law, displayed)` indexed by b:
    the measured pr(b+1) - pr(b), the character value chi((beta-d)^2 + 4 alpha (b-gamma)) and
    the d-free form -chi((beta-1)^2 + 4 alpha (b+1-gamma)).
    """
    p = field.p
    b = np.arange(p, dtype=np.int64)
    increments = np.roll(pr, -1) - pr
    four_alpha = 4 * params.alpha % p
    beta_d = field.sub(params.beta, d)
    law = field.legendre(field.add(field.mul(beta_d, beta_d), field.mul(four_alpha, (b - params.gamma) % p)))
    beta_1 = field.sub(params.beta, 1)
    displayed = -field.legendre(field.add(field.mul(beta_1, beta_1),
                                          field.mul(four_alpha, (b + 1 - params.gamma) % p)))
    return increments, law, displayed


def _slope_laws(field, params, f, pr1, d):
    """
    Increment law and displayed-form agreement for a single slope.
    """
    pr = pr1 if d == 1 else _profile(field.p, f, d)
    increments, law, displayed = increment_laws(field, params, pr, d)
    mismatches = np.flatnonzero(increments != law)
    first = None
    if len(mismatches):
        at = int(mismatches[0])
        first = {'d': d, 'b': at, 'increment': int(increments[at]), 'law': int(law[at])}
    return d, pr, first, int((increments == displayed).sum())


def verify_projection_laws(plane, params, threads=1):
    """
    Check the increment law (L1), unit steps over an interval image (L2), the cyclic-shift
    relation between slopes (L3), the secant-count factorization against a direct spectrum
    (L4) and the range bounds of pr_1 (L5), for every nonzero slope.
    """
    field = plane.field
    if not field.is_prime_field or field.p <= 3:
        raise ParameterError('projection laws need a prime p > 3')
    p = field.p
    f = _parabola_values(field, params)
    pr1 = _profile(p, f, 1)

    results = ordered_map(lambda d: _slope_laws(field, params, f, pr1, d), range(1, p), threads=threads)
    profiles = {d: pr for d, pr, _, _ in results}

    l1 = next((first for _, _, first, _ in results if first is not None), None)
    matches = sum(match for _, _, _, match in results)

    l2 = None
    for d, pr in profiles.items():
        steps = np.abs(np.roll(pr, -1) - pr)
        image = sorted(set(int(v) for v in pr))
        if steps.max() > 1 or image != list(range(image[0], image[-1] + 1)):
            l2 = {'d': d, 'max_step': int(steps.max()), 'image': image}
            break

    shifts = {}
    l3 = None
    b = np.arange(p, dtype=np.int64)
    for d, pr in profiles.items():
        shift = cyclic_shift(field, params, d)
        if not np.array_equal(pr, pr1[(b + shift) % p]):
            found = next((s for s in range(p) if np.array_equal(pr, pr1[(b + s) % p])), None)
            if l3 is None:
                l3 = {'d': d, 'predicted_shift': shift, 'found_shift': found}
            shift = found
        shifts[d] = shift

    l4 = _factorization_counterexample(plane, params, pr1)

    low, high = range_bounds(p)
    pr1_range = int(pr1.max() - pr1.min())
    l5 = None if low <= pr1_range <= high else {'d': 1, 'range': pr1_range}

    laws = tuple(LawResult(name, first is None, first)
                 for name, first in (('L1', l1), ('L2', l2), ('L3', l3), ('L4', l4), ('L5', l5)))
    report = LawReport(
        p=p,
        params=params,
        laws=laws,
        shifts=shifts,
        range=pr1_range,
        range_bounds=(low, high),
        displayed_form_matches=matches,
        increments_checked=p * (p - 1),
    )
    if not report.passed:
        logger.warning('projection laws failed for p=%d, %r: %s', p, params,
                       ', '.join(law.name for law in laws if not law.passed))
    return report


def _factorization_counterexample(plane, params, pr1):
    """
    Compare the secant sizes of the non-vertical, non-horizontal affine lines, read from a
    direct spectrum of the region, with p - 1 copies of the pr_1 histogram.
    """
    p = plane.q
    spectrum = compute_spectrum(plane, parabola_region(plane, params))
    frame = plane.affine_embed()
    slopes, intercepts = np.meshgrid(np.arange(1, p, dtype=np.int64), np.arange(p, dtype=np.int64), indexing='ij')
    direct = spectrum.counts[frame.line(slopes.ravel(), intercepts.ravel())]
    measured = np.bincount(direct, minlength=p + 2)
    predicted = (p - 1) * np.bincount(pr1, minlength=p + 2)
    size = max(len(measured), len(predicted))
    measured = np.pad(measured, (0, size - len(measured)))
    predicted = np.pad(predicted, (0, size - len(predicted)))
    wrong = np.flatnonzero(measured != predicted)
    if len(wrong) == 0:
        return None
    k = int(wrong[0])
    return {'k': k, 'direct': int(measured[k]), 'factorized': int(predicted[k])}


@dataclass(frozen=True)
class FamilyReport:
    p: int
    a: int
    lines_checked: int
    violations: int
    vertical_ok: bool
    first_counterexample: dict = None

    @property
    def passed(self):
        return self.violations == 0 and self.vertical_ok

    def as_dict(self):
        return {
            'p': self.p,
            'a': self.a,
            'lines_checked': self.lines_checked,
            'violations': self.violations,
            'vertical_ok': self.vertical_ok,
            'first_counterexample': self.first_counterexample,
            'passed': self.passed,
        }


def verify_family_counts(plane, params):
    """
    Every line y = mx + b meets the family of parabolas in a + Phi((m^2 + 4b)/4, a) points and
    every vertical line in exactly a points.
    """
    field = plane.field
    p = plane.q
    a = params.a(p)
    point_set = parabola_family(plane, params)
    counts = compute_spectrum(plane, point_set).counts
    frame = plane.affine_embed()

    phi = phi_profile(p, a).values
    m, b = np.meshgrid(np.arange(p, dtype=np.int64), np.arange(p, dtype=np.int64), indexing='ij')
    m = m.ravel()
    b = b.ravel()
    u = field.mul(field.add(field.mul(m, m), field.mul(4 % p, b)), field.inv(4 % p))
    expected = a + phi[u]
    measured = counts[frame.line(m, b)]
    wrong = np.flatnonzero(measured != expected)
    first = None
    if len(wrong):
        at = int(wrong[0])
        first = {'m': int(m[at]), 'b': int(b[at]), 'count': int(measured[at]), 'expected': int(expected[at])}

    vertical = counts[frame.vertical(np.arange(p, dtype=np.int64))]
    report = FamilyReport(
        p=p,
        a=a,
        lines_checked=p * p,
        violations=len(wrong),
        vertical_ok=bool(np.all(vertical == a)),
        first_counterexample=first,
    )
    if not report.passed:
        logger.warning('family counts failed for p=%d, a=%d: %r', p, a, report)
    return report
