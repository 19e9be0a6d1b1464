# -*- coding: utf-8 -*-

"""
construct
----------------------------------

Point sets of PG(2, p): seeded random sets, the region under a parabola, a stack of
translated parabolas and the region where x^3 - v is a square.

The three explicit constructions live in the affine part and never contain a point of the
line at infinity. They need a prime field, whose elements carry the integer-lift order.
"""

from __future__ import absolute_import, unicode_literals, print_function

import io
import json
import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ParameterError
from .spectrum import PointSet

logger = logging.getLogger(__name__)

RANDOM_GENERATOR = 'numpy.random.Philox'

CONSTRUCTION_KINDS = ('random', 'parabola', 'family', 'ecregion')


@dataclass(frozen=True)
class ParabolaParams:
    alpha: int
    beta: int
    gamma: int


@dataclass(frozen=True)
class FamilyParams:
    numerator: int
    denominator: int

    @property
    def c(self):
        return Fraction(self.numerator, self.denominator)

    def a(self, p):
        return (self.numerator * p) // self.denominator


def as_fraction(value):
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ParameterError('%r is not a rational number' % (value,))


def reduce_rational(field, value):
    """
    The element of GF(p) equal to the rational `value`, e.g. 1/4 -> inverse of 4.
    """
    value = as_fraction(value)
    if value.denominator % field.p == 0:
        raise ParameterError('%s has no value modulo %d' % (value, field.p))
    return field.div(value.numerator % field.p, value.denominator % field.p)


def parabola_params(field, alpha, beta, gamma):
    return ParabolaParams(*(reduce_rational(field, value) for value in (alpha, beta, gamma)))


def family_params(c):
    c = as_fraction(c)
    if not 0 < c < 1:
        raise ParameterError('c must lie strictly between 0 and 1, got %s' % c)
    return FamilyParams(c.numerator, c.denominator)


def _require_prime_order(plane, minimum):
    field = plane.field
    if not field.is_prime_field:
        raise ParameterError('construction needs a prime field, GF(%d) is not one' % field.q)
    if field.p <= minimum:
        raise ParameterError('construction needs p > %d, got p = %d' % (minimum, field.p))
    return field


def random_set(plane, density, seed):
    """
    Each of the N points independently with probability `density` (a rational).

    Point i is decided by the i-th 64-bit word of a Philox stream keyed by `seed`: its top
    53 bits, read as a uniform in [0, 1), are compared against the density exactly.
    """
    density = as_fraction(density)
    if not 0 <= density <= 1:
        raise ParameterError('density must lie in [0, 1], got %s' % density)
    if int(seed) < 0:
        raise ParameterError('seed must be non-negative')
    raw = np.random.Philox(int(seed)).random_raw(plane.N)
    threshold = -((-density.numerator << 53) // density.denominator)
    mask = (raw >> np.uint64(11)) < np.uint64(threshold)
    return PointSet(plane, mask)


def parabola_region(plane, params):
    """
    S = {(x, y) : alpha x^2 + beta x + gamma < y}, comparing integer lifts.
    """
    field = _require_prime_order(plane, 3)
    if params.alpha % field.p == 0:
        raise ParameterError('alpha must be nonzero')
    xs, ys = plane.affine_embed().grid()
    f = field.add(field.add(field.mul(params.alpha, field.mul(xs, xs)), field.mul(params.beta, xs)),
                  params.gamma)
    inside = field.lift(f) < field.lift(ys)
    return PointSet.from_affine(plane, xs[inside], ys[inside])


def parabola_family(plane, params):
    """
    S = {(x, x^2 + t) : x in GF(p), 0 <= t < a} with a = floor(c p).
    """
    field = _require_prime_order(plane, 2)
    a = params.a(field.p)
    if not 1 <= a <= field.p - 1:
        raise ParameterError('a = floor(c p) = %d outside [1, %d]' % (a, field.p - 1))
    xs, ts = np.meshgrid(field.elements(), np.arange(a, dtype=np.int64), indexing='ij')
    xs = xs.ravel()
    ys = field.add(field.mul(xs, xs), ts.ravel())
    return PointSet.from_affine(plane, xs, ys)


def ec_region(plane):
    """
    S = {(x, v) : x^3 - v is zero or a nonzero square}.
    """
    field = _require_prime_order(plane, 3)
    xs, vs = plane.affine_embed().grid()
    cubes = field.mul(field.mul(xs, xs), xs)
    inside = field.legendre(field.sub(cubes, vs)) >= 0
    return PointSet.from_affine(plane, xs[inside], vs[inside])


@dataclass(frozen=True)
class ConstructionSpec:
    """
    A parsed `kind:key=value,...` construction description.
    """
    kind: str
    params: tuple

    def get(self, key, default=None):
        return dict(self.params).get(key, default)

    @property
    def text(self):
        if not self.params:
            return self.kind
        return '%s:%s' % (self.kind, ','.join('%s=%s' % item for item in self.params))


_PARAMETER_NAMES = {
    'random': ('density', 'seed'),
    'parabola': ('a', 'b', 'g'),
    'family': ('c',),
    'ecregion': (),
}


def parse_construction(text):
    """
    Parse `random:density=1/2,seed=S`, `parabola:a=1/4,b=1,g=1`, `family:c=1/2` or `ecregion`.
    """
    kind, _, rest = text.strip().partition(':')
    kind = kind.strip().lower()
    if kind not in _PARAMETER_NAMES:
        raise ParameterError('unknown construction %r (expected one of %s)' % (kind, ', '.join(CONSTRUCTION_KINDS)))
    params = {}
    for item in filter(None, (part.strip() for part in rest.split(','))):
        key, sep, value = item.partition('=')
        key = key.strip()
        if not sep or key not in _PARAMETER_NAMES[kind]:
            raise ParameterError('bad parameter %r for construction %s' % (item, kind))
        params[key] = value.strip()
    if kind == 'random':
        params.setdefault('density', '1/2')
        as_fraction(params['density'])
        if 'seed' in params:
            params['seed'] = str(int(params['seed']))
    elif kind == 'parabola':
        for key, default in (('a', '1'), ('b', '0'), ('g', '0')):
            params.setdefault(key, default)
            as_fraction(params[key])
    elif kind == 'family':
        if 'c' not in params:
            raise ParameterError('family construction needs c=NUM/DEN')
        family_params(params['c'])
    ordered = tuple((key, params[key]) for key in _PARAMETER_NAMES[kind] if key in params)
    return ConstructionSpec(kind, ordered)


def build_construction(plane, spec, seed=None):
    """
    Build the set `spec` describes over `plane`; returns `(point_set, metadata)`.

    For random sets `seed` wins over a seed named in the construction text; with neither, seed 0 is used.
    """
    metadata = {'construction': spec.text}
    if spec.kind == 'random':
        if seed is None:
            seed = int(spec.get('seed', 0))
        point_set = random_set(plane, spec.get('density'), seed)
        metadata.update({'generator': RANDOM_GENERATOR, 'seed': int(seed), 'density': spec.get('density')})
    elif spec.kind == 'parabola':
        _require_prime_order(plane, 3)
        params = parabola_params(plane.field, spec.get('a'), spec.get('b'), spec.get('g'))
        point_set = parabola_region(plane, params)
        metadata.update({'alpha': params.alpha, 'beta': params.beta, 'gamma': params.gamma})
    elif spec.kind == 'family':
        params = family_params(spec.get('c'))
        point_set = parabola_family(plane, params)
        metadata.update({'c': spec.get('c'), 'a': params.a(plane.q)})
    else:
        point_set = ec_region(plane)
    logger.debug('built %s over %r: %d points', spec.text, plane, point_set.size)
    return point_set, metadata


def set_file_payload(point_set):
    frame = point_set.plane.affine_embed()
    affine = []
    projective = []
    for index in point_set.indices():
        coordinates = frame.coordinates(index)
        if coordinates is None:
            projective.append(list(point_set.plane.triple(index)))
        else:
            affine.append([int(v) for v in coordinates])
    return {'q': point_set.plane.q, 'affine': affine, 'projective': projective}


def write_set_file(path, point_set):
    with io.open(path, 'w', encoding='utf-8') as handle:
        handle.write(json.dumps(set_file_payload(point_set), sort_keys=True) + '\n')


def point_set_from_payload(plane, payload):
    if int(payload.get('q', plane.q)) != plane.q:
        raise ParameterError('set file is for q=%s, plane has q=%d' % (payload.get('q'), plane.q))
    frame = plane.affine_embed()
    indices = set()
    for x, y in payload.get('affine', []):
        indices.add(int(frame.point(plane.field.element(x), plane.field.element(y))))
    for x, y, z in payload.get('projective', []):
        indices.add(int(plane.index_of(x, y, z)))
    return PointSet.from_indices(plane, sorted(indices))


def read_set_file(path):
    """
    Read `{q, affine: [[x, y]...], projective: [[x, y, z]...]}`; returns `(q, payload)`.
    """
    with io.open(path, 'r', encoding='utf-8') as handle:
        payload = json.load(handle)
    if 'q' not in payload:
        raise ParameterError('set file %s has no q' % path)
    return int(payload['q']), payload
