# -*- coding: utf-8 -*-

"""
plane
----------------------------------

The Desarguesian projective plane PG(2, q) and its affine part AG(2, q).

Points and lines are both normalized homogeneous triples whose first nonzero coordinate
(scanning x, then y, then z) is 1, sorted by the encoded triple x*q^2 + y*q + z. That order
gives a closed-form index:

    (0, 0, 1)  -> 0
    (0, 1, z)  -> 1 + z
    (1, y, z)  -> 1 + q + y*q + z

so incidence lists can be generated in vectorized blocks instead of stored whole.
A point (x:y:z) lies on the line [a:b:c] iff ax + by + cz = 0. Since points and lines share
one list of triples, the points of line i and the lines through point i are the same index
set; `point_lines` is `line_points` read dually.
"""

from __future__ import absolute_import, unicode_literals, print_function

import functools
import logging

import numpy as np

from .errors import PlaneError
from .field import make_field

logger = logging.getLogger(__name__)

# Planes whose incidence table has at most this many entries keep it in memory.
INCIDENCE_CACHE_LIMIT = 1 << 22

# Target number of incidences per generated block.
BLOCK_ENTRIES = 1 << 20


class ProjectivePlane(object):
    """
    Incidence structure of PG(2, q) over `field`. Immutable after construction.
    """

    def __init__(self, field):
        self.field = field
        self.q = field.q
        self.N = self.q * self.q + self.q + 1
        self._triples = None
        self._incidence = None
        self._bitmaps = None

    def __repr__(self):
        return 'ProjectivePlane(q=%d)' % self.q

    @property
    def line_size(self):
        return self.q + 1

    # triples and indices

    @property
    def triples(self):
        """
        (N, 3) array of normalized triples in index order; shared by points and lines.
        """
        if self._triples is None:
            q = self.q
            rows = [(0, 0, 1)]
            rows.extend((0, 1, z) for z in range(q))
            triples = np.array(rows, dtype=np.int64)
            grid_y, grid_z = np.meshgrid(np.arange(q), np.arange(q), indexing='ij')
            affine = np.stack([np.ones(q * q, dtype=np.int64), grid_y.ravel(), grid_z.ravel()], axis=1)
            triples = np.concatenate([triples, affine])
            triples.flags.writeable = False
            self._triples = triples
        return self._triples

    @property
    def points(self):
        return self.triples

    @property
    def lines(self):
        return self.triples

    def normalize(self, x, y, z):
        """
        Scale triples (scalars or equally shaped arrays) so the first nonzero coordinate is 1.
        """
        field = self.field
        x, y, z = (np.asarray(v, dtype=np.int64) for v in (x, y, z))
        if np.any((x == 0) & (y == 0) & (z == 0)):
            raise PlaneError('(0, 0, 0) is not a projective point')
        lead = np.where(x != 0, x, np.where(y != 0, y, z))
        scale = field.inverse_table[lead]
        return field.mul(x, scale), field.mul(y, scale), field.mul(z, scale)

    def index_of(self, x, y, z):
        """
        Index of the normalized form of each triple.
        """
        x, y, z = self.normalize(x, y, z)
        q = self.q
        index = np.where(x != 0, 1 + q + y * q + z, np.where(y != 0, 1 + z, 0))
        return int(index) if index.ndim == 0 else index

    def triple(self, index):
        return tuple(int(v) for v in self.triples[int(index)])

    # incidence

    def incident(self, point, line):
        field = self.field
        x, y, z = self.triple(point)
        a, b, c = self.triple(line)
        return field.add(field.add(field.mul(a, x), field.mul(b, y)), field.mul(c, z)) == 0

    def _block(self, start, stop):
        """
        Sorted point indices of lines start..stop-1 as a (stop-start, q+1) array.

        Every line is spanned by two points P1, P2 and consists of P2 together with
        P1 + t*P2 for t in the field:
            [1:b:c] -> P1 = (-b, 1, 0), P2 = (-c, 0, 1)
            [0:1:c] -> P1 = (1, 0, 0),  P2 = (0, -c, 1)
            [0:0:1] -> P1 = (1, 0, 0),  P2 = (0, 1, 0)
        """
        field = self.field
        lines = self.triples[start:stop]
        a, b, c = lines[:, 0], lines[:, 1], lines[:, 2]
        zero = np.zeros_like(a)
        one = np.ones_like(a)
        first = a != 0
        second = (a == 0) & (b != 0)

        p1 = np.stack([np.where(first, field.neg(b), one),
                       np.where(first, one, zero),
                       zero], axis=1)
        p2 = np.stack([np.where(first, field.neg(c), zero),
                       np.where(first, zero, np.where(second, field.neg(c), one)),
                       np.where(first | second, one, zero)], axis=1)

        t = field.elements()[None, :, None]
        spanned = field.add(p1[:, None, :], field.mul(t, p2[:, None, :]))
        indices = np.empty((len(lines), self.q + 1), dtype=np.int64)
        indices[:, 0] = self.index_of(p2[:, 0], p2[:, 1], p2[:, 2])
        indices[:, 1:] = self.index_of(spanned[..., 0], spanned[..., 1], spanned[..., 2])
        indices.sort(axis=1)
        return indices

    def line_blocks(self, start=0, stop=None):
        """
        Yield `(first_line, indices)` blocks covering lines start..stop-1.
        """
        stop = self.N if stop is None else stop
        if self._incidence is not None:
            yield start, self._incidence[start:stop]
            return
        step = max(1, BLOCK_ENTRIES // (self.q + 1))
        for first in range(start, stop, step):
            yield first, self._block(first, min(stop, first + step))

    @property
    def has_incidence_table(self):
        return self.N * (self.q + 1) <= INCIDENCE_CACHE_LIMIT

    @property
    def incidence(self):
        """
        Full (N, q+1) table `incidence[l]` = sorted points of line l. Only for small planes.
        """
        if self._incidence is None:
            if not self.has_incidence_table:
                raise PlaneError('incidence table for q=%d exceeds %d entries; use line_blocks'
                                 % (self.q, INCIDENCE_CACHE_LIMIT))
            table = self._block(0, self.N)
            table.flags.writeable = False
            self._incidence = table
            logger.debug('cached incidence table for q=%d (%d entries)', self.q, table.size)
        return self._incidence

    @property
    def line_points(self):
        return self.incidence

    @property
    def point_lines(self):
        return self.incidence

    def points_on(self, line):
        if self._incidence is not None or self.has_incidence_table:
            return self.incidence[int(line)]
        return self._block(int(line), int(line) + 1)[0]

    def lines_through(self, point):
        return self.points_on(point)

    @property
    def line_bitmaps(self):
        """
        Python-int bitmaps over point indices, one per line; bit i is point i.
        """
        if self._bitmaps is None:
            bitmaps = []
            for row in self.incidence:
                value = 0
                for index in row:
                    value |= 1 << int(index)
                bitmaps.append(value)
            self._bitmaps = tuple(bitmaps)
        return self._bitmaps

    def _join(self, first, second, message):
        if int(first) == int(second):
            raise PlaneError(message)
        field = self.field
        x1, y1, z1 = self.triple(first)
        x2, y2, z2 = self.triple(second)
        cross = (field.sub(field.mul(y1, z2), field.mul(z1, y2)),
                 field.sub(field.mul(z1, x2), field.mul(x1, z2)),
                 field.sub(field.mul(x1, y2), field.mul(y1, x2)))
        return self.index_of(*cross)

    def line_through(self, point, other):
        """
        The unique line joining two distinct points.
        """
        return self._join(point, other, 'identical points')

    def meet(self, line, other):
        """
        The unique point common to two distinct lines.
        """
        return self._join(line, other, 'identical lines')

    def affine_embed(self):
        return AffineFrame(self)

    def dump(self, kind='points'):
        if kind not in ('points', 'lines'):
            raise PlaneError('dump kind must be points or lines, not %r' % (kind,))
        return [(index,) + self.triple(index) for index in range(self.N)]


class AffineFrame(object):
    """
    AG(2, q) inside PG(2, q): (x, y) is the point (x:y:1), y = dx + b is the line [d:-1:b],
    x = c is the line [1:0:-c] and z = 0 is the line at infinity [0:0:1].
    """

    def __init__(self, plane):
        self.plane = plane
        self.field = plane.field
        self.q = plane.q

    @property
    def size(self):
        return self.q * self.q

    def point(self, x, y):
        return self.plane.index_of(x, y, np.ones_like(np.asarray(x, dtype=np.int64)))

    def line(self, d, b):
        """
        Index of the line y = d*x + b.
        """
        field = self.field
        return self.plane.index_of(d, field.neg(np.ones_like(np.asarray(d, dtype=np.int64))), b)

    def vertical(self, c):
        c = np.asarray(c, dtype=np.int64)
        return self.plane.index_of(np.ones_like(c), np.zeros_like(c), self.field.neg(c))

    @property
    def infinite_line(self):
        return self.plane.index_of(0, 0, 1)

    def all_points(self):
        """
        Indices of the q^2 affine points, x-major.
        """
        xs, ys = self.grid()
        return self.point(xs, ys)

    def grid(self):
        xs, ys = np.meshgrid(self.field.elements(), self.field.elements(), indexing='ij')
        return xs.ravel(), ys.ravel()

    def coordinates(self, index):
        """
        Affine (x, y) of a point index, or None for a point on the line at infinity.
        """
        x, y, z = self.plane.triple(index)
        if z == 0:
            return None
        inverse = self.field.inv(z)
        return self.field.mul(x, inverse), self.field.mul(y, inverse)

    def affine_mask(self):
        mask = np.zeros(self.plane.N, dtype=bool)
        mask[self.all_points()] = True
        return mask


def build_plane(field):
    """
    The canonical PG(2, q) over `field`.
    """
    plane = ProjectivePlane(field)
    logger.debug('built %r with %d points', plane, plane.N)
    return plane


@functools.lru_cache(maxsize=8)
def plane_of_order(q):
    """
    Per-process cache so workers rebuild each plane at most once.
    """
    return build_plane(make_field(q))


def line_through(plane, point, other):
    return plane.line_through(point, other)


def affine_embed(plane):
    return plane.affine_embed()
