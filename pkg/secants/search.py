# -*- coding: utf-8 -*-

"""
search
----------------------------------

min over point sets S of max_k L_k(S): exactly for tiny planes, by local search elsewhere.

A set and its complement have mirrored histograms and so the same mode frequency. N is always
odd, so the exhaustive search only visits bitmaps with at most N // 2 points and sees each
complement pair exactly once.
"""

from __future__ import absolute_import, unicode_literals, print_function

import logging
from dataclasses import dataclass

import numpy as np

from .errors import SearchLimitError
from .parallel import ordered_map
from .plane import plane_of_order
from .spectrum import PointSet

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX_ORDER = 4

# Subsets per vectorized batch in the exhaustive search.
BATCH_SIZE = 1 << 15

POPCOUNT_TABLE = np.array([bin(i).count('1') for i in range(256)], dtype=np.uint8)


def popcount(values):
    """
    Bit counts of an array of non-negative integers below 2^32.
    """
    values = np.asarray(values, dtype=np.uint32)
    total = np.zeros(values.shape, dtype=np.int64)
    for shift in (0, 8, 16, 24):
        total += POPCOUNT_TABLE[(values >> np.uint32(shift)) & np.uint32(0xFF)]
    return total


@dataclass(frozen=True, eq=False)
class SearchResult:
    q: int
    best_mode_count: int
    witness: PointSet
    subsets_examined: int
    method: str
    seed: int = None

    def as_dict(self):
        return {
            'q': self.q,
            'N': self.witness.plane.N,
            'method': self.method,
            'best_mode_count': self.best_mode_count,
            'witness': [int(i) for i in self.witness.indices()],
            'witness_bitmap': self.witness.to_int(),
            'witness_size': self.witness.size,
            'subsets_examined': self.subsets_examined,
            'seed': self.seed,
        }


def _line_masks(plane):
    return np.array(plane.line_bitmaps, dtype=np.uint32)


def _mode_counts(bitmaps, line_masks, q):
    counts = popcount(bitmaps[:, None] & line_masks[None, :])
    histograms = np.stack([(counts == k).sum(axis=1) for k in range(q + 2)], axis=1)
    return histograms.max(axis=1)


def _search_range(args):
    """
    Best (mode_count, bitmap) over the half-space bitmaps in [start, stop). Takes plain ints so
    it can run in a worker process.
    """
    q, start, stop = args
    plane = plane_of_order(q)
    line_masks = _line_masks(plane)
    limit = plane.N // 2
    best = None
    examined = 0
    for first in range(start, stop, BATCH_SIZE):
        bitmaps = np.arange(first, min(stop, first + BATCH_SIZE), dtype=np.uint32)
        bitmaps = bitmaps[popcount(bitmaps) <= limit]
        if not len(bitmaps):
            continue
        examined += len(bitmaps)
        modes = _mode_counts(bitmaps, line_masks, q)
        at = int(np.argmin(modes))
        candidate = (int(modes[at]), int(bitmaps[at]))
        if best is None or candidate < best:
            best = candidate
    return best, examined


def _prefix_ranges(N, parts):
    """
    Split [0, 2^N) by the high-order bits of the bitmap into 2^b contiguous ranges.
    """
    bits = 0
    while (1 << bits) < parts and bits < N:
        bits += 1
    width = N - bits
    return [(prefix << width, (prefix + 1) << width) for prefix in range(1 << bits)]


def exhaustive_minmax(plane, threads=1):
    """
    Exact minimum of the mode frequency over all subsets of a plane of order at most 4.

    The witness is the smallest bitmap (bit i = point i) with at most N // 2 points attaining
    the minimum. Partitions are merged by (mode_count, bitmap), so the answer does not depend
    on `threads`.
    """
    q = plane.q
    if q > EXHAUSTIVE_MAX_ORDER:
        raise SearchLimitError('exhaustive limit: q=%d exceeds %d' % (q, EXHAUSTIVE_MAX_ORDER))
    ranges = _prefix_ranges(plane.N, max(1, int(threads)) * 4)
    logger.debug('exhaustive search over q=%d in %d ranges', q, len(ranges))
    parts = ordered_map(_search_range, [(q, start, stop) for start, stop in ranges],
                        threads=threads, processes=True)
    best = min(part[0] for part in parts if part[0] is not None)
    examined = sum(part[1] for part in parts)
    mode_count, bitmap = best
    logger.info('exhaustive q=%d: min mode frequency %d over %d subsets', q, mode_count, examined)
    return SearchResult(
        q=q,
        best_mode_count=mode_count,
        witness=PointSet.from_int(plane, bitmap),
        subsets_examined=examined,
        method='exhaustive',
    )


def _objective(histograms, N):
    """
    Mode frequency first, then the sum of squared histogram entries (the histogram's spread).
    """
    return histograms.max(axis=-1) * (N * N + 1) + (histograms * histograms).sum(axis=-1)


def _flip_histograms(counts, histogram, lines_through, mask, q):
    """
    Histogram after flipping each point in turn, as an (N, q+2) array.
    """
    N = len(mask)
    delta = np.where(mask, -1, 1)
    old = counts[lines_through]
    new = old + delta[:, None]
    rows = np.repeat(np.arange(N), lines_through.shape[1])
    result = np.tile(histogram, (N, 1))
    np.add.at(result, (rows, old.ravel()), -1)
    np.add.at(result, (rows, new.ravel()), 1)
    return result


def _incidence_rows(plane):
    """
    Points of every line as an (N, q+1) array. Points and lines share indices, so this is
    also the table of lines through every point.
    """
    if plane.has_incidence_table:
        return np.asarray(plane.incidence)
    return np.concatenate([block for _, block in plane.line_blocks()])


def local_search(plane, iters=200, seed=0, restarts=4):
    """
    Best-flip descent from random half-density starts. When no flip improves, a random point
    is flipped instead. The best set seen over all restarts is returned.
    """
    rng = np.random.default_rng(seed)
    q = plane.q
    N = plane.N
    line_points = _incidence_rows(plane)
    lines_through = line_points
    best = None
    examined = 0

    for restart in range(max(1, int(restarts))):
        mask = rng.random(N) < 0.5
        counts = mask[line_points].sum(axis=1)
        histogram = np.bincount(counts, minlength=q + 2)
        score = int(_objective(histogram, N))
        for _ in range(int(iters)):
            current = int(histogram.max())
            if best is None or current < best[0]:
                best = (current, mask.copy())
            flipped = _flip_histograms(counts, histogram, lines_through, mask, q)
            scores = _objective(flipped, N)
            examined += N
            point = int(np.argmin(scores))
            if scores[point] >= score:
                point = int(rng.integers(N))
            counts[lines_through[point]] += -1 if mask[point] else 1
            mask[point] = not mask[point]
            histogram = flipped[point]
            score = int(scores[point])
        if best is None or int(histogram.max()) < best[0]:
            best = (int(histogram.max()), mask.copy())
        logger.debug('local search q=%d restart %d: best so far %d', q, restart, best[0])

    result = SearchResult(
        q=q,
        best_mode_count=best[0],
        witness=PointSet(plane, best[1]),
        subsets_examined=examined,
        method='local',
        seed=seed,
    )
    logger.info('local search q=%d seed=%s: %d', q, seed, result.best_mode_count)
    return result
