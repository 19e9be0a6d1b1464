# -*- coding: utf-8 -*-

"""
sweep
----------------------------------

Mode frequency of a construction across a list of plane orders and seeds, one row per
(order, seed), in a fixed column order.
"""

from __future__ import absolute_import, unicode_literals, print_function

import logging
import math
from dataclasses import asdict, dataclass, fields

from .construct import build_construction, parse_construction
from .errors import SecantsError
from .output import SWEEP_SCHEMA, csv_bytes
from .parallel import ordered_map
from .plane import plane_of_order
from .spectrum import (bounds_report, compute_spectra, cor_ceiling, expected_mode_frequency, meets_cor_bound,
                       verify_counting_identities)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepRow:
    q: int
    construction: str
    seed: object = None
    set_size: int = None
    mode_k: int = None
    mode_count: int = None
    cor_bound: float = None
    cor_ceiling: int = None
    prop_bound: float = None
    ratio: float = None
    expected_mode: float = None
    thm_lower: float = None
    thm_lower_clamped: float = None
    thm_upper_ref: float = None
    eq1: bool = None
    eq2: bool = None
    var: bool = None
    cor_ok: bool = None
    error: str = None

    @property
    def passed(self):
        return not self.error and bool(self.eq1 and self.eq2 and self.var and self.cor_ok)

    def as_dict(self):
        return asdict(self)


SWEEP_COLUMNS = tuple(f.name for f in fields(SweepRow))


def _row(q, spec, seed, point_set, spectrum):
    bounds = bounds_report(q, point_set.size)
    identities = verify_counting_identities(spectrum)
    expected = None
    if spec.kind == 'random':
        expected = float(expected_mode_frequency(q, spec.get('density')))
    row = SweepRow(
        q=q,
        construction=spec.text,
        seed=seed,
        set_size=point_set.size,
        mode_k=spectrum.mode_k,
        mode_count=spectrum.mode_count,
        cor_bound=bounds.cor_bound,
        cor_ceiling=cor_ceiling(q),
        prop_bound=bounds.prop_bound,
        ratio=spectrum.mode_count / q ** 1.5,
        expected_mode=expected,
        thm_lower=bounds.thm_lower,
        thm_lower_clamped=max(0.0, bounds.thm_lower),
        thm_upper_ref=bounds.thm_upper_ref,
        eq1=identities.eq1,
        eq2=identities.eq2,
        var=identities.var_ok,
        cor_ok=meets_cor_bound(spectrum),
    )
    if not row.passed:
        logger.warning('sweep row q=%d seed=%s failed a check', q, seed)
    return row


def _sweep_cell(cell):
    """
    All rows of one plane order. Takes plain values so it can run in a worker process.
    """
    q, text, seeds = cell
    spec = parse_construction(text)
    try:
        plane = plane_of_order(q)
        built = [build_construction(plane, spec, seed=seed) for seed in seeds]
        spectra = compute_spectra(plane, [point_set for point_set, _ in built])
    except (SecantsError, ValueError) as e:
        logger.warning('sweep cell q=%d failed: %s', q, e)
        return [SweepRow(q=q, construction=spec.text, seed=seed, error=str(e)) for seed in seeds]
    rows = [_row(q, spec, seed, point_set, spectrum)
            for seed, (point_set, _), spectrum in zip(seeds, built, spectra)]
    logger.info('sweep q=%d: %d rows', q, len(rows))
    return rows


def run_sweep(primes, construction, seeds=(0,), threads=1):
    """
    One row per (order, seed). Random constructions use every seed; the deterministic ones
    yield one row per order with a blank seed. Orders are spread over worker processes; the
    rows come back in input order whatever `threads` is.
    """
    spec = parse_construction(construction) if isinstance(construction, str) else construction
    if spec.kind == 'random':
        seeds = tuple(int(seed) for seed in seeds)
    else:
        seeds = (None,)
    cells = [(int(q), spec.text, seeds) for q in primes]
    results = ordered_map(_sweep_cell, cells, threads=threads, processes=True)
    return [row for rows in results for row in rows]


def sweep_csv(rows):
    return csv_bytes(SWEEP_COLUMNS, [row.as_dict() for row in rows], schema=SWEEP_SCHEMA)


def mean_ratio(rows, q):
    ratios = [row.ratio for row in rows if row.q == q and row.ratio is not None]
    return math.fsum(ratios) / len(ratios) if ratios else None
