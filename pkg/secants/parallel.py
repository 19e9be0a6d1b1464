# -*- coding: utf-8 -*-

"""
parallel
----------------------------------

Order-preserving work distribution over thread or process pools.
"""

from __future__ import absolute_import, unicode_literals, print_function

import logging
import multiprocessing
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor

logger = logging.getLogger(__name__)


def _process_executor(max_workers):
    # children inherit the plane cache; platforms without fork fall back to the default
    try:
        ctx = multiprocessing.get_context('fork')
        return ProcessPoolExecutor(max_workers=max_workers, mp_context=ctx)
    except ValueError:
        return ProcessPoolExecutor(max_workers=max_workers)


def ordered_map(func, items, threads=1, processes=False):
    """
    Apply `func` to every item and return the results in input order.

    With `threads <= 1` everything runs in the calling thread. Otherwise the items are
    submitted to a thread pool, or to a process pool when `processes` is true (then `func`
    and the items must be picklable). The result list never depends on completion order.
    """
    items = list(items)
    if threads is None or threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    workers = min(int(threads), len(items))
    logger.debug('dispatching %d work items to %d %s', len(items), workers,
                 'processes' if processes else 'threads')
    executor = _process_executor(workers) if processes else ThreadPoolExecutor(max_workers=workers)
    with executor:
        return list(executor.map(func, items))


def partition(count, parts):
    """
    Split `range(count)` into at most `parts` contiguous `(start, stop)` blocks.
    """
    parts = max(1, min(int(parts), count)) if count else 1
    size, extra = divmod(count, parts)
    blocks = []
    start = 0
    for index in range(parts):
        stop = start + size + (1 if index < extra else 0)
        if stop > start:
            blocks.append((start, stop))
        start = stop
    return blocks
