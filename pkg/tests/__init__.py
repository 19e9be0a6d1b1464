# -*- coding: utf-8 -*-
from __future__ import absolute_import, unicode_literals, print_function

import os

# Long-running sweeps only run with SECANTS_SLOW=1 in the environment.
SLOW = os.environ.get('SECANTS_SLOW') == '1'


def odd_primes(low, high):
    return [p for p in range(max(3, low), high + 1)
            if all(p % d for d in range(2, int(p ** 0.5) + 1))]
