# -*- coding: utf-8 -*-

"""
output
----------------------------------

CSV, JSON and text emission. Everything is produced as bytes so the CLI can write to stdout
or a file the same way, and repeated runs produce identical bytes.
"""

from __future__ import absolute_import, unicode_literals, print_function

import io
import json
from fractions import Fraction

import numpy as np
import unicodecsv

FLOAT_DIGITS = 9

SWEEP_SCHEMA = 'secants-sweep/1'


def normalize(value):
    """
    Turn numpy scalars and arrays, fractions and tuples into plain JSON values, rounding floats.
    """
    if isinstance(value, dict):
        return {str(key): normalize(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [normalize(item) for item in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return round(float(value), FLOAT_DIGITS)
    if isinstance(value, Fraction):
        return '%d/%d' % (value.numerator, value.denominator)
    return value


def csv_cell(value):
    if value is None:
        return ''
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (float, np.floating)):
        return repr(round(float(value), FLOAT_DIGITS))
    if isinstance(value, Fraction):
        return '%d/%d' % (value.numerator, value.denominator)
    if isinstance(value, np.integer):
        return int(value)
    return value


def csv_bytes(columns, rows, schema=None):
    """
    `rows` are dicts keyed by `columns` (or sequences in column order).
    """
    stream = io.BytesIO()
    if schema:
        stream.write(('# schema: %s\n' % schema).encode('utf-8'))
    writer = unicodecsv.writer(stream, encoding='utf-8', lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        if isinstance(row, dict):
            row = [row.get(column) for column in columns]
        writer.writerow([csv_cell(value) for value in row])
    return stream.getvalue()


def json_bytes(payload):
    return (json.dumps(normalize(payload), sort_keys=True, indent=2) + '\n').encode('utf-8')


def text_bytes(text):
    if not text.endswith('\n'):
        text += '\n'
    return text.encode('utf-8')


def read_csv(path):
    """
    Rows of a CSV file written by `csv_bytes`, as dicts of strings; schema lines are skipped.
    """
    with io.open(path, 'rb') as handle:
        lines = [line for line in handle if not line.startswith(b'#')]
    reader = unicodecsv.DictReader(lines, encoding='utf-8')
    return list(reader)
