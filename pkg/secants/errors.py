# -*- coding: utf-8 -*-

"""
errors
----------------------------------

Exception hierarchy for the secants package.
"""

from __future__ import absolute_import, unicode_literals, print_function


class SecantsError(Exception):
    pass


class FieldError(SecantsError, ValueError):
    pass


class PlaneError(SecantsError, ValueError):
    pass


class ParameterError(SecantsError, ValueError):
    pass


class SearchLimitError(SecantsError, ValueError):
    pass


class SingularCurveError(SecantsError, ValueError):
    pass


class HypergraphError(SecantsError, ValueError):
    pass


class UncoloredVertexError(SecantsError, ValueError):
    pass


class ColoringError(SecantsError, RuntimeError):
    """
    Raised when the two-phase coloring cannot proceed.

    On a valid n-uniform linear hypergraph with n edges this never happens, so seeing it
    means either the input slipped past validation or the coloring code is broken.
    `edge` is the 1-based index of the offending edge.
    """

    def __init__(self, message, edge=None, diagnostics=None):
        self.edge = edge
        self.diagnostics = diagnostics or {}
        super(ColoringError, self).__init__(message)
