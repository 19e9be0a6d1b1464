# -*- coding: utf-8 -*-

"""
Adapter to use Python str.format() to render a command summary
"""

from __future__ import absolute_import, unicode_literals, print_function

from string import Formatter


class SummaryFormatter(Formatter):
    """
    String formatter for report summaries.

    Keys missing from the context render as `default`, `None` renders as `default`, and lists
    or tuples render comma separated so histograms fit on one line.
    """
    def __init__(self, default=''):
        Formatter.__init__(self)
        self.default = default

    def get_value(self, key, args, kwds):
        if isinstance(key, str):
            try:
                return kwds[key]
            except KeyError:
                return self.default
        return Formatter.get_value(self, key, args, kwds)

    def format_field(self, value, format_spec):
        if value is None:
            return self.default
        if isinstance(value, (list, tuple)):
            return ','.join(self.format_field(item, format_spec) for item in value)
        return Formatter.format_field(self, value, format_spec)


class StringFormatAdapter(object):
    """
    Adapter for command summaries rendered with standard python string substitution
    using named arguments.
    """
    syntax = 'format'
    def render(self, template='', context=None, *args, **kwargs):
        if context is None:
            context = {}
        formatter = SummaryFormatter(default=kwargs.get('default', ''))
        return formatter.format(template, **context)
