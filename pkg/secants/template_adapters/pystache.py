# -*- coding: utf-8 -*-

"""
Adapter to use pystache to render a mustache summary template
"""

from __future__ import absolute_import, unicode_literals, print_function

import pystache


class PystacheAdapter(object):
    """
    Adapter for command summaries written as mustache templates.

    Mustache iterates lists of dicts natively, so a histogram can be rendered row by row with
    `{{#histogram}}{{k}}: {{count}}{{/histogram}}`.
    """
    syntax = 'mustache'

    def render(self, template='', context=None, *args, **kwargs):
        if context is None:
            context = {}

        renderer = pystache.Renderer(missing_tags='ignore', escape=lambda text: text)
        return renderer.render(template, context)
