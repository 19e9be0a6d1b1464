# -*- coding: utf-8 -*-

from __future__ import absolute_import, unicode_literals, print_function

from .string_format import StringFormatAdapter
from .pystache import PystacheAdapter
