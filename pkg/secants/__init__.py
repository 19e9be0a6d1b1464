# -*- coding: utf-8 -*-

__author__ = """Secants developers"""
__email__ = ''
__version__ = '0.1.0'
