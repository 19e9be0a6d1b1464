#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# secants documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# Get the project root dir, which is the parent dir of this
cwd = os.getcwd()
project_root = os.path.dirname(cwd)

# Insert the project root dir as the first element in the PYTHONPATH.
# This lets us ensure that the source package is imported, and that its
# version is used.
sys.path.insert(0, project_root)

import secants

# -- General configuration ---------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode']

templates_path = []

source_suffix = '.rst'

master_doc = 'index'

project = u'Secants'
copyright = u"Secants developers"

version = secants.__version__
release = secants.__version__

exclude_patterns = ['_build']

pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------

html_theme = 'default'

html_static_path = []

htmlhelp_basename = 'secantsdoc'

# -- Options for LaTeX output ------------------------------------------

latex_documents = [
    ('index', 'secants.tex',
     u'Secants Documentation',
     u'Secants developers', 'manual'),
]

# -- Options for manual page output ------------------------------------

man_pages = [
    ('index', 'secants',
     u'Secants Documentation',
     [u'Secants developers'], 1)
]
