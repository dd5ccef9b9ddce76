#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# cdpr-lqg documentation build configuration file.

import sys
import os

import sphinx_rtd_theme

# The package is documented from the source tree.
sys.path.insert(0, os.path.abspath('../../'))

import cdprlqg

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.todo',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'cdpr-lqg'
copyright = '2026, The cdpr-lqg authors'

version = cdprlqg.version.version
release = cdprlqg.version.version

exclude_patterns = []
pygments_style = 'sphinx'

autodoc_default_flags = ["members", "undoc-members", "show-inheritance"]
autodoc_member_order = "bysource"

todo_include_todos = True

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
htmlhelp_basename = 'cdpr-lqgdoc'

# -- Options for LaTeX and manual page output -----------------------------

latex_documents = [
  ('index', 'cdpr-lqg.tex', 'cdpr-lqg Documentation',
   'The cdpr-lqg authors', 'manual'),
]

man_pages = [
    ('index', 'cdpr-lqg', 'cdpr-lqg Documentation',
     ['The cdpr-lqg authors'], 1)
]

intersphinx_mapping = {
    'http://docs.python.org/3/': None,
    'https://numpy.org/doc/stable/': None,
    'https://docs.scipy.org/doc/scipy/': None
}
