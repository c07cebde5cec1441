#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# ARLAB documentation build configuration file.

import sys
import os

sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.githubpages',
    'sphinx.ext.viewcode',
    'sphinx_autodoc_typehints',
]

primary_domain = 'py'
default_role = 'py:obj'
autodoc_member_order = 'bysource'
autoclass_content = 'both'
autodoc_default_options = {'show-inheritance': True}

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'ARLAB'
copyright = '2026, ARLAB developers'
author = 'ARLAB developers'

version = '0.1.0'
release = '0.1.0'

language = 'en'
exclude_patterns = ['_build']
pygments_style = 'lovelace'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'
html_theme_options = {
    'description': 'Exact Turan and anti-Ramsey numbers of K_{s,t}',
    'font_family': '"Charis SIL", "Noto Serif", serif',
    'head_font_family': 'Lato, sans-serif',
    'code_font_family': '"Code new roman", "Ubuntu Mono", monospace',
    'code_font_size': '1rem',
}
html_sidebars = {
    '**': [
        'about.html',
        'navigation.html',
        'relations.html',
        'searchbox.html',
    ]
}
htmlhelp_basename = 'ARLABdoc'

# -- Options for LaTeX and manual pages -----------------------------------

latex_documents = [
    (master_doc, 'ARLAB.tex', 'ARLAB Documentation', author, 'manual'),
]
man_pages = [
    (master_doc, 'arlab', 'ARLAB Documentation', [author], 1),
]
