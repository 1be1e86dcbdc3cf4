# -*- coding: utf-8 -*-
#
# deltacalc documentation build configuration file.

import sys
import os

# make the package importable for autodoc
sys.path.insert(0, os.path.abspath(__file__ + "/../../../"))

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'
if on_rtd:
    os.environ['CONFIG'] = 'deltacalc.settings.DevConfig'

# -- General configuration ------------------------------------------------

autodoc_member_order = 'bysource'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
]

napoleon_use_ivar = True

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'deltacalc'
copyright = u'2026, the deltacalc developers'
author = u'the deltacalc developers'

version = '0.1.0'
release = '0.1.0'

language = 'en'

exclude_patterns = []

add_module_names = False

pygments_style = 'sphinx'

todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'

html_static_path = []

html_sidebars = {'**': ['localtoc.html', 'relations.html', 'searchbox.html']}

htmlhelp_basename = 'deltacalcdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}

latex_documents = [
    (master_doc, 'deltacalc.tex', u'deltacalc Documentation', author, 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'deltacalc', u'deltacalc Documentation', [author], 1)
]

texinfo_documents = [
    (master_doc, 'deltacalc', u'deltacalc Documentation',
     author, 'deltacalc', 'Calculus on time scales.', 'Miscellaneous'),
]
