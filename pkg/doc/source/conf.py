# -*- coding: utf-8 -*-
#
# tbk documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing
# dir.

import sys, os

# the package lives in src/
sys.path.insert(0, os.path.abspath(os.path.join('..', '..', 'src')))

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.coverage',
              'sphinx.ext.mathjax', 'sphinx.ext.ifconfig',
              'sphinx.ext.viewcode']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'tbk'
copyright = u'2026, the tbk developers'

version = '0.3'
release = '0.3'

language = 'en'
exclude_patterns = []
pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'tbkdoc'

# -- Options for LaTeX output --------------------------------------------------

latex_elements = {
}
latex_font_size = '11pt'
latex_documents = [
  ('index', 'tbk.tex', u'tbk, the tropical bundle kit',
   u'the tbk developers', 'manual'),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'tbk', u'tbk Documentation',
     [u'the tbk developers'], 1)
]
