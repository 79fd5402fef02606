# Configuration file for the Sphinx documentation builder.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

# -- Project information -----------------------------------------------------

project = u'casmodes'
copyright = u'2026, casmodes developers'
author = u'casmodes developers'

ns = {}
with open(os.path.join(os.path.dirname(__file__), '..', 'casmodes', 'version.py')) as f:
	exec(f.read(), ns)
version = u''
release = ns['__version__']


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = None
exclude_patterns = [u'_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
htmlhelp_basename = 'casmodesdoc'


# -- Options for LaTeX output ------------------------------------------------

latex_documents = [
    (master_doc, 'casmodes.tex', u'casmodes Documentation',
     author, 'manual'),
]

man_pages = [
    (master_doc, 'casmodes', u'casmodes Documentation',
     [author], 1)
]


# -- Extension configuration -------------------------------------------------

intersphinx_mapping = {
	'python': ('https://docs.python.org/3', None),
	'numpy': ('https://numpy.org/doc/stable/', None),
	'scipy': ('https://docs.scipy.org/doc/scipy/', None),
}
