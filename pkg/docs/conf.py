# Configuration file for the Sphinx documentation builder.
import os
import sys

sys.path.insert(0, os.path.abspath('..'))

from msl import badgoods

if os.getenv('READTHEDOCS') == 'True':
    html_theme = 'default'
else:
    html_theme = 'sphinx_rtd_theme'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
]

autodoc_default_options = {
    'member-order': 'bysource',
    'undoc-members': None,
    'show-inheritance': None,
}
autosummary_generate = True
autoclass_content = 'both'

# the docstrings are written in the numpy style
napoleon_google_docstring = False
napoleon_numpy_docstring = True
napoleon_include_init_with_doc = False
napoleon_include_special_with_doc = True
napoleon_use_param = True
napoleon_use_rtype = False

source_suffix = '.rst'
master_doc = 'index'

project = 'MSL-BadGoods'
copyright = badgoods.__copyright__[1:]
author = badgoods.__author__
version = badgoods.__version__
release = badgoods.__version__
language = 'en'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

htmlhelp_basename = 'MSL-BadGoodsdoc'
latex_elements = {'papersize': 'a4paper', 'pointsize': '11pt'}
latex_documents = [
    (master_doc, 'MSL-BadGoods.tex', 'MSL-BadGoods Documentation', author, 'manual'),
]
man_pages = [
    (master_doc, 'msl-badgoods', 'MSL-BadGoods Documentation', [author], 1),
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
}

# warn about all broken links
nitpicky = True
