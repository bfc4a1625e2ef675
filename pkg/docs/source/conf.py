# -*- coding: utf-8 -*-
#
# Sphinx configuration of the ndim documentation.

import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join("..", "..")))

from ndim import version as ndim_version  # noqa

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

source_suffix = '.rst'
master_doc = 'index'

project = u'NDIM'
copyright = u'2016, Cloudbase Solutions'
author = u'Cloudbase Solutions'

version = ndim_version.get_version()
release = version

exclude_patterns = []
pygments_style = 'sphinx'
autodoc_member_order = 'bysource'

html_theme = 'alabaster'
htmlhelp_basename = 'NDIMdoc'

man_pages = [
    (master_doc, 'ndim', u'NDIM Documentation', [author], 1),
]
