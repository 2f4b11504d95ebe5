#!/usr/bin/env python
#
# planarmono documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

import planarmono  # noqa

# -- General configuration ---------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.viewcode",
    "sphinx.ext.intersphinx",
]
autodoc_typehints = "both"
intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable", None),
}

source_suffix = ".rst"

# The master toctree document.
master_doc = "index"

# General information about the project.
project = "planarmono"
copyright = "2024, planarmono developers"
author = "planarmono developers"

# version
version = planarmono.__version__
release = planarmono.__version__

exclude_patterns = ["_build"]

pygments_style = "sphinx"
html_theme = "sphinx_rtd_theme"
