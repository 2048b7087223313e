# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.append( os.path.dirname( os.getcwd() ) )


# -- Project information -----------------------------------------------------

project = 'epframe'
copyright = '2026, epframe developers'
author = 'epframe developers'

# The full version, including alpha/beta/rc tags
release = '0.1.0'


# -- General configuration ---------------------------------------------------

extensions = [
    "recommonmark",
    "sphinx.ext.autodoc",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.autosummary",
    "sphinx.ext.mathjax",
    "nbsphinx",
]

templates_path = ['_templates']

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

# the docs build without the numeric stack installed
autodoc_mock_imports = ["sciunit", "scipy", "numpy"]

nbsphinx_execute = "never"
nbsphinx_allow_errors = True


# -- Options for HTML output -------------------------------------------------

html_theme = 'bizstyle'
