#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Configuration file for the Sphinx documentation builder.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import re
import sys

sys.path.insert(0, os.path.abspath(".."))

# -- Project information -----------------------------------------------------

project = "qtrig"
copyright = "2024, The qtrig developers"
author = "The qtrig developers"

import qtrig

release = qtrig.__version__
version = re.match(r"^(\d+\.\d+)", release).expand(r"\1")

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "sphinx_autodoc_typehints",
    "sphinx_automodapi.automodapi",
    "sphinx_copybutton",
]

exclude_patterns = ["_build"]
source_suffix = [".rst"]
master_doc = "index"

autosummary_generate = True
autosummary_imported_members = False
automodapi_toctreedirnm = "code/api"
automodsumm_inherited_members = True

# the order in which autodoc lists the documented members
autodoc_member_order = "bysource"

# -- Options for HTML output -------------------------------------------------

html_theme = "alabaster"
htmlhelp_basename = "qtrigdoc"
