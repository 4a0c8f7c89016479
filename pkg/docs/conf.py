#!/usr/bin/env python3

import prsim

# sphinx extensions (minimally, we want autodoc and viewcode to build the site)
extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.mathjax",
    "sphinx.ext.todo",
    "sphinx.ext.viewcode",
]

project = "prsim"
copyright = "2021, PRSim Developers"
author = "PRSim Developers"
# The short X.Y version.
version = prsim.__version__
# The full version, including alpha/beta/rc tags.
release = version

# The language for content autogenerated by Sphinx. Refer to documentation
# for a list of supported languages.
language = "en"

# List of patterns, relative to source directory, that match files and
# directories to ignore when looking for source files.
exclude_patterns = ["_build"]

# If true, `todo` and `todoList` produce output, else they produce nothing.
todo_include_todos = True

# keep the documented signatures in source order
autodoc_member_order = "bysource"


# HTML Theme Options
html_show_sourcelink = True
html_sidebars = {
    "**": ["logo-text.html", "globaltoc.html", "localtoc.html", "searchbox.html"]
}
html_theme = "sphinx_material"
html_theme_options = {
    "nav_title": "PRSim",
    # Set the color and the accent color
    "color_primary": "indigo",
    "color_accent": "light-blue",
    # Visible levels of the global TOC; -1 means unlimited
    "globaltoc_depth": 2,
    # If False, expand all TOC entries
    "globaltoc_collapse": False,
    # "hero" text (shown in the top banner)
    "heroes": {
        "index": "Single-source SimRank with a reverse PageRank hub index",
        "queries": "Answering queries",
    },
}

# The name of the Pygments (syntax highlighting) style to use.
pygments_style = "friendly"

# Output file base name for HTML help builder.
htmlhelp_basename = "prsimdoc"
