# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Project information -----------------------------------------------------

project = "unbreak"
copyright = "2026, unbreak developers"
author = "unbreak developers"
release = "0.1.0"

# -- General configuration ---------------------------------------------------

extensions = ["sphinxarg.ext", "m2r", "sphinx.ext.mathjax"]

templates_path = ["_templates"]
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

root_doc = "index"
source_suffix = [".rst", ".md"]
# -- Options for HTML output -------------------------------------------------
html_theme = "alabaster"
html_theme_options = {
    "description": "Breakability tests and recursive understanding on unbreakable graphs",
}
html_sidebars = {
    "**": [
        "about.html",
        "globaltoc.html",
        "searchbox.html",
    ]
}
