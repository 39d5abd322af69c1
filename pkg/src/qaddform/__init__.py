"""Exact and numerical machinery for a two-parameter Askey-Wilson addition formula."""

__version__ = "0.1.0"
