"""Generic transitivity degrees of simple groups acting on partial flag varieties."""

__version__ = "0.1.0"
