"""Combinatorial shifting, compression, and exact verification of intersecting-family bounds."""

__version__ = "0.1.0"
