"""Exact knot polynomials and the finiteness of their Vassiliev expansions."""

__version__ = "0.1.0"
