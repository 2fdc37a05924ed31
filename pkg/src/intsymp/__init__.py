"""Exact arithmetic for intermediate symplectic characters.

The package computes the characters sp^(k,n-k) interpolating between
symplectic characters (k = n) and Schur polynomials (k = 0) by ten
different routes, and verifies the determinant, Pfaffian, bounded-plane-
partition and lozenge-tiling identities they satisfy.
"""

from .poly import LaurentPoly, PolyFrac, ExactDivisionError

__all__ = ["LaurentPoly", "PolyFrac", "ExactDivisionError"]

__version__ = "0.1.0"
