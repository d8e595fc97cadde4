"""Exact spectra of graph coronae via the coronal invariant."""

from .algebra import IntPoly, RatFunc
from .engine import Coronal, char_poly, coronal
from .graphs import Graph, corona

__all__ = ["Coronal", "Graph", "IntPoly", "RatFunc", "char_poly", "coronal", "corona"]
__version__ = "0.1.0"
