"""Exact computations with finite-dimensional Lie algebras and finite Lie rings."""

from .exactlin import GF, QQ, Field, Matrix, Subspace
from .liecore import LieAlgebra, quotient
from .finring import FiniteLieRing

__version__ = "0.1.0"

__all__ = ["GF", "QQ", "Field", "FiniteLieRing", "LieAlgebra", "Matrix", "Subspace", "quotient", "__version__"]
