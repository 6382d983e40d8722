"""Exact computations with the finite-dimensional modules L_{m/n} of the rational
Cherednik algebra of S_n, their filtrations, and the coinvariant algebra."""

from .dunkl import CherednikParam, NotCoprime
from .irrep import IrrepModel, build_irrep
from .poly import Poly
from .qt import QtPolynomial

__version__ = "0.1.0"

__all__ = ["CherednikParam", "IrrepModel", "NotCoprime", "Poly", "QtPolynomial", "build_irrep"]
