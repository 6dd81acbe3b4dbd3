"""Exact-arithmetic toolkit for down-up algebras and their quotients."""

from .algebra import Params
from .expr import Alphabet, NcPoly, OMEGA, parse

__version__ = "0.1.0"

__all__ = ["Alphabet", "NcPoly", "OMEGA", "Params", "parse", "__version__"]
