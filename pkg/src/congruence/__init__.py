"""Exact congruences for factorials, Bernoulli, Stirling and harmonic numbers modulo
prime powers, with q-analogs and a registry of checkable claims."""
from __future__ import annotations

from .arith import PadicValue, RationalPolynomial, ResidueModPk
from .errors import CongruenceError

__version__ = "0.1.0"

__all__ = ["CongruenceError", "PadicValue", "RationalPolynomial", "ResidueModPk", "__version__"]
