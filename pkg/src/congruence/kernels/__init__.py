"""Hot loops for prime sweeps.

Two interchangeable backends: ``numba`` (default) and ``numpy``. Pick one with
``CONGRUENCE_BACKEND=numba|numpy``; when numba cannot be imported the numpy
backend is used silently. Every function takes plain ints and moduli below
``MAX_MODULUS``; callers fall back to Python integers above that.
"""
from __future__ import annotations

import os
from types import ModuleType

from ..config import BACKEND_ENV
from . import _numpy

MAX_MODULUS = _numpy.MAX_MODULUS


def load(name: str | None = None) -> ModuleType:
    """Return the backend module called ``name`` (default: from the environment)."""
    name = (name or os.environ.get(BACKEND_ENV) or "numba").lower()
    if name == "numpy":
        return _numpy
    if name != "numba":
        raise ValueError(f"{BACKEND_ENV} must be 'numba' or 'numpy', got {name!r}")
    try:
        from . import _numba
    except ImportError:
        return _numpy
    return _numba


backend = load()

powmod_range = backend.powmod_range
sum_powers_mod = backend.sum_powers_mod
factorial_mod = backend.factorial_mod
harmonic_mod = backend.harmonic_mod
fermat_digits = backend.fermat_digits
power_sums_mod = backend.power_sums_mod
spf_sieve = backend.spf_sieve
korselt_giuga_scan = backend.korselt_giuga_scan
gv_recurrence_mod = backend.gv_recurrence_mod

__all__ = [
    "MAX_MODULUS", "backend", "load", "powmod_range", "sum_powers_mod", "factorial_mod",
    "harmonic_mod", "fermat_digits", "power_sums_mod", "spf_sieve", "korselt_giuga_scan",
    "gv_recurrence_mod",
]
