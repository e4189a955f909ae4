"""Runtime caps and paths.

Caps are module-level so the CLI can override them once at startup;
library code reads them through :func:`caps`.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, replace
from pathlib import Path

CACHE_ENV = "CONGRUENCE_CACHE"
BACKEND_ENV = "CONGRUENCE_BACKEND"


@dataclass(frozen=True)
class Caps:
    stirling: int = 3000
    bernoulli_exact: int = 400
    derby: int = 101
    factorization: int = 10**9


_caps = Caps()


def caps() -> Caps:
    return _caps


def set_caps(**changes: int) -> Caps:
    """Replace selected caps; returns the new value. Non-positive caps are rejected."""
    global _caps
    for key, value in changes.items():
        if value is not None and value <= 0:
            raise ValueError(f"cap {key} must be positive, got {value}")
    _caps = replace(_caps, **{k: v for k, v in changes.items() if v is not None})
    return _caps


def cache_path() -> Path:
    """Location of the Bernoulli cache file; ``$CONGRUENCE_CACHE`` wins."""
    override = os.environ.get(CACHE_ENV)
    if override:
        p = Path(override)
        return p / "bernoulli.cache" if p.is_dir() or not p.suffix else p
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "congruence" / "bernoulli.cache"
