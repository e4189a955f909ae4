"""Time the numba and numpy kernel backends on the same inputs.

    python3 benchmarks/bench_kernels.py --prime 16843 --repeat 3
"""
from __future__ import annotations

import argparse
import time

from congruence.kernels import _numpy

try:
    from congruence.kernels import _numba
except ImportError:  # numba missing: only the numpy column is reported
    _numba = None


def _cases(p: int) -> dict[str, tuple]:
    m3 = p**3
    return {
        "harmonic_mod p^3": ("harmonic_mod", (p - 1, 1, m3, p * p * (p - 1))),
        "sum_powers_mod p^3": ("sum_powers_mod", (p - 1, p - 1, m3)),
        "factorial_mod p^3": ("factorial_mod", (p - 1, m3)),
        "fermat_digits": ("fermat_digits", (p,)),
        "power_sums_mod e<=64": ("power_sums_mod", (p - 1, 64, p * p)),
        "korselt_giuga_scan 1e5": ("korselt_giuga_scan", (100_000,)),
    }


def _best(fn, args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--prime", type=int, default=16843)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    print(f"{'kernel':26s} {'numpy s':>10s} {'numba s':>10s} {'speedup':>8s}")
    for label, (name, fargs) in _cases(args.prime).items():
        t_np = _best(getattr(_numpy, name), fargs, args.repeat)
        if _numba is None:
            print(f"{label:26s} {t_np:10.4f} {'-':>10s} {'-':>8s}")
            continue
        fn = getattr(_numba, name)
        fn(*fargs)  # compile outside the timed region
        t_nb = _best(fn, fargs, args.repeat)
        print(f"{label:26s} {t_np:10.4f} {t_nb:10.4f} {t_np / t_nb:8.1f}x")


if __name__ == "__main__":
    main()
