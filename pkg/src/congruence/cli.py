"""Command-line front end: ``congruence compute|verify|scan|lift|claims``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from . import config

REPORT_COLUMNS = ("claim", "p", "modulus", "lhs", "rhs", "holds", "ns")


def parse_range(text: str) -> tuple[int, int]:
    """'A..B' (inclusive) or a single integer."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if a < 3:
        raise argparse.ArgumentTypeError(f"range lower bound must be >= 3, got {a}")
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, no whitespace, integers and strings only."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="congruence",
                                 description="Exact congruences around Wilson's theorem.")
    ap.add_argument("--stirling-cap", type=int)
    ap.add_argument("--bernoulli-cap", type=int, help="largest index computed exactly")
    ap.add_argument("--derby-cap", type=int)
    ap.add_argument("--factorization-cap", type=int)
    ap.add_argument("--cache", help=f"Bernoulli cache file or directory (else ${config.CACHE_ENV})")
    ap.add_argument("--output", "-o", help="write results here instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="evaluate one object exactly")
    c.add_argument("object", choices=("bernoulli", "stirling", "harmonic", "faulhaber", "derby",
                                      "qharmonic"))
    c.add_argument("args", nargs="+", type=int)
    c.add_argument("--twisted", action="store_true", help="qharmonic: q^j numerators")
    c.add_argument("--power", type=int, default=1, help="qharmonic: reduce mod [p]_q^power")

    v = sub.add_parser("verify", help="sweep a claim (or all) over a prime range")
    v.add_argument("claim", help="claim id or 'all'")
    v.add_argument("--primes", type=parse_range, default=(5, 100), metavar="A..B")
    v.add_argument("--power", type=int, choices=(1, 2, 3),
                   help="with 'all', keep only claims at this modulus power")
    v.add_argument("--format", choices=("json", "csv", "text"), default="text")
    v.add_argument("--parallelism", type=int, default=os.cpu_count() or 1)
    v.add_argument("--detail", action="store_true", help="include intermediate quantities")
    v.add_argument("--deterministic", action="store_true", help="zero the timing field")

    s = sub.add_parser("scan", help="enumerate special numbers up to a bound")
    s.add_argument("kind", choices=("carmichael", "giuga", "irregular", "wilson-prime",
                                    "wolstenholme-prime"))
    s.add_argument("--max", type=int, required=True, dest="limit")

    lf = sub.add_parser("lift", help="Hensel lifts of every root of X^{p-1} + (p-1)!")
    lf.add_argument("p", type=int)
    lf.add_argument("--precision", type=int, default=3)

    cl = sub.add_parser("claims", help="list registered claims")
    cl.add_argument("--power", type=int, choices=(1, 2, 3))
    return ap


def _compute(args) -> list[str]:
    from . import bernoulli, faulhaber, qanalog, stirling

    a = args.args
    need = {"bernoulli": 1, "stirling": 2, "harmonic": 2, "faulhaber": 1, "derby": 1,
            "qharmonic": 2}[args.object]
    if len(a) != need:
        raise ValueError(f"compute {args.object} takes {need} integer argument(s)")
    if args.object == "bernoulli":
        return [str(bernoulli.bernoulli_exact(a[0]))]
    if args.object == "stirling":
        return [str(stirling.stirling_first(a[0], a[1]))]
    if args.object == "harmonic":
        return [str(stirling.harmonic_exact(a[0], a[1]))]
    if args.object == "faulhaber":
        exp = faulhaber.faulhaber_expansion(a[0])
        return [f"c_{i}({a[0]}) = {c}" for i, c in enumerate(exp.coefficients, start=1)]
    if args.object == "derby":
        return [f"d_{i} = {d}" for i, d in enumerate(faulhaber.derby_coefficients(a[0]), start=1)]
    side = qanalog.q_harmonic_mod(a[0], a[1], args.twisted, args.power)
    return [f"{side} mod {side.label()}"]


def _scan(args) -> list[str]:
    from . import bernoulli, giuga, modops, stirling
    from .arith import primes_between

    if args.kind in ("carmichael", "giuga"):
        return [str(n) for n in giuga.scan(args.kind, args.limit)]
    if args.kind == "irregular":
        out = []
        for p in primes_between(5, args.limit):
            pairs = bernoulli.irregular_pairs(p)
            if pairs:
                out.append(f"{p} " + " ".join(str(x.index) for x in pairs))
        return out
    if args.kind == "wilson-prime":
        return [str(p) for p in primes_between(2, args.limit)
                if modops.factorial(p - 1, p * p) == p * p - 1]
    return [str(p) for p in primes_between(5, args.limit) if stirling.is_wolstenholme_prime(p)]


def _lift(args) -> list[str]:
    from . import wilson

    out = []
    for k in range(1, args.p):
        r = wilson.hensel_root(k, args.p, args.precision)
        out.append(f"{k} {r.value} digits={','.join(map(str, r.digits))}")
    return out


def _render(reports, fmt: str, detail: bool) -> str:
    if fmt == "json":
        return dumps([r.to_dict(detail) for r in reports]) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(REPORT_COLUMNS)
        for r in reports:
            d = r.to_dict()
            w.writerow([str(d[c]).lower() if c == "holds" else d[c] for c in REPORT_COLUMNS])
        return buf.getvalue()
    lines = []
    for r in reports:
        tag = "PASS" if r.holds else ("NOTE" if r.report_only else "FAIL")
        line = f"{tag} {r.claim} p={r.p} mod {r.modulus} lhs={r.lhs} rhs={r.rhs}"
        if r.detail and (detail or not r.holds):
            line += " " + " ".join(f"{k}={v}" for k, v in sorted(r.detail.items()))
        lines.append(line)
    return "\n".join(lines) + ("\n" if lines else "")


def _verify(args) -> tuple[str, int]:
    from . import verify

    if args.claim == "all":
        ids = verify.claim_ids(args.power)
    else:
        ids = [verify.get_claim(args.claim).id]
    lo, hi = args.primes
    reports = []
    for cid in ids:
        reports.extend(verify.sweep(cid, lo, hi, args.parallelism, args.deterministic))
    failed = any(not r.holds and not r.report_only for r in reports)
    return _render(reports, args.format, args.detail), int(failed)


def _claims(args) -> list[str]:
    from . import verify

    out = []
    for cid in verify.claim_ids(args.power):
        c = verify.get_claim(cid)
        tag = " (report-only)" if c.report_only else ""
        out.append(f"{cid}\t{c.power}\t{c.description}{tag}")
    return out


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    from .errors import CongruenceError

    try:
        config.set_caps(stirling=args.stirling_cap, bernoulli_exact=args.bernoulli_cap,
                        derby=args.derby_cap, factorization=args.factorization_cap)
        if args.cache:
            os.environ[config.CACHE_ENV] = args.cache
        code = 0
        if args.command == "verify":
            text, code = _verify(args)
        else:
            handler = {"compute": _compute, "scan": _scan, "lift": _lift, "claims": _claims}
            lines = handler[args.command](args)
            text = "\n".join(lines) + ("\n" if lines else "")
    except (CongruenceError, ValueError) as exc:
        print(f"congruence: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
