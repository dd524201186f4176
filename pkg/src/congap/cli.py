"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 inconclusive (no
certificate, no witness), 3 certificate verification failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from collections import Counter
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .certifier import (Certificate, MalformedCertificate, ReducibleInputError,
                        certify_cyclotomic, verify_certificate)
from .polycore import IntPoly, PolySyntaxError, discriminant, format_poly, parse_poly
from .primes import factorint, is_square
from .witness import (DEFAULT_MIN_SAMPLE, MODES, DegenerateDiscriminantError,
                      density_estimate, split_primes, witness_search)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCONCLUSIVE = 2
EXIT_INVALID = 3

WITNESS_FIELDS = ["n", "bound", "subgroup_order", "phi", "index",
                  "uncovered_class", "status", "shared_factor"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_workers() -> int:
    raw = os.environ.get("CONGAP_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="congap",
                     description="Split primes, witness moduli and cyclotomic "
                                 "irreducibility certificates for integer polynomials.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--workers", type=int, default=_default_workers(),
                        help="worker processes (default: $CONGAP_WORKERS or 1)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("disc", parents=[common], help="discriminant and its factorization")
    p.add_argument("poly")

    p = sub.add_parser("split-primes", parents=[common],
                       help="primes <= bound where the polynomial splits completely")
    p.add_argument("poly")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--modulus", "-n", type=int, help="tabulate classes mod n")

    p = sub.add_parser("witness", parents=[common], help="search for witness moduli")
    p.add_argument("poly")
    p.add_argument("--bound", type=int, default=10 ** 5)
    p.add_argument("--nmax", type=int, default=100)
    p.add_argument("--mode", choices=MODES, default="auto")
    p.add_argument("--min-sample", type=int, default=DEFAULT_MIN_SAMPLE)

    p = sub.add_parser("certify", parents=[common],
                       help="certify Phi_n irreducible over Q(alpha), g(alpha) = 0")
    p.add_argument("poly")
    p.add_argument("n", type=int)
    p.add_argument("--prime-bound", type=int, default=10 ** 4)
    p.add_argument("--assume-irreducible", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="re-check a certificate file")
    p.add_argument("certificate")

    p = sub.add_parser("density", parents=[common], help="empirical density of split primes")
    p.add_argument("poly")
    p.add_argument("--bound", type=int, default=10 ** 5)
    p.add_argument("--expected-order", type=int,
                   help="order of the Galois group, to compare with 1/order")
    return parser


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _poly(text: str) -> IntPoly:
    p = parse_poly(text)
    if p.degree < 1 or not p.is_monic():
        raise UsageError(f"{format_poly(p)} is not monic of positive degree")
    return p


def _check_workers(args):
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")


# --------------------------------------------------------------------------
# commands; each returns (exit code, stdout text)

def _render_factorization(value: int) -> str:
    if value == 0:
        return "0"
    factors, cof = factorint(value)
    parts = ["-1"] if value < 0 else []
    parts += [f"{p}^{e}" if e > 1 else str(p) for p, e in factors.items()]
    if cof != 1:
        parts.append(f"[{cof} unfactored]")
    return " * ".join(parts) if parts else "1"


def cmd_disc(args) -> tuple[int, str]:
    h = _poly(args.poly)
    disc = discriminant(h)
    square = is_square(disc)
    factors, cof = factorint(disc) if disc else ({}, 1)
    if args.format == "json":
        out = _dump_json({
            "poly": format_poly(h),
            "disc": str(disc),
            "factors": [[str(p), e] for p, e in factors.items()],
            "unfactored": str(cof) if cof != 1 else None,
            "perfect_square": square,
        })
    elif args.format == "csv":
        rows = ([["-1", 1]] if disc < 0 else []) + [[p, e] for p, e in factors.items()]
        if cof != 1:
            rows.append([cof, "unfactored"])
        out = _csv(["prime", "exponent"], rows)
    else:
        out = f"disc({format_poly(h)}) = {disc} = {_render_factorization(disc)}\n"
        if square:
            out += "discriminant is a perfect square\n"
        if disc == 0:
            out += "discriminant is zero: repeated root\n"
    return EXIT_OK, out


def cmd_split_primes(args) -> tuple[int, str]:
    _check_workers(args)
    h = _poly(args.poly)
    n = args.modulus
    if n is not None and n < 1:
        raise UsageError("--modulus must be >= 1")
    sp = split_primes(h, args.bound, args.workers)
    hist = None
    if n is not None:
        counts = Counter(p % n for p in sp.primes)
        units = [r for r in range(n) if _gcd(r, n) == 1]
        hist = {r: counts.get(r, 0) for r in units}
        extra = {r: c for r, c in counts.items() if r not in hist}
        hist.update(extra)
    if args.format == "json":
        obj = {"poly": format_poly(h), "bound": args.bound, "count": len(sp),
               "prime_count": sp.prime_count, "primes": list(sp.primes)}
        if hist is not None:
            obj["modulus"] = n
            obj["classes"] = [{"class": r, "count": c} for r, c in sorted(hist.items())]
        return EXIT_OK, _dump_json(obj)
    if args.format == "csv":
        if n is None:
            return EXIT_OK, _csv(["prime"], [[p] for p in sp.primes])
        return EXIT_OK, _csv(["prime", f"class_mod_{n}"], [[p, p % n] for p in sp.primes])
    lines = [f"{len(sp)} of {sp.prime_count} primes <= {args.bound} split completely "
             f"for {format_poly(h)}", " ".join(map(str, sp.primes))]
    if hist is not None:
        lines += [f"class {r}: {c} primes" for r, c in sorted(hist.items())]
    return EXIT_OK, "\n".join(lines) + "\n"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def cmd_witness(args) -> tuple[int, str]:
    _check_workers(args)
    h = _poly(args.poly)
    if args.nmax < 3:
        raise UsageError("--nmax must be >= 3")
    res = witness_search(h, args.bound, args.nmax, args.mode, args.min_sample, args.workers)
    code = EXIT_OK if res.reports else EXIT_INCONCLUSIVE
    if args.format == "json":
        return code, _dump_json({
            "poly": format_poly(h),
            "disc": str(res.disc),
            "bound": res.bound,
            "n_max": res.n_max,
            "mode": res.mode,
            "reports": [r.to_dict() for r in res.reports],
            "suppressed": [{"n": n, "sample": s} for n, s in res.suppressed],
            "diagnostics": res.diagnostics,
        })
    if args.format == "csv":
        rows = [[r.to_dict()[k] for k in WITNESS_FIELDS] for r in res.reports]
        return code, _csv(WITNESS_FIELDS, rows)
    lines = [f"witness search for {format_poly(h)}  disc={res.disc}  B={res.bound}  "
             f"n_max={res.n_max}  mode={res.mode}"]
    if res.reports:
        lines.append(f"{'n':>8} {'index':>6} {'uncovered':>10} {'shared':>8}  status")
        for r in res.reports:
            lines.append(f"{r.n:>8} {r.index:>6} {r.uncovered_class:>10} "
                         f"{r.shared_factor:>8}  {r.status}")
    else:
        lines.append("no witnesses found")
    lines += [f"note: {d}" for d in res.diagnostics]
    return code, "\n".join(lines) + "\n"


def cmd_certify(args) -> tuple[int, str]:
    g = _poly(args.poly)
    result = certify_cyclotomic(g, args.n, args.prime_bound, args.assume_irreducible)
    ok = isinstance(result, Certificate)
    code = EXIT_OK if ok else EXIT_INCONCLUSIVE
    if args.format == "json":
        body = result.to_dict()
        if not ok:
            body = {"no_certificate": body}
        return code, _dump_json(body)
    if args.format == "csv":
        if ok:
            return code, _csv(["class", "prime"], result.assignments)
        return code, _csv(["class", "primes_tried", "last_prime"],
                          [[s.cls, s.primes_tried, s.last_prime] for s in result.exhausted])
    if ok:
        lines = [f"Phi_{args.n} is irreducible over Q(alpha), alpha a root of {format_poly(g)}"]
        lines += [f"  class {a} mod {args.n}: prime {p}" for a, p in result.assignments]
    else:
        lines = [f"no certificate for Phi_{args.n} over Q(alpha), alpha a root of "
                 f"{format_poly(g)} (inconclusive)"]
        lines += [f"  class {s.cls} mod {args.n}: {s.primes_tried} primes tried up to "
                  f"{s.last_prime}, none with a root" for s in result.exhausted]
        lines += [f"  hint: {h}" for h in result.hints]
    return code, "\n".join(lines) + "\n"


def cmd_verify(args) -> tuple[int, str]:
    try:
        with open(args.certificate, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read certificate: {exc}") from exc
    try:
        problems = verify_certificate(data)
    except (MalformedCertificate, PolySyntaxError) as exc:
        problems = [f"malformed certificate: {exc}"]
    code = EXIT_OK if not problems else EXIT_INVALID
    if args.format == "json":
        return code, _dump_json({"valid": not problems, "problems": problems})
    if args.format == "csv":
        return code, _csv(["problem"], [[p] for p in problems])
    if not problems:
        return code, "certificate valid\n"
    return code, "certificate INVALID\n" + "".join(f"  {p}\n" for p in problems)


def cmd_density(args) -> tuple[int, str]:
    _check_workers(args)
    h = _poly(args.poly)
    est = density_estimate(h, args.bound, args.workers)
    ratio = est.ratio
    expected = Fraction(1, args.expected_order) if args.expected_order else None
    if args.format == "json":
        obj = {"poly": format_poly(h), "bound": est.bound, "split_count": est.split_count,
               "prime_count": est.prime_count,
               "ratio": f"{est.split_count}/{est.prime_count}",
               "ratio_float": round(float(ratio), 12)}
        if expected is not None:
            obj["expected"] = str(expected)
            obj["relative_error"] = round(float((ratio - expected) / expected), 12)
        return EXIT_OK, _dump_json(obj)
    if args.format == "csv":
        header = ["poly", "bound", "split_count", "prime_count", "ratio"]
        row = [format_poly(h), est.bound, est.split_count, est.prime_count, f"{float(ratio):.6f}"]
        if expected is not None:
            header.append("expected")
            row.append(f"{float(expected):.6f}")
        return EXIT_OK, _csv(header, [row])
    out = (f"{format_poly(h)}: {est.split_count}/{est.prime_count} = {float(ratio):.6f} "
           f"(primes <= {est.bound})\n")
    if expected is not None:
        rel = float((ratio - expected) / expected)
        out += f"expected 1/{args.expected_order} = {float(expected):.6f}, relative error {rel:+.3%}\n"
    return EXIT_OK, out


COMMANDS = {
    "disc": cmd_disc,
    "split-primes": cmd_split_primes,
    "witness": cmd_witness,
    "certify": cmd_certify,
    "verify": cmd_verify,
    "density": cmd_density,
}


def run(argv: Optional[Sequence[str]] = None) -> tuple[int, str, str]:
    """Run the CLI and return (exit code, stdout, stderr) without printing."""
    parser = build_parser()
    err = io.StringIO()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    try:
        code, out = COMMANDS[args.command](args)
    except (UsageError, PolySyntaxError, DegenerateDiscriminantError,
            ReducibleInputError, ValueError, MemoryError) as exc:
        err.write(f"congap {args.command}: {exc}\n")
        return EXIT_USAGE, "", err.getvalue()
    return code, out, err.getvalue()


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
