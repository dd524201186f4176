"""Certificates that a cyclotomic polynomial stays irreducible over Q(alpha).

If every class in a generating set of (Z/nZ)^x contains a prime p with
g(X) mod p having a root (p not dividing n * disc(g)), then Phi_n is
irreducible over the field generated by a root of g.  The certifier looks
for such a prime in each canonical generator class; failing to find one
proves nothing.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional

from .finitefield import has_root_mod, is_irreducible_mod
from .polycore import IntPoly, discriminant, eval_at, format_poly, parse_poly
from .primes import divisors, is_prime, primes_in_class, sieve_primes
from .unitgroup import subgroup_closure, unit_group

HEURISTIC_PRIME_LIMIT = 100


class Irreducibility(enum.Enum):
    DEFINITELY_IRREDUCIBLE = "definitely_irreducible"
    DEFINITELY_REDUCIBLE = "definitely_reducible"
    UNKNOWN = "unknown"


class ReducibleInputError(ValueError):
    pass


def check_irreducible_heuristic(g: IntPoly) -> Irreducibility:
    """Cheap irreducibility verdict for a monic g.

    Reducible when there is a rational root or a repeated factor;
    irreducible when g stays irreducible modulo some small prime that
    does not divide disc(g); otherwise unknown.
    """
    if g.degree < 1 or not g.is_monic():
        raise ValueError(f"expected a monic nonconstant polynomial, got {format_poly(g)}")
    if g.degree == 1:
        return Irreducibility.DEFINITELY_IRREDUCIBLE
    c0 = g.coeffs[0]
    if c0 == 0:
        return Irreducibility.DEFINITELY_REDUCIBLE
    for r in divisors(c0):
        if eval_at(g, r) == 0 or eval_at(g, -r) == 0:
            return Irreducibility.DEFINITELY_REDUCIBLE
    disc = discriminant(g)
    if disc == 0:
        return Irreducibility.DEFINITELY_REDUCIBLE
    for p in sieve_primes(HEURISTIC_PRIME_LIMIT):
        if disc % p and is_irreducible_mod(g, p):
            return Irreducibility.DEFINITELY_IRREDUCIBLE
    return Irreducibility.UNKNOWN


def semi_split_primes(g: IntPoly, bound: int) -> list[int]:
    """Primes p <= bound, p not dividing disc(g), with a root of g mod p."""
    if g.degree < 1 or not g.is_monic():
        raise ValueError(f"expected a monic nonconstant polynomial, got {format_poly(g)}")
    disc = discriminant(g)
    if disc == 0:
        raise ValueError(f"{format_poly(g)} has discriminant 0")
    return [p for p in sieve_primes(bound) if disc % p and has_root_mod(g, p)]


@dataclass(frozen=True)
class Certificate:
    g: IntPoly
    n: int
    disc_g: int
    assignments: tuple[tuple[int, int], ...]  # (generator class, prime)
    prime_bound: int

    def to_dict(self) -> dict:
        return {
            "g": format_poly(self.g),
            "n": self.n,
            "disc_g": str(self.disc_g),
            "assignments": [{"class": a, "prime": p} for a, p in self.assignments],
            "prime_bound": self.prime_bound,
        }


@dataclass(frozen=True)
class ClassScan:
    cls: int
    primes_tried: int
    last_prime: Optional[int]


@dataclass(frozen=True)
class NoCertificate:
    """Search ran out of primes for some classes; says nothing about Phi_n."""

    g: IntPoly
    n: int
    prime_bound: int
    found: tuple[tuple[int, int], ...]
    exhausted: tuple[ClassScan, ...]
    hints: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "g": format_poly(self.g),
            "n": self.n,
            "prime_bound": self.prime_bound,
            "found": [{"class": a, "prime": p} for a, p in self.found],
            "exhausted": [{"class": s.cls, "primes_tried": s.primes_tried,
                           "last_prime": s.last_prime} for s in self.exhausted],
            "hints": list(self.hints),
        }


def _scan_class(g: IntPoly, a: int, n: int, bad: int, bound: int):
    tried, last = 0, None
    for p in primes_in_class(a, n, bound):
        tried += 1
        last = p
        if bad % p and has_root_mod(g, p):
            return p, ClassScan(a, tried, last)
    return None, ClassScan(a, tried, last)


def _coset_hints(g: IntPoly, n: int, bad: int, bound: int,
                 found: list[tuple[int, int]], exhausted: list[ClassScan]) -> list[str]:
    # b = a*h with h in <found classes> can replace a in the generating set
    hints = [f"raise prime_bound above {bound}, or note that Phi_{n} may be "
             "reducible over this field; the criterion is only sufficient"]
    helper = subgroup_closure(n, [a for a, _ in found])
    for scan in exhausted:
        coset = sorted({scan.cls * h % n for h in helper.elements()} - {scan.cls})
        for b in coset:
            p, _ = _scan_class(g, b, n, bad, bound)
            if p is not None:
                hints.append(f"class {scan.cls} could be replaced by class {b} "
                             f"(same coset of the found classes), which has prime {p}")
                break
    return hints


def certify_cyclotomic(g: IntPoly, n: int, prime_bound: int,
                       assume_irreducible: bool = False) -> Certificate | NoCertificate:
    if g.degree < 1 or not g.is_monic():
        raise ValueError(f"expected a monic nonconstant polynomial, got {format_poly(g)}")
    if n < 3:
        raise ValueError("n must be >= 3")
    verdict = check_irreducible_heuristic(g)
    if verdict is Irreducibility.DEFINITELY_REDUCIBLE:
        raise ReducibleInputError(f"{format_poly(g)} is reducible; it does not define a field")
    if verdict is Irreducibility.UNKNOWN and not assume_irreducible:
        raise ReducibleInputError(
            f"could not confirm that {format_poly(g)} is irreducible; "
            "pass assume_irreducible=True to proceed")
    disc = discriminant(g)
    bad = n * disc
    found, exhausted = [], []
    for a in unit_group(n).classes:
        p, scan = _scan_class(g, a, n, bad, prime_bound)
        if p is None:
            exhausted.append(scan)
        else:
            found.append((a, p))
    if exhausted:
        hints = _coset_hints(g, n, bad, prime_bound, found, exhausted)
        return NoCertificate(g, n, prime_bound, tuple(found), tuple(exhausted), tuple(hints))
    return Certificate(g, n, disc, tuple(found), prime_bound)


# --------------------------------------------------------------------------
# independent verification

_CERT_KEYS = {"g", "n", "disc_g", "assignments", "prime_bound"}
_BRUTE_ROOT_LIMIT = 2000


class MalformedCertificate(ValueError):
    pass


def _has_root_brute(g: IntPoly, p: int) -> bool:
    if p > _BRUTE_ROOT_LIMIT:
        return has_root_mod(g, p)
    return any(eval_at(g, x) % p == 0 for x in range(p))


def _is_prime_trial(m: int) -> bool:
    if m < 2:
        return False
    return all(m % d for d in range(2, math.isqrt(m) + 1))


def _prime(m: int) -> bool:
    return _is_prime_trial(m) if m < 10 ** 8 else is_prime(m)


def _check_assignment(g: IntPoly, n: int, disc: int, bound: int, a: int, p: int) -> list[str]:
    where = f"class {a} -> prime {p}"
    if math.gcd(a, n) != 1:
        return [f"{where}: class not a unit mod {n}"]
    if not _prime(p):
        return [f"{where}: {p} is not prime"]
    out = []
    if p % n != a % n:
        out.append(f"{where}: {p} = {p % n} (mod {n}), not {a % n}")
    if p > bound:
        out.append(f"{where}: prime exceeds prime_bound {bound}")
    if (n * disc) % p == 0:
        out.append(f"{where}: {p} divides n*disc(g)")
    if not _has_root_brute(g, p):
        out.append(f"{where}: g has no root mod {p}")
    if not out:
        for q in range(a % n, p, n):
            if _prime(q) and (n * disc) % q and _has_root_brute(g, q):
                out.append(f"{where}: smaller qualifying prime {q} exists")
                break
    return out


def _parse_certificate(data: dict):
    if not isinstance(data, dict):
        raise MalformedCertificate("certificate must be a JSON object")
    keys = set(data)
    if keys != _CERT_KEYS:
        raise MalformedCertificate(f"expected keys {sorted(_CERT_KEYS)}, got {sorted(keys)}")
    try:
        g = parse_poly(data["g"])
        n = data["n"]
        disc_g = int(data["disc_g"])
        bound = data["prime_bound"]
        assignments = [(a["class"], a["prime"]) for a in data["assignments"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedCertificate(str(exc)) from exc
    ints = [n, bound] + [v for pair in assignments for v in pair]
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in ints):
        raise MalformedCertificate("n, prime_bound, classes and primes must be integers")
    return g, n, disc_g, assignments, bound


def verify_certificate(data: dict) -> list[str]:
    """Re-check a serialized certificate from scratch.

    Returns the list of problems found; an empty list means the
    certificate proves Phi_n irreducible over Q(alpha).  Besides
    soundness, each prime must be the least qualifying prime of its
    class, which makes certificates canonical.
    """
    g, n, disc_g, assignments, bound = _parse_certificate(data)
    problems = []
    if n < 3:
        problems.append(f"n = {n} < 3")
        return problems
    if g.degree < 1 or not g.is_monic():
        problems.append(f"g = {format_poly(g)} is not monic of positive degree")
        return problems
    disc = discriminant(g)
    if disc != disc_g:
        problems.append(f"disc_g = {disc_g} but disc({format_poly(g)}) = {disc}")
    if disc == 0:
        problems.append("g has a repeated root")
        return problems
    if check_irreducible_heuristic(g) is Irreducibility.DEFINITELY_REDUCIBLE:
        problems.append(f"{format_poly(g)} is reducible")

    classes = [a for a, _ in assignments]
    for a, p in assignments:
        problems += _check_assignment(g, n, disc, bound, a, p)
    if all(math.gcd(a, n) == 1 for a in classes):
        closure = subgroup_closure(n, classes)
        if closure.is_proper:
            problems.append(f"classes {classes} generate only a subgroup of order "
                            f"{closure.generated_order} of (Z/{n})^x (order {closure.phi})")
    return problems
