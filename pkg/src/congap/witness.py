"""Witness moduli for the split-prime set of a monic polynomial.

For a monic h with nonzero discriminant, P is the set of primes modulo
which h is a product of distinct linear factors.  A witness modulus n is
one where the classes of P generate a proper subgroup of (Z/nZ)^x; then
some class of every generating set contains no prime of P.

Only a finite slice of P (primes up to a bound B) can be computed, so a
proper subgroup found this way is evidence, reported with status
``candidate``.  When the discriminant is not a square, Q(sqrt(disc)) sits
inside the splitting field and the Kronecker character of its
discriminant gives an unconditional witness (``proved_quadratic``).
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .finitefield import BATCH_PRIME_LIMIT, splits_completely, splits_completely_many
from .polycore import IntPoly, discriminant, format_poly
from .primes import (SquareDiscriminantError, fundamental_discriminant, is_square,
                     kronecker, sieve_primes)
from .unitgroup import N_MAX, SubgroupReport, euler_phi, subgroup_closure

log = logging.getLogger(__name__)

MODES = ("divisors", "full_scan", "auto")
DEFAULT_MIN_SAMPLE = 10
CANDIDATE = "candidate"
PROVED_QUADRATIC = "proved_quadratic"


class DegenerateDiscriminantError(ValueError):
    """disc(h) = 0: h has a repeated root and P is empty."""


def _checked_disc(h: IntPoly) -> int:
    if h.degree < 1 or not h.is_monic():
        raise ValueError(f"expected a monic nonconstant polynomial, got {format_poly(h)}")
    disc = discriminant(h)
    if disc == 0:
        raise DegenerateDiscriminantError(
            f"{format_poly(h)} has a repeated root (discriminant 0); "
            "it never splits into distinct linear factors")
    return disc


# --------------------------------------------------------------------------
# split primes

def _split_mask_chunk(coeffs: tuple[int, ...], chunk: np.ndarray) -> np.ndarray:
    h = IntPoly(coeffs)
    if chunk.size and int(chunk.max()) >= BATCH_PRIME_LIMIT:
        return np.array([splits_completely(h, p) for p in chunk.tolist()], dtype=bool)
    return splits_completely_many(h, chunk)


def split_mask(h: IntPoly, primes: np.ndarray, workers: int = 1) -> np.ndarray:
    """``splits_completely(h, p)`` over an array of primes, in order.

    With ``workers > 1`` the array is cut into contiguous chunks that are
    evaluated in worker processes and concatenated in their original
    order, so the result does not depend on the worker count.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    primes = np.asarray(primes, dtype=np.int64)
    if workers == 1 or primes.size < 2 * workers:
        return _split_mask_chunk(h.coeffs, primes)
    chunks = np.array_split(primes, workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_split_mask_chunk, [h.coeffs] * len(chunks), chunks))
    return np.concatenate(parts)


@dataclass(frozen=True)
class SplitPrimeSet:
    h: IntPoly
    bound: int
    primes: tuple[int, ...]
    prime_count: int = 0  # pi(bound)

    def __iter__(self):
        return iter(self.primes)

    def __len__(self):
        return len(self.primes)

    def residues(self, n: int) -> list[int]:
        """p mod n for each p in the set coprime to n."""
        return [p % n for p in self.primes if math.gcd(p, n) == 1]


def split_primes(h: IntPoly, bound: int, workers: int = 1) -> SplitPrimeSet:
    _checked_disc(h)
    if bound < 2:
        raise ValueError("bound must be >= 2")
    primes = sieve_primes(bound).array
    mask = split_mask(h, primes, workers)
    return SplitPrimeSet(h, bound, tuple(primes[mask].tolist()), int(primes.size))


@dataclass(frozen=True)
class DensityEstimate:
    h: IntPoly
    bound: int
    split_count: int
    prime_count: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.split_count, self.prime_count)


def density_estimate(h: IntPoly, bound: int, workers: int = 1) -> DensityEstimate:
    sp = split_primes(h, bound, workers)
    return DensityEstimate(h, bound, len(sp), sp.prime_count)


# --------------------------------------------------------------------------
# candidate moduli

def _fundamental_or_none(disc: int) -> Optional[int]:
    try:
        return fundamental_discriminant(disc)
    except SquareDiscriminantError:
        return None


def candidate_moduli(disc: int, n_max: int, mode: str = "divisors") -> list[int]:
    """Moduli n in [3, n_max] worth testing for a discriminant ``disc``.

    ``divisors``: divisors of |disc|, plus |d| for the fundamental
    discriminant d of Q(sqrt(disc)) when that is a quadratic field.
    ``full_scan``: every n sharing a factor with disc.
    """
    if disc == 0:
        raise ValueError("discriminant must be nonzero")
    if mode not in ("divisors", "full_scan"):
        raise ValueError(f"unknown mode {mode!r}")
    a = abs(disc)
    if mode == "full_scan":
        out = [n for n in range(3, n_max + 1) if math.gcd(n, a) > 1]
    else:
        out = {n for n in range(3, min(n_max, a) + 1) if a % n == 0}
        d = _fundamental_or_none(disc)
        if d is not None and 3 <= abs(d) <= n_max:
            out.add(abs(d))
        out = sorted(out)
    if not out:
        log.info("no admissible modulus for discriminant %d with n_max=%d", disc, n_max)
    return out


# --------------------------------------------------------------------------
# witnesses

@dataclass(frozen=True)
class WitnessReport:
    n: int
    bound: Optional[int]
    subgroup_order: int
    phi: int
    uncovered_class: int
    status: str
    shared_factor: int
    subgroup: Optional[SubgroupReport] = field(default=None, repr=False, compare=False)

    @property
    def index(self) -> int:
        return self.phi // self.subgroup_order

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "bound": self.bound,
            "subgroup_order": self.subgroup_order,
            "phi": self.phi,
            "index": self.index,
            "uncovered_class": self.uncovered_class,
            "status": self.status,
            "shared_factor": self.shared_factor,
        }


@dataclass
class SearchResult:
    """Reports from a witness search plus what was skipped and why."""

    h: IntPoly
    disc: int
    bound: int
    n_max: int
    mode: str
    reports: list[WitnessReport] = field(default_factory=list)
    suppressed: list[tuple[int, int]] = field(default_factory=list)  # (n, sample size)
    candidates_tested: int = 0
    diagnostics: list[str] = field(default_factory=list)

    def __iter__(self):
        return iter(self.reports)

    def __len__(self):
        return len(self.reports)

    def moduli(self) -> list[int]:
        return [r.n for r in self.reports]


def _least_nonresidue_class(d: int) -> int:
    n = abs(d)
    return next(c for c in range(1, n) if kronecker(d, c) == -1)


def _test_modulus(n: int, primes: np.ndarray, disc: int, fund: Optional[int],
                  bound: int) -> tuple[Optional[WitnessReport], int]:
    res = primes % n
    res = res[np.gcd(res, n) == 1]
    sample = int(res.size)
    distinct = np.unique(res).tolist()
    sub = subgroup_closure(n, distinct)
    if not sub.is_proper:
        return None, sample
    uncovered, status = sub.uncovered_class, CANDIDATE
    if fund is not None and n == abs(fund) and all(kronecker(fund, r) == 1 for r in distinct):
        uncovered, status = _least_nonresidue_class(fund), PROVED_QUADRATIC
    report = WitnessReport(n, bound, sub.generated_order, sub.phi, uncovered, status,
                           math.gcd(n, disc), sub)
    return report, sample


def witness_search(h: IntPoly, bound: int, n_max: int, mode: str = "auto",
                   min_sample: int = DEFAULT_MIN_SAMPLE, workers: int = 1) -> SearchResult:
    """Moduli n <= n_max where the split primes up to ``bound`` miss a coset.

    A proper subgroup backed by fewer than ``min_sample`` primes coprime
    to n is moved to ``suppressed`` instead of being reported.  Mode
    ``auto`` tries divisors of the discriminant first and falls back to
    a full scan when that finds nothing.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    if n_max > N_MAX:
        raise ValueError(f"n_max exceeds the unit-group cap {N_MAX}")
    disc = _checked_disc(h)
    sp = split_primes(h, bound, workers)
    primes = np.asarray(sp.primes, dtype=np.int64)
    fund = _fundamental_or_none(disc)
    result = SearchResult(h, disc, bound, n_max, mode)
    if fund is None:
        result.diagnostics.append(
            f"discriminant {disc} is a perfect square: no quadratic subfield, "
            "no proved witness available")

    passes = ["divisors", "full_scan"] if mode == "auto" else [mode]
    for pass_mode in passes:
        moduli = candidate_moduli(disc, n_max, pass_mode)
        if not moduli:
            result.diagnostics.append(
                f"no admissible modulus in [3, {n_max}] shares a factor with disc {disc}"
                if pass_mode == "full_scan" or abs(disc) == 1 else
                f"no divisor of disc {disc} in [3, {n_max}]")
        for n in moduli:
            report, sample = _test_modulus(n, primes, disc, fund, bound)
            result.candidates_tested += 1
            if report is None:
                continue
            if sample < min_sample:
                result.suppressed.append((n, sample))
                continue
            result.reports.append(report)
        if result.reports:
            break
        if mode == "auto" and pass_mode == "divisors":
            result.diagnostics.append("divisor candidates gave no witness; ran full scan")
    if result.suppressed:
        result.diagnostics.append(
            f"suppressed {len(result.suppressed)} moduli with fewer than {min_sample} "
            f"sample primes: {[n for n, _ in result.suppressed]}")
    result.reports.sort(key=lambda r: r.n)
    return result


def quadratic_witness(h: IntPoly, n_max: int = N_MAX) -> WitnessReport:
    """Proved witness n = |d|, d the discriminant of Q(sqrt(disc h)).

    Every split prime p not dividing disc(h) has kronecker(d, p) = 1, so
    each class c with kronecker(d, c) = -1 avoids P.  The least such c is
    reported.  The subgroup is the kernel of the character; its
    membership table is only built when |d| <= ``n_max``.
    """
    disc = _checked_disc(h)
    if is_square(disc):
        raise SquareDiscriminantError(
            f"discriminant {disc} of {format_poly(h)} is a perfect square; "
            "no quadratic subfield to witness with")
    d = fundamental_discriminant(disc)
    n = abs(d)
    phi = euler_phi(n)
    c = _least_nonresidue_class(d)
    sub = None
    if n <= n_max:
        # units with character value 0 do not exist, so -1 marks the complement
        member = bytes(1 if kronecker(d, r) == 1 else 0 for r in range(n))
        sub = SubgroupReport(n, phi, phi // 2, 2, member, c)
    return WitnessReport(n, None, phi // 2, phi, c, PROVED_QUADRATIC, math.gcd(n, disc), sub)

