"""Prime generation, primality, factoring, and the Kronecker symbol."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

SEGMENT_SIZE = 1 << 20
MAX_SIEVE_BOUND = 1 << 32

# Deterministic for every n < 3.3e24 (covers all 64-bit integers).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3317044064679887385961981


class SquareDiscriminantError(ValueError):
    """A perfect square has no associated quadratic field."""


@dataclass(frozen=True)
class PrimeRange:
    """The primes up to ``bound`` in ascending order."""

    bound: int
    array: np.ndarray = field(repr=False, compare=False)

    def __iter__(self) -> Iterator[int]:
        return iter(self.array.tolist())

    def __len__(self) -> int:
        return int(self.array.size)

    def __getitem__(self, i):
        return self.array.tolist()[i] if isinstance(i, slice) else int(self.array[i])

    def tolist(self) -> list[int]:
        return self.array.tolist()


def _small_sieve(n: int) -> np.ndarray:
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(n + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if flags[p]:
            flags[p * p:: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def sieve_primes(bound: int, segment_size: int = SEGMENT_SIZE,
                 max_bound: int = MAX_SIEVE_BOUND) -> PrimeRange:
    """Segmented odd-only sieve of Eratosthenes for the primes <= bound."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if bound > max_bound:
        raise MemoryError(f"sieve bound {bound} exceeds the configured budget {max_bound}")
    if bound < 2:
        return PrimeRange(bound, np.zeros(0, dtype=np.int64))

    base = _small_sieve(math.isqrt(bound))[1:]  # odd base primes
    chunks = [np.array([2], dtype=np.int64)]
    # slot i of a segment starting at odd number lo stands for lo + 2*i
    lo = 3
    while lo <= bound:
        count = min(segment_size, (bound - lo) // 2 + 1)
        seg = np.ones(count, dtype=bool)
        last = lo + 2 * (count - 1)
        for p in base.tolist():
            sq = p * p
            if sq > last:
                break
            start = max(sq, (lo + p - 1) // p * p)
            if start % 2 == 0:
                start += p
            seg[(start - lo) // 2:: p] = False
        chunks.append(lo + 2 * np.flatnonzero(seg).astype(np.int64))
        lo = last + 2
    return PrimeRange(bound, np.concatenate(chunks))


def prime_pi(bound: int) -> int:
    return len(sieve_primes(bound))


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin; exact for every m below 3.3e24."""
    if m < 2:
        return False
    for p in _MR_BASES:
        if m % p == 0:
            return m == p
    if m >= _MR_LIMIT:
        raise ValueError(f"{m} is beyond the deterministic Miller-Rabin range")
    d, r = m - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def next_prime_in_class(a: int, n: int, start: int, bound: int) -> Optional[int]:
    """Smallest prime p with start <= p <= bound and p = a (mod n), or None."""
    if n < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(a, n) != 1:
        raise ValueError(f"class {a} is not coprime to {n}")
    a %= n
    p = start + (a - start) % n
    while p <= bound:
        if is_prime(p):
            return p
        p += n
    return None


def primes_in_class(a: int, n: int, bound: int, start: int = 2) -> Iterator[int]:
    p = next_prime_in_class(a, n, start, bound)
    while p is not None:
        yield p
        p = next_prime_in_class(a, n, p + 1, bound)


# --------------------------------------------------------------------------
# factoring

def _pollard_brent(n: int, max_steps: Optional[int] = None) -> int:
    """A nontrivial factor of the odd composite n.

    With ``max_steps`` set, gives up (ArithmeticError) once the cycle
    length passes the budget; needed when n might be prime.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 200):
        y, r, q, g = 2, 1, 1, 1
        f = lambda v: (v * v + c) % n  # noqa: E731
        x = ys = y
        while g == 1:
            if max_steps is not None and r > max_steps:
                raise ArithmeticError(f"Pollard rho budget exhausted on {n}")
            x = y
            for _ in range(r):
                y = f(y)
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = f(y)
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = f(ys)
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard rho failed on {n}")


def factorint(n: int, trial_limit: int = 10_000) -> tuple[dict[int, int], int]:
    """Factor |n| into primes.

    Returns ``(factors, cofactor)``.  The cofactor is 1 when the
    factorization is complete; otherwise it is the part that lies beyond
    the deterministic primality range and could not be split.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor zero")
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d, step = 7, 0
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    while d <= trial_limit and d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += steps[step]
        step = (step + 1) % 8
    if n == 1:
        return factors, 1
    if d * d > n:
        factors[n] = factors.get(n, 0) + 1
        return factors, 1

    cofactor = 1
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        if m < _MR_LIMIT:
            if is_prime(m):
                factors[m] = factors.get(m, 0) + 1
                continue
            f = _pollard_brent(m)
            stack += [f, m // f]
        else:
            try:
                f = _pollard_brent(m, max_steps=1 << 20)
            except ArithmeticError:
                cofactor *= m
                continue
            stack += [f, m // f]
    return dict(sorted(factors.items())), cofactor


def divisors(n: int) -> list[int]:
    factors, cof = factorint(n)
    if cof != 1:
        raise ValueError(f"incomplete factorization of {n}")
    divs = [1]
    for p, e in factors.items():
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


# --------------------------------------------------------------------------
# quadratic characters

def kronecker(d: int, m: int) -> int:
    """The Kronecker symbol (d/m) for arbitrary integers d, m."""
    if m == 0:
        return 1 if d in (1, -1) else 0
    result = 1
    if m < 0:
        m = -m
        if d < 0:
            result = -1
    v = 0
    while m % 2 == 0:
        m //= 2
        v += 1
    if v:
        if d % 2 == 0:
            return 0
        if v % 2 and d % 8 in (3, 5):
            result = -result
    # Jacobi symbol (d/m), m odd positive
    a = d % m
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


def squarefree_part(n: int) -> int:
    """The squarefree m (same sign as n) with n = f^2 * m."""
    if n == 0:
        raise ValueError("zero has no squarefree part")
    factors, cof = factorint(n)
    if cof != 1 and not is_square(cof):
        raise ValueError(f"cannot determine the squarefree part of {n}: "
                         f"unfactored cofactor {cof}")
    m = 1
    for p, e in factors.items():
        if e % 2:
            m *= p
    return m if n > 0 else -m


def fundamental_discriminant(D: int) -> int:
    """Discriminant of the quadratic field Q(sqrt(D))."""
    if D == 0:
        raise ValueError("D must be nonzero")
    if is_square(D):
        raise SquareDiscriminantError(f"{D} is a perfect square; Q(sqrt({D})) is not a quadratic field")
    m = squarefree_part(D)
    return m if m % 4 == 1 else 4 * m
