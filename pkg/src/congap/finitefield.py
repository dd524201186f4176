"""Polynomials over F_p and the two splitting tests.

``splits_completely`` decides whether h is a product of distinct linear
factors mod p, which is the same as h dividing X^p - X.  ``has_root_mod``
decides whether gcd(X^p - X, g) is nontrivial.  Both hinge on computing
X^p mod h by square-and-multiply in F_p[X]/(h).

The scalar routines work with Python ints and accept any prime.  The
``*_many`` routines evaluate one polynomial against a whole array of
primes with numpy int64 arithmetic; they need every prime below 2^31 so
that products of two residues fit in 63 bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .polycore import IntPoly, format_poly
from .primes import is_prime

BATCH_PRIME_LIMIT = 1 << 31


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


@dataclass(frozen=True)
class ModPoly:
    """A polynomial over F_p, ascending coefficients in [0, p)."""

    p: int
    coeffs: tuple[int, ...]

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(_trim([c % p for c in coeffs])))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __sub__(self, other: ModPoly) -> ModPoly:
        _check_same(self, other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return ModPoly(self.p, [x - y for x, y in zip(a, b)])

    def __str__(self) -> str:
        return f"{format_poly(IntPoly(self.coeffs))} (mod {self.p})"


def _check_same(a: ModPoly, b: ModPoly):
    if a.p != b.p:
        raise ValueError(f"modulus mismatch: {a.p} vs {b.p}")


def _require_prime(q: int):
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")


def reduce_mod(poly: IntPoly, q: int) -> ModPoly:
    _require_prime(q)
    return ModPoly(q, poly.coeffs)


# --------------------------------------------------------------------------
# arithmetic on plain coefficient lists; h is monic

def _mulmod(a: Sequence[int], b: Sequence[int], h: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _rem_monic(prod, h, p)


def _rem_monic(c: list[int], h: Sequence[int], p: int) -> list[int]:
    d = len(h) - 1
    c = [x % p for x in c]
    for k in range(len(c) - 1, d - 1, -1):
        t = c[k]
        if t:
            base = k - d
            for j in range(d):
                c[base + j] = (c[base + j] - t * h[j]) % p
            c[k] = 0
    return _trim(c[:d] if len(c) > d else c)


def _divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    inv = pow(b[-1], -1, p)
    r = list(a)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    while len(r) - 1 >= db and r:
        t = r[-1] * inv % p
        k = len(r) - 1 - db
        q[k] = t
        for j, bc in enumerate(b):
            r[k + j] = (r[k + j] - t * bc) % p
        _trim(r)
    return _trim(q), r


def powmod_frobenius(h: ModPoly) -> ModPoly:
    """X^p mod (h, p)."""
    if h.degree < 1 or not h.is_monic():
        raise ValueError("powmod_frobenius needs a monic nonconstant modulus")
    p, hc = h.p, h.coeffs
    x = _rem_monic([0, 1], hc, p)
    result = [1]
    for bit in bin(p)[2:]:
        result = _mulmod(result, result, hc, p)
        if bit == "1":
            result = _mulmod(result, x, hc, p)
    return ModPoly(p, result)


def gcd_mod(a: ModPoly, b: ModPoly) -> ModPoly:
    """Monic gcd over F_p."""
    _check_same(a, b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    p = a.p
    u, v = list(a.coeffs), list(b.coeffs)
    while v:
        _, r = _divmod(u, v, p)
        u, v = v, r
    inv = pow(u[-1], -1, p)
    return ModPoly(p, [c * inv for c in u])


def _prepare(h: IntPoly, p: int) -> ModPoly:
    if h.degree < 1 or not h.is_monic():
        raise ValueError(f"expected a monic nonconstant polynomial, got {format_poly(h)}")
    _require_prime(p)
    return ModPoly(p, h.coeffs)


def _root_gcd(g: IntPoly, p: int) -> ModPoly:
    gp = _prepare(g, p)
    frob = powmod_frobenius(gp) - ModPoly(p, _rem_monic([0, 1], gp.coeffs, p))
    return gcd_mod(frob, gp)


def splits_completely(h: IntPoly, p: int) -> bool:
    """True iff h is a product of deg(h) distinct linear factors mod p."""
    hp = _prepare(h, p)
    x = _rem_monic([0, 1], hp.coeffs, p)
    return list(powmod_frobenius(hp).coeffs) == x


def has_root_mod(g: IntPoly, p: int) -> bool:
    return _root_gcd(g, p).degree >= 1


def count_distinct_roots_mod(g: IntPoly, p: int) -> int:
    return _root_gcd(g, p).degree


def is_squarefree_mod(g: IntPoly, p: int) -> bool:
    gp = _prepare(g, p)
    dg = ModPoly(p, [k * c for k, c in enumerate(gp.coeffs)][1:])
    if dg.is_zero():
        return False
    return gcd_mod(gp, dg).degree == 0


def is_irreducible_mod(g: IntPoly, p: int) -> bool:
    """Rabin's test: g mod p irreducible over F_p."""
    gp = _prepare(g, p)
    d = gp.degree
    if d == 1:
        return True
    hc = gp.coeffs
    x = [0, 1]
    # powers[i] = X^(p^i) mod g
    powers = [x]
    for _ in range(d):
        cur = [1]
        for bit in bin(p)[2:]:
            cur = _mulmod(cur, cur, hc, p)
            if bit == "1":
                cur = _mulmod(cur, powers[-1], hc, p)
        powers.append(cur)
    if ModPoly(p, powers[d]).coeffs != ModPoly(p, x).coeffs:
        return False
    for q in _prime_divisors(d):
        diff = ModPoly(p, powers[d // q]) - ModPoly(p, x)
        if gcd_mod(diff, gp).degree != 0:
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


# --------------------------------------------------------------------------
# batched evaluation across many primes

def _reduce_many(c: int, P: np.ndarray) -> np.ndarray:
    if abs(c) < 1 << 62:
        return np.mod(np.full_like(P, c), P)
    return np.array([c % q for q in P.tolist()], dtype=np.int64)


def _batch_rem(c: list[np.ndarray], h: list[np.ndarray], P: np.ndarray) -> list[np.ndarray]:
    d = len(h)
    for k in range(len(c) - 1, d - 1, -1):
        t = c[k]
        base = k - d
        for j in range(d):
            c[base + j] = (c[base + j] - t * h[j]) % P
    return c[:d]


def _batch_square(r: list[np.ndarray], h: list[np.ndarray], P: np.ndarray) -> list[np.ndarray]:
    d = len(r)
    out = [np.zeros_like(P) for _ in range(2 * d - 1)]
    for i in range(d):
        out[2 * i] = (out[2 * i] + r[i] * r[i] % P) % P
        for j in range(i + 1, d):
            out[i + j] = (out[i + j] + 2 * (r[i] * r[j] % P)) % P
    return _batch_rem(out, h, P)


def _batch_times_x(r: list[np.ndarray], h: list[np.ndarray], P: np.ndarray) -> list[np.ndarray]:
    return _batch_rem([np.zeros_like(P)] + r, h, P)


def frobenius_many(h: IntPoly, primes: np.ndarray) -> np.ndarray:
    """X^p mod (h, p) for each prime p; shape (len(primes), deg h).

    Column k holds the coefficient of X^k.  Needs deg h >= 1, h monic and
    every prime below 2^31.
    """
    if h.degree < 1 or not h.is_monic():
        raise ValueError("frobenius_many needs a monic nonconstant polynomial")
    P = np.asarray(primes, dtype=np.int64)
    if P.size and int(P.max()) >= BATCH_PRIME_LIMIT:
        raise ValueError("batched arithmetic needs primes below 2^31")
    d = h.degree
    if P.size == 0:
        return np.zeros((0, d), dtype=np.int64)
    hc = [_reduce_many(c, P) for c in h.coeffs[:d]]
    one = [np.ones_like(P) % P] + [np.zeros_like(P) for _ in range(d - 1)]
    result = one
    nbits = int(P.max()).bit_length()
    for bit in range(nbits - 1, -1, -1):
        result = _batch_square(result, hc, P)
        mask = ((P >> bit) & 1).astype(bool)
        if mask.any():
            shifted = _batch_times_x(result, hc, P)
            result = [np.where(mask, s, r) for s, r in zip(shifted, result)]
    return np.stack(result, axis=1)


def splits_completely_many(h: IntPoly, primes: np.ndarray) -> np.ndarray:
    """Boolean mask: ``splits_completely(h, p)`` for each p in ``primes``."""
    P = np.asarray(primes, dtype=np.int64)
    d = h.degree
    if d == 1:
        if not h.is_monic():
            raise ValueError("expected a monic polynomial")
        return np.ones(P.size, dtype=bool)
    frob = frobenius_many(h, P)
    target = np.zeros(d, dtype=np.int64)
    target[1] = 1
    return np.all(frob == target, axis=1)
