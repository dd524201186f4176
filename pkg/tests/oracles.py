"""Slow, obviously-correct reference computations used only by the tests.

Nothing here imports from congap, so a bug in the package cannot leak
into the expected values.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product


def trial_is_prime(m: int) -> bool:
    if m < 2:
        return False
    return all(m % d for d in range(2, math.isqrt(m) + 1))


def naive_sieve(bound: int) -> list[int]:
    if bound < 2:
        return []
    flags = [True] * (bound + 1)
    flags[0] = flags[1] = False
    for i in range(2, math.isqrt(bound) + 1):
        if flags[i]:
            for j in range(i * i, bound + 1, i):
                flags[j] = False
    return [i for i, f in enumerate(flags) if f]


def horner(coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def power_sum_eval(coeffs: list[int], x: int) -> int:
    return sum(c * x ** k for k, c in enumerate(coeffs))


def roots_mod(coeffs: list[int], p: int) -> list[int]:
    """All residues r in [0, p) with f(r) = 0 mod p."""
    return [r for r in range(p) if power_sum_eval(coeffs, r) % p == 0]


def splits_brute(coeffs: list[int], p: int) -> bool:
    """Monic f splits into distinct linear factors mod p iff it has deg f distinct roots."""
    return len(roots_mod(coeffs, p)) == len(coeffs) - 1


def sylvester_matrix(f: list[int], g: list[int]) -> list[list[int]]:
    """Sylvester matrix of f, g given in ascending coefficient order."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    fd, gd = f[::-1], g[::-1]
    rows = []
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return rows


def det(matrix: list[list[int]]) -> int:
    """Exact determinant by Gaussian elimination over Q."""
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        for r in range(col + 1, n):
            factor = a[r][col] / a[col][col]
            if factor:
                for c in range(col, n):
                    a[r][c] -= factor * a[col][c]
    out = Fraction(sign)
    for i in range(n):
        out *= a[i][i]
    assert out.denominator == 1
    return int(out)


def sylvester_resultant(f: list[int], g: list[int]) -> int:
    return det(sylvester_matrix(f, g))


def sylvester_discriminant(f: list[int]) -> int:
    d = len(f) - 1
    fp = [k * c for k, c in enumerate(f)][1:]
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * sylvester_resultant(f, fp)


def trinomial_disc(n: int, a: int, b: int) -> int:
    """disc(x^n + a x + b) by the classical closed form."""
    sign = (-1) ** (n * (n - 1) // 2)
    return sign * (n ** n * b ** (n - 1) + (-1) ** (n - 1) * (n - 1) ** (n - 1) * a ** n)


def squares_mod(p: int) -> set[int]:
    return {x * x % p for x in range(p)}


def legendre_brute(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if a in squares_mod(p) else -1


def units(n: int) -> list[int]:
    return [r for r in range(n) if math.gcd(r, n) == 1]


def closure_brute(n: int, gens) -> set[int]:
    group = {1 % n}
    frontier = set(group)
    while frontier:
        new = {a * g % n for a in frontier for g in gens} - group
        group |= new
        frontier = new
    return group


def is_irreducible_brute(coeffs: list[int], p: int) -> bool:
    """Monic f of degree d irreducible mod p iff no monic factor of degree 1..d//2 divides it."""
    d = len(coeffs) - 1
    f = [c % p for c in coeffs]
    for k in range(1, d // 2 + 1):
        for tail in product(range(p), repeat=k):
            divisor = list(tail) + [1]
            if _poly_rem(f, divisor, p) == []:
                return False
    return True


def _poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    r = list(a)
    inv = pow(b[-1], -1, p)
    while len(r) >= len(b):
        t = r[-1] * inv % p
        k = len(r) - len(b)
        for j, bc in enumerate(b):
            r[k + j] = (r[k + j] - t * bc) % p
        while r and r[-1] == 0:
            r.pop()
    return r
