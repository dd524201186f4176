"""Structure of the unit group (Z/nZ)^x and subgroup closure."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .primes import factorint

N_MAX = 10 ** 6
ORACLE_N_MAX = 30


def _check_modulus(n: int, n_max: int):
    if n < 1:
        raise ValueError("modulus must be >= 1")
    if n > n_max:
        raise ValueError(f"modulus {n} exceeds the cap n_max={n_max}")


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("phi needs n >= 1")
    phi = n
    for p in factorint(n)[0]:
        phi -= phi // p
    return phi


def multiplicative_order(a: int, n: int) -> int:
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    phi = euler_phi(n)
    order = phi
    for q in factorint(phi)[0] if phi > 1 else {}:
        while order % q == 0 and pow(a, order // q, n) == 1 % n:
            order //= q
    return order


def _smallest_primitive_root(q: int, k: int) -> int:
    """Smallest generator of (Z/q^k)^x for an odd prime q."""
    m = q ** k
    phi = m - m // q
    qs = list(factorint(phi)[0])
    for g in range(2, m):
        if g % q and all(pow(g, phi // r, m) != 1 for r in qs):
            return g
    raise ArithmeticError(f"no primitive root mod {m}")


def _crt_lift(residue: int, mod: int, n: int) -> int:
    """x = residue (mod ``mod``), x = 1 (mod n/mod)."""
    other = n // mod
    if other == 1:
        return residue % n
    # x = 1 + other * t, with 1 + other*t = residue (mod mod)
    t = (residue - 1) * pow(other, -1, mod) % mod
    return (1 + other * t) % n


@dataclass(frozen=True)
class UnitGroup:
    n: int
    phi: int
    generators: tuple[tuple[int, int], ...]  # (residue class, element order)

    @property
    def classes(self) -> list[int]:
        return [g for g, _ in self.generators]


def unit_group(n: int, n_max: int = N_MAX) -> UnitGroup:
    """Canonical generators of (Z/nZ)^x via the CRT decomposition of n.

    Odd prime powers contribute their smallest primitive root, 4
    contributes 3, and 2^k with k >= 3 contributes -1 and 5.
    """
    _check_modulus(n, n_max)
    gens: list[tuple[int, int]] = []
    factors = factorint(n)[0] if n > 1 else {}
    for q, k in factors.items():
        m = q ** k
        if q == 2:
            if k == 2:
                local = [(3, 2)]
            elif k >= 3:
                local = [(m - 1, 2), (5, 2 ** (k - 2))]
            else:
                local = []
        else:
            local = [(_smallest_primitive_root(q, k), m - m // q)]
        gens += [(_crt_lift(r, m, n), order) for r, order in local]
    group = UnitGroup(n, euler_phi(n), tuple(gens))
    closure = subgroup_closure(n, group.classes, n_max=n_max)
    if closure.generated_order != group.phi:
        raise AssertionError(f"canonical generators of (Z/{n})^x do not generate")
    return group


@dataclass(frozen=True)
class SubgroupReport:
    n: int
    phi: int
    generated_order: int
    index: int
    membership: bytes  # membership[r] == 1 iff r lies in the subgroup
    uncovered_class: Optional[int]

    def __contains__(self, r: int) -> bool:
        return bool(self.membership[r % self.n])

    def elements(self) -> list[int]:
        return [r for r, flag in enumerate(self.membership) if flag]

    @property
    def is_proper(self) -> bool:
        return self.index > 1


def subgroup_closure(n: int, S: Iterable[int], n_max: int = N_MAX) -> SubgroupReport:
    """The subgroup of (Z/nZ)^x generated by S.

    Grows the subgroup one generator at a time: if g is not yet a member
    of H, the new subgroup is the union of the cosets H, Hg, Hg^2, ...
    up to the first power of g that falls back into H.
    """
    _check_modulus(n, n_max)
    member = bytearray(n)
    one = 1 % n
    member[one] = 1
    elems = [one]
    for s in S:
        g = s % n
        if math.gcd(g, n) != 1:
            raise ValueError(f"{s} shares a factor with {n}")
        if member[g]:
            continue
        base = list(elems)
        power = g
        while not member[power]:
            for h in base:
                x = h * power % n
                member[x] = 1
                elems.append(x)
            power = power * g % n
    phi = euler_phi(n)
    order = len(elems)
    uncovered = None
    if order < phi:
        uncovered = next(r for r in range(1, n) if not member[r] and math.gcd(r, n) == 1)
    return SubgroupReport(n, phi, order, phi // order, bytes(member), uncovered)


def units(n: int) -> list[int]:
    return [r for r in range(n) if math.gcd(r, n) == 1]


def _naive_closure(n: int, gens: frozenset[int]) -> frozenset[int]:
    group = {1 % n}
    while True:
        grown = group | {a * g % n for a in group for g in gens}
        if grown == group:
            return frozenset(group)
        group = grown


def enumerate_generating_sets(n: int, max_size: int) -> list[frozenset[int]]:
    """All sets of at most ``max_size`` units mod n that generate (Z/nZ)^x.

    Brute force with its own closure routine; for n <= 30 only.
    """
    if n < 1 or n > ORACLE_N_MAX:
        raise ValueError(f"enumerate_generating_sets is limited to 1 <= n <= {ORACLE_N_MAX}")
    us = units(n)
    if max_size > len(us):
        raise ValueError("max_size exceeds phi(n)")
    full = frozenset(us)
    out = []
    for size in range(0, max_size + 1):
        for combo in itertools.combinations(us, size):
            gens = frozenset(combo)
            if _naive_closure(n, gens) == full:
                out.append(gens)
    return out
