"""Exact univariate polynomial arithmetic over the integers.

Polynomials are immutable coefficient tuples in ascending degree order.
The leading coefficient of a nonzero polynomial is nonzero; the zero
polynomial is the empty tuple.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class PolySyntaxError(ValueError):
    """Malformed polynomial text.  ``pos`` is the 0-based offset of the error."""

    def __init__(self, message: str, text: str, pos: int):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPoly:
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        return eval_at(self, x)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"IntPoly({format_poly(self)!r})"


# --------------------------------------------------------------------------
# parsing / formatting

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<sym>[-+*^,x]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str, pos: int | None = None):
        raise PolySyntaxError(msg, self.text, self.pos if pos is None else pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def at_end(self) -> bool:
        return self.peek() == ""

    def uint(self) -> int:
        self.skip_ws()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            self.error("expected digits")
        self.pos = m.end()
        return int(m.group())

    def signed_int(self) -> int:
        # the sign must touch the digits: '-3', never '- 3'
        self.skip_ws()
        m = re.compile(r"-?\d+").match(self.text, self.pos)
        if not m:
            self.error("expected integer")
        self.pos = m.end()
        return int(m.group())

    def var(self) -> int:
        self.expect("x")
        if self.peek() == "^":
            self.pos += 1
            return self.uint()
        return 1

    def term(self) -> tuple[int, int]:
        """Return (coefficient, exponent)."""
        ch = self.peek()
        if ch == "x":
            return 1, self.var()
        if ch == "-" and self.text[self.pos + 1: self.pos + 2] == "x":
            self.pos += 1
            return -1, self.var()
        if ch.isdigit() or ch == "-":
            c = self.signed_int()
            nxt = self.peek()
            if nxt == "*":
                self.pos += 1
                return c, self.var()
            if nxt == "x":
                return c, self.var()
            return c, 0
        self.error("expected term")

    def poly(self) -> IntPoly:
        if self.text[self.pos:].lstrip().startswith("coeffs:"):
            self.skip_ws()
            self.pos += len("coeffs:")
            vals = [self.signed_int()]
            while self.peek() == ",":
                self.pos += 1
                vals.append(self.signed_int())
            if not self.at_end():
                self.error("unexpected trailing input")
            return IntPoly(reversed(vals))

        acc: dict[int, int] = {}

        def add(ce):
            c, e = ce
            acc[e] = acc.get(e, 0) + c

        add(self.term())
        while not self.at_end():
            op = self.peek()
            if op not in "+-":
                self.error("expected '+' or '-'")
            self.pos += 1
            c, e = self.term()
            add((c if op == "+" else -c, e))
        if not acc:
            return IntPoly()
        out = [0] * (max(acc) + 1)
        for e, c in acc.items():
            out[e] = c
        return IntPoly(out)


def parse_poly(text: str) -> IntPoly:
    """Parse ``text`` into an :class:`IntPoly`.

    Two forms are accepted: a sum of terms such as ``"x^5 - x - 1"`` or
    ``"3*x^2 + 2x - 7"``, and a descending coefficient list such as
    ``"coeffs:1,0,0,0,-1,-1"``.  Like terms are combined.
    """
    if not isinstance(text, str):
        raise TypeError("polynomial text must be a string")
    parser = _Parser(text)
    if parser.at_end():
        parser.error("empty input")
    return parser.poly()


def format_poly(p: IntPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e in range(p.degree, -1, -1):
        c = p.coeffs[e]
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            v = "x" if e == 1 else f"x^{e}"
            body = v if mag == 1 else f"{mag}*{v}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def as_poly(p: IntPoly | str | Sequence[int]) -> IntPoly:
    """Coerce text, an ascending coefficient sequence, or an IntPoly."""
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, str):
        return parse_poly(p)
    return IntPoly(p)


# --------------------------------------------------------------------------
# calculus and evaluation

def derivative(p: IntPoly) -> IntPoly:
    return IntPoly(k * c for k, c in enumerate(p.coeffs) if k > 0)


def eval_at(p: IntPoly, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def content(p: IntPoly) -> int:
    g = 0
    for c in p.coeffs:
        g = _gcd(g, c)
    return g


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b (ascending lists, b nonzero)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, bc in enumerate(b):
            r[i + shift] -= lr * bc
        r = list(_trim(r))
        e -= 1
    if e > 0:
        f = lb ** e
        r = [c * f for c in r]
    return r


def resultant(p: IntPoly, q: IntPoly) -> int:
    """Resultant of two nonzero integer polynomials.

    Uses the subresultant remainder sequence, so every intermediate
    division is exact and no rationals appear.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    A, B = list(p.coeffs), list(q.coeffs)
    s = 1
    if len(A) < len(B):
        A, B = B, A
        if (len(A) - 1) % 2 == 1 and (len(B) - 1) % 2 == 1:
            s = -1
    if len(B) == 1:
        return s * B[0] ** (len(A) - 1)

    ca = content(IntPoly(A))
    cb = content(IntPoly(B))
    A = [c // ca for c in A]
    B = [c // cb for c in B]
    t = ca ** (len(B) - 1) * cb ** (len(A) - 1)
    g = h = 1
    while True:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        R = _prem(A, B)
        A = B
        if not R:
            return 0
        div = g * h ** delta
        B = [c // div for c in R]
        g = A[-1]
        if delta:
            h = g ** delta // h ** (delta - 1)
        if len(B) == 1:
            da = len(A) - 1
            h = B[0] ** da // h ** (da - 1) if da >= 1 else 1
            return s * t * h


def discriminant(p: IntPoly) -> int:
    """Discriminant of a monic polynomial of degree at least 1."""
    if p.degree < 1:
        raise ValueError("discriminant needs a nonconstant polynomial")
    if not p.is_monic():
        raise ValueError(f"discriminant needs a monic polynomial, got {format_poly(p)}")
    d = p.degree
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(p, derivative(p))
