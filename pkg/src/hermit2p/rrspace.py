"""Two-point divisors ``iP + jQ`` and monomial bases of their Riemann-Roch spaces.

Since ``(y) = (q+1)Q - (q+1)P``, shifting a divisor by ``s(q+1)(P - Q)`` is
multiplication by ``y^s``; every divisor is therefore equivalent to a unique
``i'P - j'Q`` with ``0 <= j' <= q``.  For that form, writing
``i' = c(q+1) - a`` with ``0 <= a <= q``, a basis of ``L(G)`` is given by the
monomials ``x^dx y^dy`` with

1. ``0 <= dx <= q``, ``dy >= 0`` and ``dx + dy <= c``,
2. ``dx >= a`` whenever ``dx + dy == c``,
3. ``dx >= b`` whenever ``dy == 0`` (``b = j'``).
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import NamedTuple


@dataclass(frozen=True)
class TwoPointDivisor:
    i: int
    j: int

    @property
    def deg(self) -> int:
        return self.i + self.j

    def __le__(self, other: TwoPointDivisor) -> bool:  # type: ignore[override]
        return self.i <= other.i and self.j <= other.j

    def __add__(self, other: TwoPointDivisor) -> TwoPointDivisor:
        return TwoPointDivisor(self.i + other.i, self.j + other.j)

    def __sub__(self, other: TwoPointDivisor) -> TwoPointDivisor:
        return TwoPointDivisor(self.i - other.i, self.j - other.j)

    def shifted(self, s: int, q: int) -> TwoPointDivisor:
        """``G + s((q+1)P - (q+1)Q)``."""
        return TwoPointDivisor(self.i + s * (q + 1), self.j - s * (q + 1))

    def __str__(self) -> str:
        if self.i == 0 and self.j == 0:
            return "0"
        parts = []
        if self.i:
            parts.append(f"{self.i}P")
        if self.j:
            sign = "-" if self.j < 0 else ("+" if parts else "")
            parts.append(f"{sign}{abs(self.j)}Q")
        return "".join(parts)

    @classmethod
    def parse(cls, text: str) -> TwoPointDivisor:
        """Parse ``"35P+5Q"``, ``"6P-2Q"``, ``"3P"``, ``"-Q"``, ``"0"``."""
        s = text.replace(" ", "")
        if s == "0":
            return cls(0, 0)
        m = re.fullmatch(r"(?:([+-]?\d*)P)?(?:([+-]?\d*)Q)?", s)
        if not s or m is None or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"cannot parse divisor {text!r}")

        def coeff(g: str | None) -> int:
            if g is None:
                return 0
            if g in ("", "+"):
                return 1
            if g == "-":
                return -1
            return int(g)

        if m.group(1) is not None and m.group(2) is not None and m.group(2)[:1] not in "+-":
            raise ValueError(f"cannot parse divisor {text!r}")
        return cls(coeff(m.group(1)), coeff(m.group(2)))


ZERO = TwoPointDivisor(0, 0)


@dataclass(frozen=True)
class CanonicalDivisor:
    """``c(q+1)P - aP - bQ`` with ``0 <= a, b <= q``."""

    c: int
    a: int
    b: int

    def divisor(self, q: int) -> TwoPointDivisor:
        return TwoPointDivisor(self.c * (q + 1) - self.a, -self.b)


class Monomial(NamedTuple):
    dx: int
    dy: int


def canonical_shift(G: TwoPointDivisor, q: int) -> int:
    """The ``s`` with ``G.shifted(s, q)`` canonical (Q-coefficient in ``[-q, 0]``)."""
    return -(-G.j // (q + 1))


def canonicalize_pq(G: TwoPointDivisor, q: int) -> TwoPointDivisor:
    return G.shifted(canonical_shift(G, q), q)


def to_cab(G: TwoPointDivisor, q: int) -> CanonicalDivisor:
    H = canonicalize_pq(G, q)
    c = -(-H.i // (q + 1))
    return CanonicalDivisor(c, c * (q + 1) - H.i, -H.j)


@functools.lru_cache(maxsize=4096)
def _basis(c: int, a: int, b: int, q: int) -> tuple[Monomial, ...]:
    out = []
    for dy in range(max(c, -1) + 1):
        for dx in range(min(q, c - dy) + 1):
            if dx + dy == c and dx < a:
                continue
            if dy == 0 and dx < b:
                continue
            out.append(Monomial(dx, dy))
    return tuple(out)


def monomial_basis(G: TwoPointDivisor, q: int) -> tuple[Monomial, ...]:
    """Basis of ``L(canonicalize_pq(G))``, ordered by ``(dy, dx)``.

    For non-canonical ``G`` the basis of ``L(G)`` itself is these monomials
    times ``y**(-canonical_shift(G, q))``.
    """
    cab = to_cab(G, q)
    return _basis(cab.c, cab.a, cab.b, q)


def rr_dim(G: TwoPointDivisor, q: int) -> int:
    return len(monomial_basis(G, q))
