"""Closed-form parameters of two-point and one-point Hermitian codes.

For ``0 <= r <= q(q+1)`` write ``r + q = c(q+1) - a`` with ``c >= 1`` and
``0 <= a <= q``.  The two-point code ``C_L(D, (q^3 - r + 1)P - 2Q)`` has length
``q^3 - 1``, dimension ``q^3 - q(q-1)/2 - r`` and minimum distance

    r + max(0, q - c)                      if a == q
    r + max(0, q - c) + max(0, a - c)      otherwise.

The shortened one-point code of the same dimension loses the ``max(0, q - c)``
term unless ``a`` is ``q`` or ``0`` (at ``a == 0`` the divisor is already
one-point).
"""

from __future__ import annotations

from dataclasses import dataclass

from .rrspace import TwoPointDivisor

FAMILIES = ("one-point", "two-point")


@dataclass(frozen=True)
class RDecomposition:
    r: int
    c: int
    a: int


@dataclass(frozen=True)
class ClassicalParams:
    n: int
    k: int
    d: int
    family: str

    def __str__(self) -> str:
        return f"[{self.n},{self.k},{self.d}]"


@dataclass(frozen=True)
class TableRow:
    delta: int
    dim_one_point: int
    dim_two_point: int
    r: int


def r_range(q: int) -> range:
    return range(q * (q + 1) + 1)


def _check_r(q: int, r: int) -> None:
    if not 0 <= r <= q * (q + 1):
        raise ValueError(f"r = {r} outside [0, {q * (q + 1)}] for q = {q}")


def decompose_r(q: int, r: int) -> RDecomposition:
    _check_r(q, r)
    c = -(-(r + q) // (q + 1))
    return RDecomposition(r, c, c * (q + 1) - (r + q))


def dimension(q: int, r: int) -> int:
    return q**3 - q * (q - 1) // 2 - r


def two_point_distance(q: int, r: int) -> int:
    dec = decompose_r(q, r)
    c, a = dec.c, dec.a
    if a == q:
        return r + max(0, q - c)
    return r + max(0, q - c) + max(0, a - c)


def one_point_distance(q: int, r: int) -> int:
    dec = decompose_r(q, r)
    c, a = dec.c, dec.a
    if a in (0, q):
        return r + max(0, q - c)
    # at q = 2, r = 0 the bare formula gives 0 for what is the full space
    return max(1, r + max(0, a - c))


def two_point_params(q: int, r: int) -> ClassicalParams:
    return ClassicalParams(q**3 - 1, dimension(q, r), two_point_distance(q, r), "two-point")


def one_point_params(q: int, r: int) -> ClassicalParams:
    return ClassicalParams(q**3 - 1, dimension(q, r), one_point_distance(q, r), "one-point")


def params(q: int, r: int, family: str = "two-point") -> ClassicalParams:
    if family == "two-point":
        return two_point_params(q, r)
    if family == "one-point":
        return one_point_params(q, r)
    raise ValueError(f"unknown family {family!r}")


def two_point_divisor(q: int, r: int) -> TwoPointDivisor:
    """Divisor of the optimal two-point code for design parameter ``r``."""
    _check_r(q, r)
    return TwoPointDivisor(q**3 - r + 1, -2)


def dual_distance_omega(q: int, B: TwoPointDivisor) -> int:
    """Euclidean dual distance of ``C_L(D, K + B)`` for ``B = cH - aP - qQ``."""
    if B.j != -q:
        raise ValueError(f"{B} is not of the form cH - aP - qQ")
    if B == TwoPointDivisor(0, 0) or B.deg < 0:
        raise ValueError(f"need B != 0 and deg B >= 0, got {B}")
    c = -(-B.i // (q + 1))
    a = c * (q + 1) - B.i
    if a == q:
        return B.deg + max(0, q - c)
    return B.deg + max(0, q - c) + max(0, a - c)


def best_dim_for_delta(q: int, delta: int, family: str = "two-point") -> tuple[int, int]:
    """Largest dimension ``k(r)`` with ``d(r) >= delta``, and the smallest such ``r``."""
    if delta < 2:
        raise ValueError("designed distance must be >= 2")
    for r in r_range(q):
        if params(q, r, family).d >= delta:
            return dimension(q, r), r
    raise ValueError(f"delta = {delta} unattainable for q = {q} with r <= {q * (q + 1)}")


def improving_deltas(q: int) -> list[int]:
    """Designed distances where two-point codes beat one-point codes."""
    top = two_point_distance(q, q * (q + 1))
    out = []
    for delta in range(2, top + 1):
        try:
            two = best_dim_for_delta(q, delta, "two-point")[0]
            one = best_dim_for_delta(q, delta, "one-point")[0]
        except ValueError:
            continue
        if two > one:
            out.append(delta)
    return out


def default_deltas(q: int) -> list[int]:
    """Odd designed distances from ``q + 1`` up to the last improving one."""
    imp = improving_deltas(q)
    if not imp:
        return []
    return [d for d in range(q + 1, imp[-1] + 1) if d % 2 == 1]


def comparison_table(q: int, deltas: list[int] | None = None) -> list[TableRow]:
    rows = []
    for delta in default_deltas(q) if deltas is None else deltas:
        one, _ = best_dim_for_delta(q, delta, "one-point")
        two, r = best_dim_for_delta(q, delta, "two-point")
        rows.append(TableRow(delta, one, two, r))
    return rows
