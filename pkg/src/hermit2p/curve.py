"""Rational points of the Hermitian curve ``y^q + y = x^(q+1)`` over GF(q^2).

``P`` is the point at infinity and ``Q`` the origin.  The evaluation set is
every other rational point, ordered lexicographically by the integer
encodings of ``(x, y)``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .gf import FieldSpec, field_make, prime_power


@dataclass(frozen=True)
class CurvePoint:
    """Affine point (encoded coordinates) or the point at infinity."""

    x: int | None = None
    y: int | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        return "inf" if self.is_infinity else f"{self.x},{self.y}"


INFINITY = CurvePoint()


@dataclass(frozen=True)
class CurveConstants:
    q: int
    genus: int
    n: int
    deg_H: int
    deg_K: int


@dataclass(frozen=True, eq=False)
class EvaluationSet:
    """Ordered points ``P_1, ..., P_n`` of ``D = R - P - Q``."""

    q: int
    field: FieldSpec
    points: tuple[CurvePoint, ...]
    xs: np.ndarray
    ys: np.ndarray

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def genus(self) -> int:
        return self.q * (self.q - 1) // 2

    def __len__(self) -> int:
        return len(self.points)


def hermitian_field(q: int) -> FieldSpec:
    """GF(q^2), the field the curve and its codes live over."""
    p, l = prime_power(q)
    return field_make(p, 2 * l)


def on_curve(F: FieldSpec, q: int, x: int, y: int) -> bool:
    return F.add(F.power(y, q), y) == F.power(x, q + 1)


@functools.lru_cache(maxsize=None)
def affine_points(q: int) -> tuple[CurvePoint, ...]:
    """All ``q^3`` affine solutions, sorted by ``(enc(x), enc(y))``."""
    F = hermitian_field(q)
    Q = F.order
    ys = np.arange(Q)
    lhs = F.vadd(F.vpow(ys, q), ys)
    pts = []
    for x in range(Q):
        rhs = F.power(x, q + 1)
        pts.extend(CurvePoint(x, int(y)) for y in ys[lhs == rhs])
    if len(pts) != q**3:
        raise AssertionError(f"expected {q**3} affine points, found {len(pts)}")
    return tuple(pts)


@functools.lru_cache(maxsize=None)
def evaluation_set(q: int) -> EvaluationSet:
    pts = tuple(pt for pt in affine_points(q) if (pt.x, pt.y) != (0, 0))
    xs = np.array([pt.x for pt in pts], dtype=np.int64)
    ys = np.array([pt.y for pt in pts], dtype=np.int64)
    xs.flags.writeable = False
    ys.flags.writeable = False
    return EvaluationSet(q, hermitian_field(q), pts, xs, ys)


def curve_constants(q: int) -> CurveConstants:
    hermitian_field(q)
    return CurveConstants(
        q=q,
        genus=q * (q - 1) // 2,
        n=q**3 - 1,
        deg_H=q + 1,
        deg_K=(q - 2) * (q + 1),
    )
