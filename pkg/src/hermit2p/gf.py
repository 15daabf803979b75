"""Finite field arithmetic over GF(p^m).

Elements are handled internally as integers: the little-endian coefficient
vector ``(c_0, ..., c_{m-1})`` of the polynomial representative is encoded as
``sum(c_i * p**i)``.  This encoding is the only serialization used anywhere in
the package.  Multiplication goes through log/antilog tables built once per
field; the vectorized helpers (``vadd``, ``vmul``, ...) operate on numpy
integer arrays of encodings and are what the code and oracle layers use.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

MAX_ORDER = 1 << 16

# Little-endian coefficients, leading 1 included.
MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),  # x^2 + x + 1
    (3, 2): (2, 2, 1),  # x^2 + 2x + 2
    (2, 4): (1, 1, 0, 0, 1),  # x^4 + x + 1
    (2, 6): (1, 1, 0, 1, 1, 0, 1),  # x^6 + x^4 + x^3 + x + 1
}

# Full Q x Q add/mul tables are built up to this order.
_TABLE_ORDER_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def prime_power(n: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``n == p**m``; raise ``ValueError`` otherwise."""
    if n < 2:
        raise ValueError(f"{n} is not a prime power")
    for p in range(2, n + 1):
        if n % p == 0:
            m = 0
            while n % p == 0:
                n //= p
                m += 1
            if n != 1:
                raise ValueError(f"{p**m * n} is not a prime power")
            return p, m
    raise AssertionError("unreachable")


# -- polynomials over GF(p), little-endian coefficient lists -----------------


def _trim(poly: list[int]) -> list[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_mod(num: Sequence[int], den: Sequence[int], p: int) -> list[int]:
    rem = _trim([c % p for c in num])
    den = _trim([c % p for c in den])
    inv_lead = pow(den[-1], -1, p)
    while len(rem) >= len(den):
        factor = rem[-1] * inv_lead % p
        shift = len(rem) - len(den)
        for t, c in enumerate(den):
            rem[shift + t] = (rem[shift + t] - factor * c) % p
        _trim(rem)
    return rem


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial-divide by every monic polynomial of degree 1..deg/2."""
    modulus = list(modulus)
    m = len(modulus) - 1
    if m < 1 or modulus[-1] % p == 0:
        return False
    for deg in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not _poly_mod(modulus, list(low) + [1], p):
                return False
    return True


def _first_irreducible(p: int, m: int) -> tuple[int, ...]:
    for low in itertools.product(range(p), repeat=m):
        candidate = tuple(reversed(low)) + (1,)
        if candidate[0] != 0 and is_irreducible(candidate, p):
            return candidate
    raise ValueError(f"no irreducible polynomial of degree {m} over GF({p})")


# -- field -------------------------------------------------------------------


class FieldSpec:
    """GF(p^m) with a fixed modulus.

    Instances are immutable after construction and are cached by
    :func:`field_make`, so two elements share a field iff their ``spec``
    attributes are the same object.
    """

    def __init__(self, p: int, m: int, modulus: Sequence[int]):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.modulus = modulus
        self.order = p**m
        if self.order > MAX_ORDER:
            raise ValueError(f"field order {self.order} exceeds {MAX_ORDER}")
        self._weights = np.array([p**i for i in range(m)], dtype=np.int64)
        self._build_log_tables()

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, m={self.m}, modulus={self.modulus})"

    # -- table construction --------------------------------------------------

    def _digits(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.m)]

    def _mul_poly(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * m - 1)
        for s, x in enumerate(da):
            if x:
                for t, y in enumerate(db):
                    prod[s + t] = (prod[s + t] + x * y) % p
        rem = _poly_mod(prod, self.modulus, p) if len(_trim(prod)) > m else prod
        return sum(c * p**i for i, c in enumerate(rem))

    def _build_log_tables(self) -> None:
        Q = self.order
        # Search for a primitive element; the modulus need not be primitive.
        for g in range(2 if Q > 2 else 1, Q):
            exp = [1]
            seen = {1}
            x = 1
            for _ in range(Q - 2):
                x = self._mul_poly(x, g)
                if x in seen:
                    break
                seen.add(x)
                exp.append(x)
            if len(exp) == Q - 1:
                break
        else:
            raise AssertionError("no primitive element found")
        self.generator = g
        self._exp = np.array(exp + exp, dtype=np.int64)
        self._log = np.zeros(Q, dtype=np.int64)
        self._log[np.array(exp)] = np.arange(Q - 1)
        self._exp_list = exp + exp
        self._log_list = self._log.tolist()

    @functools.cached_property
    def add_table(self) -> np.ndarray:
        Q = self.order
        a, b = np.meshgrid(np.arange(Q), np.arange(Q), indexing="ij")
        return self._vadd_raw(a, b)

    @functools.cached_property
    def mul_table(self) -> np.ndarray:
        Q = self.order
        a, b = np.meshgrid(np.arange(Q), np.arange(Q), indexing="ij")
        return self._vmul_raw(a, b)

    @functools.cached_property
    def neg_table(self) -> np.ndarray:
        return self._vneg_raw(np.arange(self.order))

    # -- scalar arithmetic on encodings ----------------------------------------

    def check(self, a: int) -> int:
        a = int(a)
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element encoding of GF({self.order})")
        return a

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out, w = 0, 1
        for _ in range(self.m):
            out += ((a % p + b % p) % p) * w
            a //= p
            b //= p
            w *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out, w = 0, 1
        for _ in range(self.m):
            out += (-(a % p) % p) * w
            a //= p
            w *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp_list[self._log_list[a] + self._log_list[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp_list[(-self._log_list[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if e == 0 else 0
        return self._exp_list[(self._log_list[a] * e) % (self.order - 1)]

    def conjugate(self, a: int, e: int) -> int:
        """Frobenius ``a -> a**e`` of GF(e^2) over GF(e)."""
        if e * e != self.order:
            raise ValueError(f"GF({self.order}) is not a quadratic extension of GF({e})")
        return self.power(a, e)

    def in_subfield(self, a: int, e: int) -> bool:
        return self.power(a, e) == a

    # -- vectorized arithmetic on numpy arrays of encodings --------------------

    def _vadd_raw(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        p = self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for w in self._weights:
            out += (((a // w) % p + (b // w) % p) % p) * w
        return out

    def _vneg_raw(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        p = self.p
        out = np.zeros(a.shape, dtype=np.int64)
        for w in self._weights:
            out += ((-((a // w) % p)) % p) * w
        return out

    def _vmul_raw(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        prod = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, prod)

    def _small(self) -> bool:
        return self.order <= _TABLE_ORDER_LIMIT

    def vadd(self, a, b) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        if self._small():
            return self.add_table[a, b]
        return self._vadd_raw(a, b)

    def vneg(self, a) -> np.ndarray:
        if self.p == 2:
            return np.array(a, dtype=np.int64)
        if self._small():
            return self.neg_table[a]
        return self._vneg_raw(a)

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        if self._small():
            return self.mul_table[a, b]
        return self._vmul_raw(a, b)

    def vpow(self, a, e: int) -> np.ndarray:
        """Elementwise ``a**e``; negative ``e`` requires nonzero entries."""
        a = np.asarray(a, dtype=np.int64)
        zero = a == 0
        if e < 0 and zero.any():
            raise ZeroDivisionError("zero to a negative power")
        out = self._exp[(self._log[a] * e) % (self.order - 1)]
        if e == 0:
            return np.ones_like(a)
        return np.where(zero, 0, out)

    def vconj(self, a, e: int) -> np.ndarray:
        if e * e != self.order:
            raise ValueError(f"GF({self.order}) is not a quadratic extension of GF({e})")
        return self.vpow(a, e)

    def vsum(self, a, axis: int = -1) -> np.ndarray:
        """Field sum along ``axis``."""
        a = np.moveaxis(np.asarray(a, dtype=np.int64), axis, 0)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=0) if a.shape[0] else np.zeros(a.shape[1:], np.int64)
        p = self.p
        out = np.zeros(a.shape[1:], dtype=np.int64)
        for w in self._weights:
            out += (((a // w) % p).sum(axis=0) % p) * w
        return out

    def matmul(self, A, B) -> np.ndarray:
        """Matrix product over the field."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if A.shape[1] != B.shape[0]:
            raise ValueError(f"shape mismatch {A.shape} @ {B.shape}")
        if A.shape[0] == 0 or B.shape[1] == 0:
            return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        terms = self.vmul(A[:, :, None], B[None, :, :])
        return self.vsum(terms, axis=1)

    # -- elements --------------------------------------------------------------

    def __call__(self, value: int | Sequence[int]) -> FieldElement:
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, self.check(int(value)))
        coeffs = list(value)
        if len(coeffs) > self.m or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"invalid coefficient vector {coeffs} for GF({self.order})")
        return FieldElement(self, sum(c * self.p**i for i, c in enumerate(coeffs)))

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, a) for a in range(self.order)]

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)


@dataclass(frozen=True)
class FieldElement:
    """An element of ``spec``, stored by its integer encoding."""

    spec: FieldSpec
    value: int

    @property
    def coefficients(self) -> tuple[int, ...]:
        return tuple(self.spec._digits(self.value))

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec is not self.spec:
                raise ValueError("elements belong to different fields")
            return other.value
        if isinstance(other, int):
            return other % self.spec.p
        return NotImplemented

    def _wrap(self, v: int) -> FieldElement:
        return FieldElement(self.spec, v)

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.div(self.value, b))

    def __neg__(self):
        return self._wrap(self.spec.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.spec.power(self.value, e))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def conjugate(self, e: int) -> FieldElement:
        return self._wrap(self.spec.conjugate(self.value, e))

    def __repr__(self) -> str:
        terms = [
            (f"{c}" if i == 0 else f"{'' if c == 1 else c}x{'' if i == 1 else f'^{i}'}")
            for i, c in enumerate(self.coefficients)
            if c
        ]
        return " + ".join(reversed(terms)) or "0"


@functools.lru_cache(maxsize=None)
def field_make(p: int, m: int) -> FieldSpec:
    """Build (or fetch the cached) GF(p^m) with the fixed modulus table."""
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"unsupported extension degree {m}")
    if p**m > MAX_ORDER:
        raise ValueError(f"unsupported field order {p}^{m}")
    modulus = MODULI.get((p, m)) or _first_irreducible(p, m)
    return FieldSpec(p, m, modulus)


def field_of_order(order: int) -> FieldSpec:
    return field_make(*prime_power(order))


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if a.spec is not b.spec:
        raise ValueError("elements belong to different fields")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def conjugate(a: FieldElement, e: int) -> FieldElement:
    return a.conjugate(e)


def encode(a: FieldElement) -> int:
    return a.value


def decode(spec: FieldSpec, n: int) -> FieldElement:
    if not 0 <= n < spec.order:
        raise ValueError(f"{n} out of range for GF({spec.order})")
    return FieldElement(spec, n)
