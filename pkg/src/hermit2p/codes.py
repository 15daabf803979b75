"""Evaluation codes ``C_L(D, G)`` on the Hermitian curve and their duals.

Generator matrices are numpy ``int64`` arrays of field-element encodings.

The Euclidean dual of ``C_L(D, iP + jQ)`` is ``C_L(D, (q^3+q^2-q-2-i)P + (-j-1)Q)``
as an exact equality of codes.  It comes from the residue differential
``dt/t`` with ``t = x^(q^2) - x``, whose divisor is
``(q^3+q^2-q-2)P - D - Q``; no differentials are represented at runtime.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .curve import EvaluationSet, evaluation_set
from .gf import FieldSpec
from .rrspace import TwoPointDivisor, canonical_shift, canonicalize_pq, monomial_basis


@dataclass(frozen=True, eq=False)
class LinearCode:
    """Linear code over ``field`` given by a full-row-rank generator matrix."""

    field: FieldSpec
    generator: np.ndarray
    divisor: TwoPointDivisor | None = None
    label: str = dc_field(default="")

    def __post_init__(self):
        g = np.asarray(self.generator, dtype=np.int64)
        if g.ndim != 2:
            raise ValueError("generator must be a 2-d array")
        g.flags.writeable = False
        object.__setattr__(self, "generator", g)

    @property
    def n(self) -> int:
        return self.generator.shape[1]

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    def __repr__(self) -> str:
        tag = f" {self.divisor}" if self.divisor is not None else ""
        return f"<LinearCode [{self.n},{self.k}]_{self.field.order}{tag}>"

    @classmethod
    def from_rows(cls, field: FieldSpec, rows, n: int | None = None, **kw) -> LinearCode:
        """Code spanned by ``rows`` (need not be independent)."""
        rows = np.asarray(rows, dtype=np.int64)
        if rows.size == 0:
            return cls(field, np.zeros((0, n if n is not None else rows.shape[-1]), np.int64), **kw)
        R, _ = rref(field, rows)
        return cls(field, R, **kw)

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> LinearCode:
        return cls(field, np.zeros((0, n), dtype=np.int64))

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> LinearCode:
        return cls(field, np.eye(n, dtype=np.int64))


# -- elimination -------------------------------------------------------------


def rref(field: FieldSpec, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; zero rows dropped.

    Pivots are taken at the lowest column index, using the lowest eligible row.
    """
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("expected a matrix")
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, col])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        lead = int(R[r, col])
        if lead != 1:
            R[r] = field.vmul(field.inv(lead), R[r])
        others = np.flatnonzero(R[:, col])
        others = others[others != r]
        if others.size:
            R[others] = field.vsub(R[others], field.vmul(R[others, col][:, None], R[r][None, :]))
        pivots.append(col)
        r += 1
    return R[:r], pivots


def rank(field: FieldSpec, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(field, M)[1])


def canonical_generator(C: LinearCode) -> np.ndarray:
    if C.k == 0:
        return C.generator
    return rref(C.field, C.generator)[0]


def _check_compatible(A: LinearCode, B: LinearCode) -> None:
    if A.field is not B.field or A.n != B.n:
        raise ValueError(f"incompatible codes {A!r} and {B!r}")


# -- construction --------------------------------------------------------------


def _eval_monomials(D: EvaluationSet, G: TwoPointDivisor) -> np.ndarray:
    F, q = D.field, D.q
    s = canonical_shift(G, q)
    basis = monomial_basis(G, q)
    if not basis:
        return np.zeros((0, D.n), dtype=np.int64)
    # L(G) = y^(-s) L(G + s(q+1)(P - Q))
    max_dx = max(m.dx for m in basis)
    xpow = [F.vpow(D.xs, e) for e in range(max_dx + 1)]
    dys = sorted({m.dy - s for m in basis})
    ypow = {e: F.vpow(D.ys, e) for e in dys}
    return np.stack([F.vmul(xpow[m.dx], ypow[m.dy - s]) for m in basis])


def evaluate_code(D: EvaluationSet | int, G: TwoPointDivisor) -> LinearCode:
    """``C_L(D, G)``: rows are the basis functions of ``L(G)`` evaluated on ``D``.

    For ``deg G >= n`` the evaluation map may have a kernel; the rank is then
    checked and ``ValueError`` raised if any dimension is lost.  Use
    :func:`evaluation_image` to get the reduced image instead.
    """
    if isinstance(D, int):
        D = evaluation_set(D)
    M = _eval_monomials(D, G)
    if G.deg >= D.n and rank(D.field, M) < M.shape[0]:
        raise ValueError(f"evaluation of L({G}) on {D.n} points is not injective (deg {G.deg} >= n)")
    return LinearCode(D.field, M, divisor=G)


def evaluation_image(D: EvaluationSet | int, G: TwoPointDivisor) -> LinearCode:
    """``C_L(D, G)`` for any degree, reduced to a basis of the image."""
    if isinstance(D, int):
        D = evaluation_set(D)
    return LinearCode.from_rows(D.field, _eval_monomials(D, G), n=D.n, divisor=G)


def scale_equivalence(C: LinearCode, s: int, D: EvaluationSet | int) -> LinearCode:
    """Multiply column ``t`` by ``y(P_t)^s``.

    The image of ``C_L(D, G)`` is ``C_L(D, G + s((q+1)P - (q+1)Q))``.
    """
    if isinstance(D, int):
        D = evaluation_set(D)
    scale = C.field.vpow(D.ys, s)
    divisor = C.divisor.shifted(s, D.q) if C.divisor is not None else None
    return LinearCode(C.field, C.field.vmul(C.generator, scale[None, :]), divisor=divisor)


# -- duals ---------------------------------------------------------------------


def nullspace_dual(C: LinearCode) -> LinearCode:
    """Euclidean dual by Gaussian elimination."""
    F, n = C.field, C.n
    if C.k == 0:
        return LinearCode.full(F, n)
    R, pivots = rref(F, C.generator)
    free = [c for c in range(n) if c not in set(pivots)]
    H = np.zeros((len(free), n), dtype=np.int64)
    for row, f in enumerate(free):
        H[row, f] = 1
        H[row, pivots] = F.vneg(R[:, f])
    return LinearCode(F, H)


def conjugate_code(C: LinearCode, e: int) -> LinearCode:
    return LinearCode(C.field, C.field.vconj(C.generator, e))


def hermitian_dual(C: LinearCode, e: int | None = None) -> LinearCode:
    """Dual under ``<u, v> = sum u_i v_i^e`` with ``e^2`` the field order."""
    e = e if e is not None else _sqrt_order(C.field)
    return nullspace_dual(conjugate_code(C, e))


def _sqrt_order(F: FieldSpec) -> int:
    e = round(F.order**0.5)
    if e * e != F.order:
        raise ValueError(f"GF({F.order}) is not a square field")
    return e


def formula_dual(G: TwoPointDivisor, q: int) -> TwoPointDivisor:
    """Divisor of the Euclidean dual: ``iP - jQ -> (q^3+q^2-q-2-i)P + (j-1)Q``.

    The formula holds for any ``G`` (not only canonical ones) as an equality
    of codes over the fixed evaluation set.
    """
    return TwoPointDivisor(q**3 + q**2 - q - 2 - G.i, -G.j - 1)


def formula_dual_code(D: EvaluationSet | int, G: TwoPointDivisor) -> LinearCode:
    if isinstance(D, int):
        D = evaluation_set(D)
    return evaluation_image(D, formula_dual(G, D.q))


# -- containment and orthogonality -----------------------------------------------


def is_subcode(C1: LinearCode, C2: LinearCode) -> bool:
    """Whether every row of ``C1`` lies in the row space of ``C2``."""
    _check_compatible(C1, C2)
    if C1.k == 0:
        return True
    if C2.k == 0:
        return False
    r2 = rank(C2.field, C2.generator)
    return rank(C2.field, np.vstack([C2.generator, C1.generator])) == r2


def same_code(A: LinearCode, B: LinearCode) -> bool:
    _check_compatible(A, B)
    return np.array_equal(canonical_generator(A), canonical_generator(B))


def gram(C: LinearCode, hermitian: bool = False) -> np.ndarray:
    F = C.field
    other = F.vconj(C.generator, _sqrt_order(F)) if hermitian else C.generator
    return F.matmul(C.generator, other.T)


def is_self_orth_euclidean(C: LinearCode) -> bool:
    return not gram(C).any()


def is_self_orth_hermitian(C: LinearCode) -> bool:
    return not gram(C, hermitian=True).any()


# Divisor-level sufficient conditions.


def dual_contained_predicate(G: TwoPointDivisor, G2: TwoPointDivisor, q: int) -> bool:
    """Sufficient condition for ``C_L(D, G)^perp <= C_L(D, G2)``."""
    return G.i + G2.i >= q**3 + q**2 - q - 2 and G.j + G2.j >= -1


def euclidean_self_orth_predicate(G: TwoPointDivisor, q: int) -> bool:
    return 2 * G.i <= q**3 + q**2 - q - 2 and G.j < 0


def hermitian_self_orth_predicate(G: TwoPointDivisor, q: int) -> bool:
    """``iP - jQ`` with ``j >= 1`` and ``i <= q^2 - 2``."""
    return G.j <= -1 and G.i <= q**2 - 2


def canonical_code(D: EvaluationSet | int, G: TwoPointDivisor) -> LinearCode:
    """The code of the canonical representative of ``G``."""
    if isinstance(D, int):
        D = evaluation_set(D)
    return evaluate_code(D, canonicalize_pq(G, D.q))
