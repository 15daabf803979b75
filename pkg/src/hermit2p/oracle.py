"""Exhaustive weight enumeration: ground truth for small fields.

Words are enumerated one projective point at a time (first nonzero message
coefficient fixed to 1) and every count is multiplied by ``Q - 1``, since
scaling preserves weight.  The span of the trailing generators is split into a
precomputed low table ``L`` and a stream of high offsets ``h``; the weight of
``L + h`` is ``n`` minus the number of positions where ``L`` equals ``-h``,
so the hot loop is a column-wise equality count with no field arithmetic.
High offsets are partitioned into contiguous index ranges across worker
threads and the per-range histograms are summed.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .codes import LinearCode, is_subcode, nullspace_dual, rank, rref
from .gf import FieldSpec

DEFAULT_BUDGET = 9
_LOW_CELLS = 1 << 23  # cap on low-table size in symbols
_LOW_ROWS = 1 << 18
_HIGH_CHUNK = 256


class BudgetExceeded(RuntimeError):
    pass


def default_threads() -> int:
    env = os.environ.get("HERMIT2P_THREADS")
    if env:
        n = int(env)
        if n < 1:
            raise ValueError("HERMIT2P_THREADS must be a positive integer")
        return n
    return os.cpu_count() or 1


@dataclass(frozen=True)
class WeightDistribution:
    counts: tuple[int, ...]
    field_order: int

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def size(self) -> int:
        return sum(self.counts)

    @property
    def k(self) -> int:
        k = round(math.log(self.size, self.field_order)) if self.size > 1 else 0
        if self.field_order**k != self.size:
            raise ValueError("distribution size is not a power of the field order")
        return k

    def min_weight(self) -> int:
        for w, c in enumerate(self.counts):
            if w and c:
                return w
        raise ValueError("no nonzero words")

    def __sub__(self, other: WeightDistribution) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.counts, other.counts))


# -- enumeration core ----------------------------------------------------------------


def _span_table(F: FieldSpec, rows: np.ndarray, n: int) -> np.ndarray:
    """All ``Q^len(rows)`` combinations of ``rows``."""
    table = np.zeros((1, n), dtype=np.int64)
    scalars = np.arange(F.order)[:, None]
    for row in rows:
        multiples = F.vmul(scalars, row[None, :])
        table = F.vadd(table[None, :, :], multiples[:, None, :]).reshape(-1, n)
    return table


def _combos(F: FieldSpec, rows: np.ndarray, offset: np.ndarray, idx: np.ndarray) -> np.ndarray:
    """``offset + sum_s digit_s(idx) * rows[s]`` for each index in ``idx``."""
    Q = F.order
    out = np.broadcast_to(offset, (idx.size, offset.size)).copy()
    rem = idx.copy()
    for row in rows:
        digit = rem % Q
        rem //= Q
        out = F.vadd(out, F.vmul(digit[:, None], row[None, :]))
    return out


def _low_size(Q: int, d: int, n: int) -> int:
    a = 0
    while a < d and Q ** (a + 1) <= _LOW_ROWS and Q ** (a + 1) * n <= _LOW_CELLS:
        a += 1
    return a


def _histogram(LT: np.ndarray, neg_h: np.ndarray) -> np.ndarray:
    n = LT.shape[0]
    hist = np.zeros(n + 1, dtype=np.int64)
    zeros = np.empty(LT.shape[1], dtype=np.int16)
    for h in neg_h:
        zeros[:] = 0
        for j in range(n):
            zeros += LT[j] == h[j]
        hist += np.bincount(n - zeros, minlength=n + 1)
    return hist


def projective_counts(
    F: FieldSpec,
    rows: np.ndarray,
    leads: int,
    threads: int | None = None,
    chunk: int = _HIGH_CHUNK,
) -> np.ndarray:
    """Weight histogram of all ``sum m_s rows[s]`` whose first nonzero
    coefficient has index ``< leads`` (zero word excluded)."""
    rows = np.asarray(rows, dtype=np.int64)
    k, n = rows.shape
    Q = F.order
    threads = threads or default_threads()
    dtype = np.uint8 if Q <= 256 else np.uint16
    total = np.zeros(n + 1, dtype=np.int64)
    tasks = []
    for t in range(min(leads, k)):
        rest = rows[t + 1 :]
        d = rest.shape[0]
        a = _low_size(Q, d, n)
        high, low = rest[: d - a], rest[d - a :]
        LT = np.ascontiguousarray(_span_table(F, low, n).T.astype(dtype))
        n_high = Q ** (d - a)
        for lo in range(0, n_high, chunk):
            tasks.append((LT, high, rows[t], lo, min(lo + chunk, n_high)))

    def run(task):
        LT, high, base, lo, hi = task
        H = _combos(F, high, base, np.arange(lo, hi, dtype=np.int64))
        return _histogram(LT, F.vneg(H).astype(LT.dtype))

    if threads > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(run, tasks):
                total += part
    else:
        for task in tasks:
            total += run(task)
    return total * (Q - 1)


def _enumerate(C: LinearCode, threads: int | None, chunk: int = _HIGH_CHUNK) -> WeightDistribution:
    counts = projective_counts(C.field, C.generator, C.k, threads, chunk) if C.k else np.zeros(C.n + 1, np.int64)
    counts[0] += 1
    return WeightDistribution(tuple(int(c) for c in counts), C.field.order)


# -- MacWilliams -----------------------------------------------------------------------


def krawtchouk(j: int, i: int, n: int, Q: int) -> int:
    return sum(
        (-1) ** s * (Q - 1) ** (j - s) * math.comb(i, s) * math.comb(n - i, j - s)
        for s in range(j + 1)
    )


def macwilliams(W: WeightDistribution, n: int | None = None, k: int | None = None, field_order: int | None = None) -> WeightDistribution:
    """Weight distribution of the dual code, in exact integer arithmetic."""
    n = W.n if n is None else n
    Q = W.field_order if field_order is None else field_order
    k = W.k if k is None else k
    if len(W.counts) != n + 1 or W.size != Q**k or W.counts[0] != 1:
        raise ValueError("inconsistent weight distribution")
    out = []
    for j in range(n + 1):
        num = sum(A * krawtchouk(j, i, n, Q) for i, A in enumerate(W.counts) if A)
        b, r = divmod(num, Q**k)
        if r or b < 0:
            raise ValueError("weight distribution is not that of a linear code")
        out.append(b)
    return WeightDistribution(tuple(out), Q)


# -- oracle ----------------------------------------------------------------------------


class Oracle:
    """Brute-force weight oracle with a budget in enumerable dimensions.

    Distributions are cached by the reduced row echelon form of the code.
    """

    def __init__(self, budget: int = DEFAULT_BUDGET, threads: int | None = None, chunk: int = _HIGH_CHUNK):
        self.budget = budget
        self.threads = threads
        self.chunk = chunk
        self._cache: dict[tuple, WeightDistribution] = {}
        self.enumerated_words = 0

    def _key(self, C: LinearCode) -> tuple:
        R = rref(C.field, C.generator)[0] if C.k else C.generator
        return (C.field.order, C.n, R.shape[0], R.tobytes())

    def feasible(self, C: LinearCode) -> bool:
        return min(C.k, C.n - C.k) <= self.budget

    def weight_distribution(self, C: LinearCode) -> WeightDistribution:
        key = self._key(C)
        W = self._cache.get(key)
        if W is not None:
            return W
        if C.k <= self.budget and C.k <= C.n - C.k:
            W = _enumerate(C, self.threads, self.chunk)
            self.enumerated_words += C.field.order**C.k
        elif C.n - C.k <= self.budget:
            dual = nullspace_dual(C)
            W = macwilliams(self.weight_distribution(dual), C.n, dual.k, C.field.order)
        elif C.k <= self.budget:
            W = _enumerate(C, self.threads, self.chunk)
            self.enumerated_words += C.field.order**C.k
        else:
            raise BudgetExceeded(
                f"{C!r}: min(k, n-k) = {min(C.k, C.n - C.k)} exceeds budget {self.budget}"
            )
        self._cache[key] = W
        return W

    def min_weight(self, C: LinearCode) -> int:
        if C.k == 0:
            raise ValueError("the zero code has no nonzero words")
        return self.weight_distribution(C).min_weight()

    def dual_distance(self, C: LinearCode) -> int:
        if C.k == C.n:
            raise ValueError("the dual of the full space is the zero code")
        return self.min_weight(nullspace_dual(C))

    def coset_distribution(self, C2: LinearCode, C1: LinearCode, method: str = "auto") -> tuple[int, ...]:
        """Weight counts of ``C2 \\ C1`` for ``C1`` a proper subcode of ``C2``."""
        if not is_subcode(C1, C2):
            raise ValueError("C1 is not contained in C2")
        k1, k2 = rank(C1.field, C1.generator), rank(C2.field, C2.generator)
        if k1 == k2:
            raise ValueError("C2 \\ C1 is empty")
        if method == "auto":
            method = "subtract" if self.feasible(C1) and self.feasible(C2) else "enumerate"
        if method == "subtract":
            diff = self.weight_distribution(C2) - self.weight_distribution(C1)
            if min(diff) < 0:
                raise AssertionError("negative count in nested distribution difference")
            return diff
        if method != "enumerate":
            raise ValueError(f"unknown method {method!r}")
        if k2 > self.budget:
            raise BudgetExceeded(f"coset enumeration needs {k2} dimensions, budget {self.budget}")
        basis = complement_basis(C2, C1)
        counts = projective_counts(C2.field, basis, k2 - k1, self.threads, self.chunk)
        self.enumerated_words += C2.field.order**k2
        return tuple(int(c) for c in counts)

    def coset_min_weight(self, C2: LinearCode, C1: LinearCode, method: str = "auto") -> int:
        counts = self.coset_distribution(C2, C1, method)
        return next(w for w, c in enumerate(counts) if w and c)


def complement_basis(C2: LinearCode, C1: LinearCode) -> np.ndarray:
    """Basis of ``C2`` whose trailing rows span ``C1``."""
    F = C2.field
    base = rref(F, C1.generator)[0] if C1.k else np.zeros((0, C2.n), np.int64)
    extra = []
    current = base
    for row in rref(F, C2.generator)[0]:
        trial = np.vstack([current, row[None, :]])
        if rank(F, trial) > current.shape[0]:
            extra.append(row)
            current = trial
    return np.vstack(extra + [base]) if extra else base


# Module-level conveniences mirroring the oracle methods.


def weight_distribution(C: LinearCode, budget: int = DEFAULT_BUDGET, threads: int | None = None) -> WeightDistribution:
    return Oracle(budget, threads).weight_distribution(C)


def min_weight(C: LinearCode, budget: int = DEFAULT_BUDGET, threads: int | None = None) -> int:
    return Oracle(budget, threads).min_weight(C)


def coset_min_weight(C2: LinearCode, C1: LinearCode, budget: int = DEFAULT_BUDGET, threads: int | None = None) -> int:
    return Oracle(budget, threads).coset_min_weight(C2, C1)


def dual_distance_oracle(C: LinearCode, budget: int = DEFAULT_BUDGET, threads: int | None = None) -> int:
    return Oracle(budget, threads).dual_distance(C)
