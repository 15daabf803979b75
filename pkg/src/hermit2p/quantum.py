"""Quantum code parameters from nested classical codes.

Quantum codes are parameter records only.  Three constructions are
supported:

* ``css-sym``: ``C1^perp <= C2`` over GF(q^2) gives ``[[n, k1+k2-n, d]]_{q^2}``
  with ``d = min(wt(C2 \\ C1^perp), wt(C1 \\ C2^perp))``.
* ``css-herm``: a Hermitian self-orthogonal ``C`` gives
  ``[[n, n-2k, wt(C^perpH \\ C)]]_q``.
* ``css-asym``: as ``css-sym`` but keeping both set-difference weights,
  ``d_z`` the larger and ``d_x`` the smaller.

Without an oracle the distances are lower bounds taken from the designed
distances of the inputs and purity is ``"unknown"``; an :class:`Oracle`
replaces them by exact values.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .codes import (
    LinearCode,
    dual_contained_predicate,
    evaluate_code,
    hermitian_dual,
    is_self_orth_hermitian,
    is_subcode,
    nullspace_dual,
    rank,
)
from .curve import evaluation_set
from .oracle import Oracle
from .params import dimension, one_point_distance, r_range, two_point_distance
from .rrspace import TwoPointDivisor, canonicalize_pq, rr_dim

PURITY = ("pure", "impure", "unknown")
CONSTRUCTIONS = ("css-sym", "css-herm", "css-asym")


@dataclass(frozen=True)
class QuantumCodeParams:
    n: int
    k: int
    d_z: int
    d_x: int
    field_order: int
    purity: str
    purity_note: str
    construction: str

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"negative dimension k = {self.k}")
        if not self.d_z >= self.d_x >= 1:
            raise ValueError(f"need d_z >= d_x >= 1, got {self.d_z}/{self.d_x}")
        if self.purity not in PURITY:
            raise ValueError(f"bad purity {self.purity!r}")
        if self.construction not in CONSTRUCTIONS:
            raise ValueError(f"bad construction {self.construction!r}")

    @property
    def symmetric(self) -> bool:
        return self.d_z == self.d_x

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> QuantumCodeParams:
        return cls(**{name: data[name] for name in cls.__dataclass_fields__})

    def __str__(self) -> str:
        d = f"{self.d_z}" if self.construction != "css-asym" else f"{self.d_z}/{self.d_x}"
        return f"[[{self.n},{self.k},{d}]]_{self.field_order}"


@dataclass(frozen=True)
class SearchRecord:
    G1: TwoPointDivisor
    G2: TwoPointDivisor
    k: int
    d_z: int
    d_x: int | None = None
    improvement: int | None = None

    def sort_key(self) -> tuple:
        return (self.G1.deg, self.G2.deg, self.G1.i, self.G1.j, self.G2.i, self.G2.j)


@dataclass(frozen=True)
class PurityCheck:
    dual_side_distance: int
    d_r: int
    pure: bool


def designed_distance(C: LinearCode) -> int:
    """Goppa lower bound ``n - deg G`` when the divisor is known, else 1."""
    if C.k == 0:
        raise ValueError("the zero code has no minimum distance")
    if C.divisor is None:
        return 1
    return max(1, C.n - C.divisor.deg)


def designed_dual_distance(C: LinearCode) -> int:
    """Lower bound ``deg G - 2g + 2`` on the dual distance of ``C_L(D, G)``."""
    if C.divisor is None:
        return 1
    q = round((C.n + 1) ** (1 / 3))
    g = q * (q - 1) // 2
    return max(1, C.divisor.deg - 2 * g + 2)


def _coset_pair(C1: LinearCode, C2: LinearCode, dual, oracle: Oracle) -> tuple[int, int, int, int]:
    """``wt(C2 \\ C1^perp), wt(C1 \\ C2^perp), d1, d2``."""
    a = oracle.coset_min_weight(C2, dual(C1))
    b = oracle.coset_min_weight(C1, dual(C2))
    return a, b, oracle.min_weight(C1), oracle.min_weight(C2)


def _css(C1: LinearCode, C2: LinearCode, oracle: Oracle | None, hermitian: bool, asym: bool) -> QuantumCodeParams:
    if C1.field is not C2.field or C1.n != C2.n:
        raise ValueError("codes must share length and field")
    if C1.k == 0 or C2.k == 0:
        raise ValueError("CSS inputs must be nonzero codes")
    dual = hermitian_dual if hermitian else nullspace_dual
    if not is_subcode(dual(C1), C2):
        raise ValueError("nesting violated: C1^perp is not contained in C2")
    n = C1.n
    k1, k2 = rank(C1.field, C1.generator), rank(C2.field, C2.generator)
    k = k1 + k2 - n
    if k < 0:
        raise ValueError(f"negative quantum dimension {k}")
    construction = "css-asym" if asym else "css-sym"
    Q = C1.field.order
    if oracle is None:
        b1 = designed_distance(C1) if k1 else 1
        b2 = designed_distance(C2) if k2 else 1
        hi, lo = max(b1, b2), min(b1, b2)
        if not asym:
            hi = lo
        return QuantumCodeParams(n, k, hi, lo, Q, "unknown", "designed-distance lower bounds; no oracle", construction)
    if k == 0:
        d1, d2 = oracle.min_weight(C1), oracle.min_weight(C2)
        hi, lo = (max(d1, d2), min(d1, d2)) if asym else (min(d1, d2),) * 2
        return QuantumCodeParams(n, 0, hi, lo, Q, "pure", "k = 0 codes are pure by convention", construction)
    a, b, d1, d2 = _coset_pair(C1, C2, dual, oracle)
    if asym:
        hi, lo = max(a, b), min(a, b)
        pure = sorted((a, b)) == sorted((d1, d2))
        note = f"coset weights {{{a},{b}}} vs code distances {{{d1},{d2}}}"
    else:
        hi = lo = min(a, b)
        pure = lo == min(d1, d2)
        note = f"min coset weight {lo} vs min code distance {min(d1, d2)}"
    return QuantumCodeParams(n, k, hi, lo, Q, "pure" if pure else "impure", note, construction)


def css_symmetric(C1: LinearCode, C2: LinearCode, oracle: Oracle | None = None) -> QuantumCodeParams:
    return _css(C1, C2, oracle, hermitian=False, asym=False)


def css_asymmetric(
    C1: LinearCode, C2: LinearCode, oracle: Oracle | None = None, inner: str = "euclidean"
) -> QuantumCodeParams:
    if inner not in ("euclidean", "hermitian"):
        raise ValueError(f"unknown inner product {inner!r}")
    return _css(C1, C2, oracle, hermitian=inner == "hermitian", asym=True)


def css_hermitian(C: LinearCode, oracle: Oracle | None = None) -> QuantumCodeParams:
    """q-ary code from a Hermitian self-orthogonal code over GF(q^2)."""
    if not is_self_orth_hermitian(C):
        raise ValueError("code is not Hermitian self-orthogonal")
    n = C.n
    kc = rank(C.field, C.generator)
    e = round(C.field.order**0.5)
    k = n - 2 * kc
    if kc == 0:
        return QuantumCodeParams(n, n, 1, 1, e, "pure", "zero code: no constraint", "css-herm")
    if oracle is None:
        d = designed_dual_distance(C)
        return QuantumCodeParams(n, k, d, d, e, "unknown", "dual designed-distance lower bound; no oracle", "css-herm")
    Hd = hermitian_dual(C)
    dperp = oracle.min_weight(Hd)
    if k == 0:
        return QuantumCodeParams(n, 0, dperp, dperp, e, "pure", "k = 0 codes are pure by convention", "css-herm")
    d = oracle.coset_min_weight(Hd, C)
    note = f"wt(C^perpH \\ C) = {d} vs d^perpH = {dperp}"
    return QuantumCodeParams(n, k, d, d, e, "pure" if d == dperp else "impure", note, "css-herm")


# -- the two-point AQECC family ---------------------------------------------------------


def _check_pair(q: int, r1: int, r2: int) -> None:
    top = q * (q + 1)
    if not 0 <= r1 <= r2 <= top:
        raise ValueError(f"need 0 <= r1 <= r2 <= {top}, got r1={r1}, r2={r2}")


def bigcss_divisors(q: int, r1: int, r2: int) -> tuple[TwoPointDivisor, TwoPointDivisor]:
    _check_pair(q, r1, r2)
    G1 = TwoPointDivisor(q**3 - r1 + 1 - (q + 1), q - 1)
    G2 = TwoPointDivisor(q**3 - r2 + 1, -2)
    if not dual_contained_predicate(G1, G2, q):
        # Guaranteed on the whole grid only for q >= 4; below that the
        # pair is genuinely not nested once r1 + r2 > q^3 - q^2 + 3.
        if q >= 4:
            raise AssertionError(f"nesting predicate fails for {G1}, {G2}")
        raise ValueError(f"C1^perp is not contained in C2 for q={q}, r1={r1}, r2={r2} ({G1}, {G2})")
    return G1, G2


def bigcss_pair(q: int, r1: int, r2: int) -> tuple[LinearCode, LinearCode]:
    D = evaluation_set(q)
    G1, G2 = bigcss_divisors(q, r1, r2)
    return evaluate_code(D, G1), evaluate_code(D, G2)


def purity_check_bigcss(q: int, r: int) -> PurityCheck:
    dual_side = q**3 - 1 - r - (q - 2) * (q + 1)
    d = two_point_distance(q, r)
    return PurityCheck(dual_side, d, dual_side > d)


def two_point_aqecc(q: int, r1: int, r2: int, oracle: Oracle | None = None) -> QuantumCodeParams:
    """AQECC from the optimal two-point pair with design parameters ``r1 <= r2``."""
    bigcss_divisors(q, r1, r2)
    if oracle is not None:
        C1, C2 = bigcss_pair(q, r1, r2)
        return css_asymmetric(C1, C2, oracle)
    n = q**3 - 1
    k = q**3 - q * (q - 1) - (r1 + r2) + 1
    da, db = two_point_distance(q, r1), two_point_distance(q, r2)
    checks = [purity_check_bigcss(q, r) for r in (r1, r2)]
    if all(c.pure for c in checks):
        purity = "pure"
        note = "dual-side distances " + ", ".join(f"{c.dual_side_distance} > {c.d_r}" for c in checks)
    else:
        purity = "unknown"
        note = "dual-side distance does not exceed d(r); purity not decided by formula"
    return QuantumCodeParams(n, k, max(da, db), min(da, db), q * q, purity, note, "css-asym")


def one_point_aqecc(q: int, r1: int, r2: int) -> QuantumCodeParams:
    """Parameters of the analogous construction from one-point codes."""
    _check_pair(q, r1, r2)
    n = q**3 - 1
    k = dimension(q, r1) + dimension(q, r2) - n
    da, db = one_point_distance(q, r1), one_point_distance(q, r2)
    return QuantumCodeParams(
        n, k, max(da, db), min(da, db), q * q, "unknown", "one-point comparison record", "css-asym"
    )


def aqecc_grid(q: int) -> list[tuple[int, int]]:
    """Pairs ``r1 <= r2`` for which the family's nesting holds."""
    return [
        (r1, r2)
        for r1 in r_range(q)
        for r2 in r_range(q)
        if r1 <= r2 and (q >= 4 or r1 + r2 <= q**3 - q**2 + 3)
    ]


# -- nested-pair search -------------------------------------------------------------


def _pairs(q: int, max_deg: int):
    for deg1 in range(max_deg + 1):
        for b1 in range(q + 1):
            G1 = TwoPointDivisor(deg1 + b1, -b1)
            for di in range(max_deg - deg1 + 1):
                for dj in range(max_deg - deg1 - di + 1):
                    if di or dj:
                        yield G1, TwoPointDivisor(G1.i + di, G1.j + dj)


def search_nested_pairs(q: int, max_deg: int | None = None, oracle: Oracle | None = None) -> list[SearchRecord]:
    """All nested pairs ``G1 <= G2`` up to simultaneous equivalence.

    ``G1`` is canonical (``iP - jQ`` with ``0 <= j <= q``) and ``G2`` is
    expressed in the same frame.  ``k = l(G2) - l(G1)`` and
    ``d_z = n - deg G2``; ``d_x = wt(C_Omega(G1) \\ C_Omega(G2))`` is only
    filled in by the oracle.
    """
    n = q**3 - 1
    if max_deg is None:
        max_deg = q * (q - 1)
    if max_deg >= n:
        raise ValueError(f"max_deg must be below n = {n}")
    ell: dict[TwoPointDivisor, int] = {}

    def dim(G: TwoPointDivisor) -> int:
        key = canonicalize_pq(G, q)
        if key not in ell:
            ell[key] = rr_dim(key, q)
        return ell[key]

    D = evaluation_set(q) if oracle is not None else None
    omega: dict[TwoPointDivisor, object] = {}

    def omega_dist(G: TwoPointDivisor):
        if G not in omega:
            omega[G] = oracle.weight_distribution(nullspace_dual(evaluate_code(D, G)))
        return omega[G]

    out = []
    for G1, G2 in _pairs(q, max_deg):
        k = dim(G2) - dim(G1)
        if k == 0:
            continue
        d_x = None
        if oracle is not None:
            diff = omega_dist(G1) - omega_dist(G2)
            d_x = next(w for w, c in enumerate(diff) if w and c)
        out.append(SearchRecord(G1, G2, k, n - G2.deg, d_x))
    out.sort(key=SearchRecord.sort_key)
    return out
