"""Formula-versus-brute-force verification suites for small ``q``."""

from __future__ import annotations

from dataclasses import dataclass, field

from .codes import (
    evaluate_code,
    formula_dual_code,
    hermitian_dual,
    hermitian_self_orth_predicate,
    is_self_orth_hermitian,
    nullspace_dual,
    rank,
    same_code,
)
from .curve import evaluation_set
from .oracle import BudgetExceeded, Oracle
from .params import decompose_r, dual_distance_omega, r_range, two_point_distance, two_point_divisor
from .quantum import aqecc_grid, search_nested_pairs, two_point_aqecc
from .rrspace import TwoPointDivisor, rr_dim

SUITES = ("duality", "distance", "hermitian", "aqecc")


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    skipped: int = 0
    mismatches: list[str] = field(default_factory=list)

    def record(self, ok: bool, detail: str) -> None:
        self.checked += 1
        if not ok:
            self.mismatches.append(detail)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def lines(self) -> list[str]:
        status = "PASS" if self.ok else "FAIL"
        out = [f"{status} {self.name}: {self.checked} checked, {len(self.mismatches)} mismatches, {self.skipped} skipped"]
        out.extend(f"  mismatch: {m}" for m in self.mismatches)
        return out


def canonical_divisors(q: int, max_deg: int, min_deg: int = 0):
    for deg in range(min_deg, max_deg + 1):
        for b in range(q + 1):
            yield TwoPointDivisor(deg + b, -b)


def check_duality(q: int) -> SuiteResult:
    res = SuiteResult(f"duality q={q}")
    D = evaluation_set(q)
    for G in canonical_divisors(q, D.n - 1):
        C = evaluate_code(D, G)
        r = rank(D.field, C.generator)
        res.record(r == C.k == rr_dim(G, q), f"{G}: rank {r}, basis size {rr_dim(G, q)}")
        res.record(same_code(formula_dual_code(D, G), nullspace_dual(C)), f"{G}: formula dual differs from nullspace dual")
    return res


def check_distance(q: int, oracle: Oracle) -> SuiteResult:
    res = SuiteResult(f"distance q={q}")
    D = evaluation_set(q)
    K = TwoPointDivisor((q - 2) * (q + 1), 0)
    for r in r_range(q):
        C = evaluate_code(D, two_point_divisor(q, r))
        if not oracle.feasible(C):
            res.skipped += 1
            continue
        got, want = oracle.min_weight(C), two_point_distance(q, r)
        res.record(got == want, f"r={r}: oracle d={got}, formula d(r)={want}")
        dec = decompose_r(q, r)
        B = TwoPointDivisor(dec.c * (q + 1) - dec.a, -q)
        CB = evaluate_code(D, K + B)
        got, want = oracle.dual_distance(CB), dual_distance_omega(q, B)
        res.record(got == want, f"B={B}: oracle dual distance {got}, formula {want}")
    return res


def check_hermitian(q: int, oracle: Oracle | None = None) -> SuiteResult:
    res = SuiteResult(f"hermitian q={q}")
    D = evaluation_set(q)
    top = q * q - 2
    for j in range(1, top + 1):
        for i in range(j, top + 1):
            G = TwoPointDivisor(i, -j)
            assert hermitian_self_orth_predicate(G, q)
            res.record(is_self_orth_hermitian(evaluate_code(D, G)), f"{G}: Gram matrix nonzero")
    if oracle is not None:
        for r in r_range(q):
            C = evaluate_code(D, two_point_divisor(q, r))
            if not oracle.feasible(C) or C.k == C.n:
                res.skipped += 1
                continue
            de = oracle.min_weight(nullspace_dual(C))
            dh = oracle.min_weight(hermitian_dual(C))
            res.record(de == dh, f"r={r}: Euclidean dual distance {de} != Hermitian {dh}")
    return res


def check_aqecc(q: int, oracle: Oracle) -> SuiteResult:
    res = SuiteResult(f"aqecc q={q}")
    for r1, r2 in aqecc_grid(q):
        formula = two_point_aqecc(q, r1, r2)
        try:
            exact = two_point_aqecc(q, r1, r2, oracle)
        except BudgetExceeded:
            res.skipped += 1
            continue
        same = (formula.k, formula.d_z, formula.d_x) == (exact.k, exact.d_z, exact.d_x)
        res.record(same, f"r1={r1}, r2={r2}: formula {formula}, oracle {exact}")
        if formula.purity != "unknown":
            res.record(formula.purity == exact.purity, f"r1={r1}, r2={r2}: purity {formula.purity} vs oracle {exact.purity}")
    # d_z of the search is the Goppa bound on the L-side quotient
    D = evaluation_set(q)
    n = D.n
    dist = {}

    def L(G):
        if G not in dist:
            dist[G] = oracle.weight_distribution(evaluate_code(D, G))
        return dist[G]

    for rec in search_nested_pairs(q, oracle=oracle):
        diff = L(rec.G2) - L(rec.G1)
        w = next(i for i, c in enumerate(diff) if i and c)
        res.record(w >= rec.d_z == n - rec.G2.deg, f"{rec.G1},{rec.G2}: L-side quotient weight {w} < d_z {rec.d_z}")
    return res


def run_suites(q: int, suites: list[str], oracle: Oracle) -> list[SuiteResult]:
    out = []
    for name in suites:
        if name == "duality":
            out.append(check_duality(q))
        elif name == "distance":
            out.append(check_distance(q, oracle))
        elif name == "hermitian":
            out.append(check_hermitian(q, oracle))
        elif name == "aqecc":
            out.append(check_aqecc(q, oracle))
        else:
            raise ValueError(f"unknown suite {name!r}")
    return out
