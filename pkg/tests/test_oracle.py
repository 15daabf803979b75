from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from golden import MIN_WEIGHTS_Q3, WEIGHTS_Q2
from hermit2p.codes import LinearCode, evaluate_code, hermitian_dual, nullspace_dual
from hermit2p.curve import evaluation_set
from hermit2p.oracle import (
    BudgetExceeded,
    Oracle,
    WeightDistribution,
    complement_basis,
    default_threads,
    macwilliams,
    min_weight,
)
from hermit2p.params import r_range, two_point_distance, two_point_divisor
from hermit2p.rrspace import TwoPointDivisor as T
from strategies import nested_pairs, random_codes


def naive_distribution(C: LinearCode) -> tuple[int, ...]:
    F = C.field
    counts = [0] * (C.n + 1)
    for msg in itertools.product(range(F.order), repeat=C.k):
        word = np.zeros(C.n, dtype=np.int64)
        for m, row in zip(msg, C.generator):
            word = F.vadd(word, F.vmul(m, row))
        counts[int(np.count_nonzero(word))] += 1
    return tuple(counts)


def test_q2_golden_distributions():
    o = Oracle()
    for r, counts in WEIGHTS_Q2.items():
        W = o.weight_distribution(evaluate_code(2, two_point_divisor(2, r)))
        assert W.counts == counts


def test_q2_example():
    C = evaluate_code(2, T(6, -2))
    W = Oracle().weight_distribution(C)
    assert W.size == 256 and W.min_weight() == 3
    assert min_weight(C) == 3
    assert Oracle().dual_distance(C) == min_weight(evaluate_code(2, T(2, 1)))


@pytest.mark.parametrize("r", sorted(MIN_WEIGHTS_Q3))
def test_q3_golden_min_weights(r):
    C = evaluate_code(3, two_point_divisor(3, r))
    W = Oracle().weight_distribution(C)
    k, d, count = MIN_WEIGHTS_Q3[r]
    assert (C.k, W.min_weight(), W.counts[d]) == (k, d, count)


@pytest.mark.parametrize("r", list(r_range(2)))
def test_direct_vs_macwilliams_q2(r):
    C = evaluate_code(2, two_point_divisor(2, r))
    o = Oracle(budget=7)
    direct = o.weight_distribution(C)
    if C.k < C.n:
        dual = nullspace_dual(C)
        assert macwilliams(Oracle(budget=7).weight_distribution(dual), C.n, dual.k, 4) == direct


@settings(max_examples=150)
@given(random_codes())
def test_enumeration_matches_naive(C):
    assert Oracle().weight_distribution(C).counts == naive_distribution(C)


@settings(max_examples=150)
@given(random_codes())
def test_macwilliams_involution(C):
    W = Oracle().weight_distribution(C)
    dual = macwilliams(W)
    assert macwilliams(dual) == W
    if C.k < C.n:
        assert dual == Oracle().weight_distribution(nullspace_dual(C))


def test_macwilliams_rejects_garbage():
    with pytest.raises(ValueError):
        macwilliams(WeightDistribution((1, 2, 2), 4))
    with pytest.raises(ValueError):
        macwilliams(WeightDistribution((1, 3, 0), 2))


@settings(max_examples=100)
@given(nested_pairs())
def test_coset_methods_agree(pair):
    C1, C2 = pair
    if C1.k == C2.k:
        return
    o = Oracle()
    sub = o.coset_distribution(C2, C1, "subtract")
    enum = o.coset_distribution(C2, C1, "enumerate")
    assert sub == enum
    assert min(sub) >= 0
    assert o.coset_min_weight(C2, C1) >= o.min_weight(C2)


def test_complement_basis():
    C2 = evaluate_code(3, T(10, -1))
    C1 = evaluate_code(3, T(7, -1))
    B = complement_basis(C2, C1)
    assert B.shape[0] == C2.k
    from hermit2p.codes import same_code

    assert same_code(LinearCode(C2.field, B[-C1.k :]), C1)


@settings(max_examples=60)
@given(random_codes(max_n=10, max_k=6), st.integers(1, 4), st.sampled_from([1, 2, 5, 256]))
def test_partition_determinism(C, threads, chunk):
    base = Oracle(threads=1).weight_distribution(C)
    assert Oracle(threads=threads, chunk=chunk).weight_distribution(C) == base


def test_threads_env(monkeypatch):
    monkeypatch.setenv("HERMIT2P_THREADS", "3")
    assert default_threads() == 3
    monkeypatch.setenv("HERMIT2P_THREADS", "0")
    with pytest.raises(ValueError):
        default_threads()


def test_budget():
    C = evaluate_code(3, two_point_divisor(3, 12))  # [26, 12]
    o = Oracle(budget=9)
    assert not o.feasible(C)
    with pytest.raises(BudgetExceeded):
        o.weight_distribution(C)
    with pytest.raises(ValueError):
        o.min_weight(LinearCode.zero(C.field, 26))


def test_cache_keyed_by_row_space():
    o = Oracle()
    C = evaluate_code(2, T(6, -2))
    o.weight_distribution(C)
    before = o.enumerated_words
    shuffled = LinearCode(C.field, C.generator[::-1])
    o.weight_distribution(shuffled)
    assert o.enumerated_words == before


@pytest.mark.parametrize("q", [2, 3])
def test_euclidean_and_hermitian_dual_distances(q):
    o = Oracle()
    D = evaluation_set(q)
    for r in r_range(q):
        C = evaluate_code(D, two_point_divisor(q, r))
        if C.k == C.n or not o.feasible(C):
            continue
        assert o.min_weight(nullspace_dual(C)) == o.min_weight(hermitian_dual(C))


def test_formula_anchor_q3():
    o = Oracle()
    for r in range(8):
        assert o.min_weight(evaluate_code(3, two_point_divisor(3, r))) == two_point_distance(3, r)
