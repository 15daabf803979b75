from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from hermit2p.rrspace import (
    CanonicalDivisor,
    Monomial,
    TwoPointDivisor as T,
    canonicalize_pq,
    monomial_basis,
    rr_dim,
    to_cab,
)


@pytest.mark.parametrize("text,i,j", [("35P+5Q", 35, 5), ("6P-2Q", 6, -2), ("3P", 3, 0), ("-Q", 0, -1), ("0", 0, 0), ("4Q", 0, 4)])
def test_parse_and_format(text, i, j):
    G = T.parse(text)
    assert (G.i, G.j) == (i, j)
    assert T.parse(str(G)) == G


@pytest.mark.parametrize("text", ["", "P5", "3P2Q", "x"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        T.parse(text)


def test_canonicalization_examples():
    assert canonicalize_pq(T(10, 3), 4) == T(15, -2)
    assert canonicalize_pq(T(35, 6), 8) == T(44, -3)
    assert to_cab(T(5, -1), 2) == CanonicalDivisor(2, 1, 1)
    assert to_cab(T(35, 6), 8) == CanonicalDivisor(5, 1, 3)
    assert to_cab(T(41, 4), 8) == CanonicalDivisor(6, 4, 5)


def test_basis_examples():
    assert set(monomial_basis(T(5, -1), 2)) == {Monomial(1, 0), Monomial(2, 0), Monomial(0, 1), Monomial(1, 1)}
    assert set(monomial_basis(T(6, -2), 2)) == {Monomial(2, 0), Monomial(0, 1), Monomial(1, 1), Monomial(0, 2)}
    assert rr_dim(T(6, -2), 2) == 4
    assert rr_dim(T(35, 6), 8) == 17 and rr_dim(T(35, 5), 8) == 16
    assert rr_dim(T(43, 5), 8) == 22 and rr_dim(T(41, 4), 8) == 19


@pytest.mark.parametrize("q", [2, 3, 4, 8])
def test_riemann_roch_sweep(q):
    g = q * (q - 1) // 2
    for deg in range(-3, 3 * q * q + 1):
        for b in range(q + 1):
            G = T(deg + b, -b)
            ell = rr_dim(G, q)
            if deg < 0:
                assert ell == 0
            elif deg > 2 * g - 2:
                assert ell == deg - g + 1
            else:
                assert 0 <= ell <= deg + 1


@given(st.sampled_from([2, 3, 4, 8]), st.integers(-40, 80), st.integers(-40, 40), st.integers(-5, 5))
def test_shift_invariance(q, i, j, s):
    G = T(i, j)
    H = G.shifted(s, q)
    assert H.deg == G.deg
    assert canonicalize_pq(H, q) == canonicalize_pq(G, q)
    assert rr_dim(H, q) == rr_dim(G, q)
    C = canonicalize_pq(G, q)
    assert -q <= C.j <= 0


@given(st.sampled_from([2, 3, 4]), st.integers(0, 30), st.integers(0, 4), st.integers(0, 3), st.integers(0, 3))
def test_monotone(q, deg, b, di, dj):
    b %= q + 1
    G = T(deg + b, -b)
    G2 = T(G.i + di, G.j + dj)
    assert G <= G2
    assert rr_dim(G, q) <= rr_dim(G2, q)
    if G2.j <= 0:
        # same canonical frame, so the bases are nested
        assert set(monomial_basis(G, q)) <= set(monomial_basis(G2, q))
