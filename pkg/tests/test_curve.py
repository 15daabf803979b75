from __future__ import annotations

from collections import Counter

import pytest

from hermit2p.curve import affine_points, curve_constants, evaluation_set, on_curve


def test_q2_points():
    # GF(4) encodings: 0, 1, w = 2, w^2 = 3
    pts = [(p.x, p.y) for p in affine_points(2)]
    assert pts == [(0, 0), (0, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)]
    D = evaluation_set(2)
    assert D.n == 7 and (D.points[0].x, D.points[0].y) == (0, 1)


@pytest.mark.parametrize("q,n", [(2, 7), (3, 26), (4, 63), (8, 511)])
def test_sizes_and_fibres(q, n):
    D = evaluation_set(q)
    assert len(D) == n == q**3 - 1
    assert all(on_curve(D.field, q, p.x, p.y) for p in D.points)
    # every x has exactly q points above it
    fibres = Counter(p.x for p in affine_points(q))
    assert set(fibres.values()) == {q} and len(fibres) == q * q
    assert list(D.xs) == sorted(D.xs)
    assert len(set(zip(D.xs.tolist(), D.ys.tolist()))) == n


@pytest.mark.parametrize("q,g,n,k", [(2, 1, 7, 0), (3, 3, 26, 4), (4, 6, 63, 10), (8, 28, 511, 54)])
def test_constants(q, g, n, k):
    c = curve_constants(q)
    assert (c.genus, c.n, c.deg_K, c.deg_H) == (g, n, k, q + 1)
