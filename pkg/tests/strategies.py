from __future__ import annotations

import numpy as np
from hypothesis import strategies as st

from hermit2p.codes import LinearCode
from hermit2p.gf import field_of_order


@st.composite
def random_codes(draw, orders=(2, 3, 4, 5, 9), max_n=8, max_k=5):
    F = field_of_order(draw(st.sampled_from(orders)))
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, min(n, max_k)))
    rows = draw(st.lists(st.lists(st.integers(0, F.order - 1), min_size=n, max_size=n), min_size=k, max_size=k))
    return LinearCode.from_rows(F, np.array(rows), n=n)


@st.composite
def nested_pairs(draw, **kw):
    """``(C1, C2)`` with ``C1`` spanned by a subset of the rows of ``C2``."""
    C2 = draw(random_codes(**kw))
    keep = draw(st.lists(st.booleans(), min_size=C2.k, max_size=C2.k))
    rows = C2.generator[np.array(keep, dtype=bool)]
    return LinearCode.from_rows(C2.field, rows, n=C2.n), C2
