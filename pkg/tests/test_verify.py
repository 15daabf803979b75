from __future__ import annotations

import pytest

from hermit2p.oracle import Oracle
from hermit2p.verify import check_aqecc, check_distance, check_duality, check_hermitian, run_suites


@pytest.mark.parametrize("q", [2, 3])
def test_duality_and_hermitian_clean(q):
    for res in (check_duality(q), check_hermitian(q, Oracle())):
        assert res.ok, res.lines()
        assert res.checked > 0


def test_distance_q3_clean():
    res = check_distance(3, Oracle())
    assert res.ok and res.checked == 16 and res.skipped == 5


def test_aqecc_q3_clean():
    res = check_aqecc(3, Oracle())
    assert res.ok, res.lines()


def test_q2_reports_known_mismatch():
    res = check_distance(2, Oracle())
    assert [m.split(":")[0] for m in res.mismatches] == ["r=6", "B=8P-2Q"]
    aq = check_aqecc(2, Oracle())
    assert all("r2=6" in m for m in aq.mismatches) and aq.mismatches


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suites(2, ["nope"], Oracle())
