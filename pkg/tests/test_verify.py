import json

import pytest

from detinv.geometry import Space
from detinv.polyring import mono
from detinv.verify import (
    FAIL,
    PASS,
    SKIPPED,
    Check,
    check_closure,
    check_degeneration,
    check_les,
    check_locally_closed,
    check_reindex,
    check_rho_vanishing,
    check_totals,
    check_weight_suite,
    les_defect,
    qcomb_checks,
    recover_map_ranks,
    run_all,
)
from detinv.geometry import Case


def test_status_follows_witness():
    assert Check("x", "general").status == PASS
    assert Check("x", "general", witness={"a": 1}).status == FAIL
    assert Check("x", "general", skipped=True).status == SKIPPED


def test_degeneration_examples():
    assert check_degeneration(Space.general(2, 2), 1).status == PASS
    assert check_degeneration(Space.symmetric(5), 2).status == PASS
    for space in (Space.general(3, 2), Space.skew(5), Space.symmetric(4)):
        assert check_degeneration(space, space.p_max).status == PASS


def test_reindex_skips_dense_orbit():
    assert check_reindex(Space.general(2, 2), 2).status == SKIPPED
    assert check_reindex(Space.general(2, 2), 1).status == PASS


def test_rho_vanishing_examples():
    assert check_rho_vanishing(Space.general(3, 2), 1).status == PASS
    assert check_rho_vanishing(Space.skew(6), 3).status == PASS


def test_les_general_identity():
    assert les_defect(Space.general(2, 2), 1) == 0
    assert check_les(Space.symmetric(4), 2).status == PASS
    assert les_defect(Space.symmetric(4), 2) == 0


@pytest.mark.parametrize("n", [3, 5, 7])
def test_les_symmetric_defect_slot(n):
    delta = les_defect(Space.symmetric(n), 2)
    assert delta == -(mono(2 * n) + mono(2 * n + 1))
    assert recover_map_ranks(delta) == {2 * n: 1}
    check = check_les(Space.symmetric(n), 2)
    assert check.status == PASS
    assert check.detail["regime"] == "inequality"
    assert check.detail["map_ranks"] == {str(2 * n): 1}


def test_recover_map_ranks_rejects_impossible():
    assert recover_map_ranks(-mono(3)) is None
    assert recover_map_ranks(-(mono(3) + mono(4))) == {3: 1}


def test_totals_examples():
    assert check_totals(Space.general(3, 3), 1).status == PASS
    assert check_totals(Space.skew(6), 2).status == PASS
    assert check_totals(Space.symmetric(4), 2).status == PASS
    outside = check_totals(Space.symmetric(3), 2)
    assert outside.status == PASS and outside.detail["regime"] == "inequality"


def test_locally_closed_examples():
    for space, p in [(Space.general(2, 2), 1), (Space.skew(5), 1), (Space.symmetric(5), 1)]:
        check = check_locally_closed(space, p)
        assert check.status == PASS and check.detail["regime"] == "identity"
    assert check_locally_closed(Space.general(2, 2), 2).status == PASS


def test_weight_suite_examples():
    assert check_weight_suite(2, 2, 1).status == PASS
    assert check_weight_suite(3, 3, 0).status == PASS
    c = check_weight_suite(4, 4, 2)
    assert c.status == PASS
    assert set(c.detail["same_weight_slots"].values()) == {1}
    assert check_weight_suite(3, 3, 3).status == SKIPPED


def test_closure_and_qcomb_checks():
    assert check_closure(Case.GENERAL, 3, 2).status == PASS
    assert all(c.status == PASS for c in qcomb_checks())


def test_run_all_small_bounds():
    report = run_all(1, 1)
    assert report.ok
    assert report.summary["total"] > 0


def test_run_all_sorted_and_deterministic():
    a = run_all(3, 3, ["degeneration", "les"])
    b = run_all(3, 3, ["les", "degeneration"])
    assert a.to_json() == b.to_json()
    keys = [c.sort_key() for c in a.checks]
    assert keys == sorted(keys)


def test_run_all_reports_symmetric_slot():
    report = run_all(5, 5, ["les"])
    assert report.ok
    (c,) = [c for c in report.checks if (c.case, c.n, c.p) == ("symmetric", 5, 2)]
    assert c.detail["map_ranks"] == {"10": 1}


def test_run_all_rejects_bad_input():
    with pytest.raises(ValueError):
        run_all(0, 3)
    with pytest.raises(ValueError):
        run_all(2, 2, ["nosuch"])


def test_report_json_shape():
    data = json.loads(run_all(2, 2, ["rho"]).to_json())
    assert data["summary"]["fail"] == 0
    assert {"name", "case", "n", "m", "p", "status", "witness"} <= set(data["checks"][0])
