"""The verification registry: every check runs and passes at a small
ceiling, reports serialize to the documented schema."""

import pytest

from eulerian_gamma.checks import CHECKS, run_check, run_checks

EXPECTED_IDS = {
    "thm-1.1", "thm-1.2", "thm-1.3", "thm-1.4", "thm-1.5",
    "lemma-1.7", "lemma-2.1", "lemma-2.2",
    "prop-3.2", "prop-3.4", "prop-3.5",
    "f-bijection", "lemma-4.1", "lemma-4.2",
    "prop-5.1", "prop-5.2",
    "eq-recurrence2", "eq-qmul", "eq-fix-maj", "eq-cycle-bis",
    "eq-exp-fixed", "eq-sw3",
    "remark-1.8", "remark-3.7-negative", "table-1",
}


def test_registry_is_complete():
    assert set(CHECKS) == EXPECTED_IDS


@pytest.mark.parametrize("check_id", sorted(EXPECTED_IDS))
def test_each_check_passes_at_small_ceiling(check_id):
    report = run_check(check_id, max_n=5)
    assert report.passed, report.witnesses


def test_report_schema():
    report = run_check("table-1", max_n=4)
    data = report.as_dict()
    assert set(data) == {
        "check_id", "n_range", "passed", "witnesses", "elapsed_ms", "notes",
    }
    assert data["check_id"] == "table-1"
    assert data["n_range"] == [1, 4]
    assert data["passed"] is True
    assert data["witnesses"] == []
    assert isinstance(data["elapsed_ms"], float)


def test_ceiling_clamps_requested_max_n():
    report = run_check("remark-3.7-negative", max_n=9)
    assert report.n_range == (1, 3)


def test_unknown_id_raises():
    with pytest.raises(KeyError):
        run_check("thm-9.9")


def test_run_checks_preserves_order():
    ids = ["table-1", "eq-qmul"]
    reports = run_checks(ids, max_n=4)
    assert [r.check_id for r in reports] == ids
