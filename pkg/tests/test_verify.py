import json

import pytest

from fishburn.errors import DomainError
from fishburn.verify import (
    SUITE_NAMES,
    _gen_ballots,
    _is_modasc_scan,
    _subsequence_patterns,
    verify_suite,
)
from fishburn.words import is_modasc


def test_unknown_suite():
    with pytest.raises(DomainError):
        verify_suite("nope")


def test_suite_names_exposed():
    assert "conjecture-ds" in SUITE_NAMES
    assert "psi-2213-experiment" in SUITE_NAMES
    assert "all" in SUITE_NAMES


@pytest.mark.parametrize("suite", ["core", "patterns", "burge", "bijections",
                                   "conjecture-ds", "transport"])
def test_suites_pass_at_low_size(suite):
    report = verify_suite(suite, n_max=5)
    assert report.passed, [r.line() for r in report.results if not r.passed]
    assert report.results


def test_experiment_suite_is_report_only():
    report = verify_suite("psi-2213-experiment", n_max=5)
    assert all(not r.gating for r in report.results)
    assert report.passed  # gating checks vacuously pass


def test_report_json_shape():
    report = verify_suite("core", n_max=3)
    payload = json.loads(report.to_json())
    assert payload["suite"] == "core"
    assert payload["passed"] is True
    assert all({"identity", "n_range", "passed"} <= set(c) for c in payload["checks"])


def test_modasc_scan_agrees_with_predicate():
    from fishburn.enumeration import gen_cayley

    for n in range(6):
        for x in gen_cayley(n):
            assert _is_modasc_scan(x) == is_modasc(x)


def test_ballot_generator_counts():
    # ordered set partitions are counted by the Fubini numbers
    assert [sum(1 for _ in _gen_ballots(n)) for n in range(6)] == [1, 1, 3, 13, 75, 541]


def test_subsequence_oracle(w):
    pats = _subsequence_patterns(w("1212"), 3)
    assert w("212") in pats
    assert w("121") in pats
    assert w("11") in pats
    assert w("321") not in pats
