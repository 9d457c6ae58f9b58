import json

import pytest

from phirep import verifier
from phirep.classify import is_antipalindromic, kimberling_double, parity_profile
from phirep.errors import InconsistentConjecture
from phirep.verifier import (
    CLAIMS,
    Report,
    dumps,
    run_claims,
    verify_builtins,
    verify_figures,
    verify_kimberling,
    verify_lucas_greedy,
    verify_luctofib,
    verify_min_exponent,
    verify_one_even,
    verify_one_odd,
    verify_two_odd,
)


def test_report_needs_counterexample_on_failure():
    with pytest.raises(ValueError):
        Report("x", (1, 2), False)
    r = Report("x", (1, 2), False, 7, "broken")
    assert r.line() == "FAIL x [1, 2] broken counterexample=7"
    assert Report("x", (1, 2), True, None, "ok").line() == "PASS x [1, 2] ok"


def test_report_json():
    r = Report("kimberling", (1, 10), True, None, "fine", {"count": 3}, elapsed=1.5)
    assert r.to_json() == {
        "claim_id": "kimberling",
        "range_checked": [1, 10],
        "passed": True,
        "counterexample": None,
        "details": "fine",
        "data": {"count": 3},
    }
    assert r.to_json(timing=True)["elapsed"] == 1.5


def test_kimberling_small_ranges():
    r = verify_kimberling(29)
    assert r.passed
    assert r.data["prefix"] == [1, 3, 4, 7, 8, 10, 11, 18, 19, 21, 22, 25, 26, 28, 29]
    r = verify_kimberling(10)
    assert r.passed and r.data["double_10"] == "54"
    assert r.data["double_9"] == "53-2φ"


def test_min_exponent_small():
    assert verify_min_exponent(11).passed
    assert parity_profile(5).min_exponent == -4


def test_one_even_one_odd_prefixes():
    r = verify_one_even(77)
    assert r.passed
    assert r.data["prefix"] == [1, 2, 5, 6, 12, 13, 16, 17, 30, 31, 34, 35, 41, 42, 45, 46, 77]
    r = verify_one_odd(197)
    assert r.passed
    assert r.data["prefix"] == [2, 9, 20, 27, 49, 56, 67, 74, 125, 132, 143, 150, 172, 179, 190, 197]


def test_two_odd_small():
    r = verify_two_odd(10_000)
    assert r.passed
    assert r.data["first_witness"]["3,1"] == 6
    assert r.data["first_witness"]["3,-1"] == 5
    assert r.data["realized_i"] == list(range(1, 9))
    # L(19) = 9349 <= 10^4 but the first (19,-17) witness lies above 10^4
    assert r.data["unrealized_i"] == [9]


def test_builtins_and_helpers():
    assert verify_builtins(12).passed
    assert verify_builtins(6, ["end1"]).passed
    assert verify_lucas_greedy(2_000).passed
    assert verify_luctofib(10).passed


def test_figures_error_path():
    with pytest.raises(InconsistentConjecture):
        verify_figures(1, 5)


def test_deterministic_across_job_counts():
    claims = ["expansion", "kimberling", "min_exponent", "one_even", "one_odd", "two_odd", "formulas"]
    a = dumps(run_claims(claims, max_n=3_000, jobs=1))
    b = dumps(run_claims(claims, max_n=3_000, jobs=2))
    c = dumps(run_claims(claims, max_n=3_000, jobs=1))
    assert a == b == c
    assert all(r["passed"] for r in json.loads(a))


def test_failed_report_replays(monkeypatch):
    real = verifier.lucas_subset_decompose

    def broken(m, parity, min_index=0):
        return None if m == 30 else real(m, parity, min_index)

    monkeypatch.setattr(verifier, "lucas_subset_decompose", broken)
    r = verify_one_even(100)
    assert not r.passed and r.counterexample == 31
    # replay through the classifier: 31 has exactly one even exponent
    assert parity_profile(r.counterexample).even_count == 1
    assert broken(r.counterexample - 1, "odd", 1) is None


def test_failed_kimberling_replays(monkeypatch):
    monkeypatch.setattr(verifier, "is_antipalindromic", lambda n: n != 10 and is_antipalindromic(n))
    r = verify_kimberling(50)
    assert not r.passed and r.counterexample == 10
    assert kimberling_double(10).is_integer


def test_run_claims_all_and_unknown():
    assert len(CLAIMS) == 11
    with pytest.raises(ValueError):
        run_claims(["nonsense"])


@pytest.mark.slow
def test_all_claims_default_scale_small():
    reports = run_claims(["all"], max_n=5_000, word_length=10, depth=14, margin=3, lucas_max=1_000)
    assert [r.claim_id for r in reports] == list(CLAIMS)
    assert all(r.passed for r in reports), [r.line() for r in reports if not r.passed]


def test_two_odd_gap_fails(monkeypatch):
    real = verifier.two_odd_pair
    monkeypatch.setattr(verifier, "two_odd_pair", lambda n: None if real(n) == (7, -5) else real(n))
    r = verify_two_odd(1_000)
    assert not r.passed and r.counterexample == 1_000
    assert "[3]" in r.details


@pytest.mark.slow
def test_unary_builtins_to_length_16():
    names = [n for n in verifier.UNARY_PREDICATES]
    assert verify_builtins(16, names).passed


def test_two_odd_tiny_range_is_truncated_not_failed():
    r = verify_two_odd(5)
    assert r.passed and r.data["realized_i"] == [1]
    assert "3,1" not in r.data["first_witness"]


def test_two_odd_missing_three_one_fails(monkeypatch):
    real = verifier.two_odd_pair
    monkeypatch.setattr(verifier, "two_odd_pair", lambda n: None if real(n) == (3, 1) else real(n))
    r = verify_two_odd(100)
    assert not r.passed and "(3,1)" in r.details
