import json

from hessencount import verify
from hessencount.verify import (
    CheckResult,
    interpolated_poincare,
    interpolation_points,
    split_jordan_types,
    verify_suite,
)
from hessencount.algebra import T


def test_suite_small_passes():
    report = verify_suite(3, [2])
    assert report.passed
    assert len(report.checks) == 11
    assert all(c.cells > 0 for c in report.checks)
    json.dumps(report.to_json())


def test_suite_n4_two_fields_threads():
    report = verify_suite(4, [2, 3], workers=4)
    assert report.passed
    serial = verify_suite(4, [2, 3])
    assert serial.to_json() == report.to_json()


def test_suite_vacuous_cases():
    empty = verify_suite(3, [])
    assert empty.passed and "no fields tested" in empty.notice
    main = next(c for c in empty.checks if c.name == "main_theorem")
    assert main.cells == 0 and main.note == "no fields tested"
    zero = verify_suite(0, [2])
    assert zero.passed and zero.checks == [] and "vacuous" in zero.notice


def test_failures_are_data():
    res = CheckResult("demo")
    for k in range(50):
        res.fail(m=(1, 2), value=T, k=k)
    assert not res.passed
    assert len(res.failures) == verify.MAX_FAILURES
    assert res.failures[0] == {"m": [1, 2], "value": "t", "k": 0}
    assert res.line().startswith("FAIL")


def test_counterexample_payload_is_reported(monkeypatch):
    # sabotage the formula side: the check must report, not raise
    monkeypatch.setattr(verify, "count_points", lambda m, tau, q: -1)
    res = verify.check_main_theorem([(2, 2)])
    assert not res.passed
    assert set(res.failures[0]) == {"m", "type", "q", "formula", "bruteforce"}


def test_interpolation_helpers():
    assert interpolation_points(3, 4) == [3, 4, 5, 7]
    assert split_jordan_types(2) == [((1,), (1,)), ((2,),), ((1, 1),)]
    poly, samples = interpolated_poincare((2, 3, 3), ((1,), (1,), (1,)))
    assert poly == 1 + 4 * T + T**2
    assert [q for q, _ in samples] == [3, 4, 5, 7]
    assert samples[0] == (3, 22)
