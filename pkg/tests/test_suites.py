import pytest

from lucas_atoms.atoms import is_polynomial
from lucas_atoms.suites import SUITES, random_specs, run_suite, suite_tasks


def test_random_specs_are_balanced_and_seeded():
    specs = random_specs(300, seed=7)
    assert specs == random_specs(300, seed=7)
    share = sum(is_polynomial(s)[0] for s in specs) / len(specs)
    assert 0.3 <= share <= 0.7


def test_worker_pool_keeps_order():
    serial = run_suite("gate-oracle", count=60, seed=3)
    pooled = run_suite("gate-oracle", jobs=2, count=60, seed=3)
    assert serial.to_json() == pooled.to_json()
    assert serial.count == 60 and serial.passed


@pytest.mark.parametrize("name", ["atoms-product", "gamma-roundtrip", "mod-evaluations"])
def test_small_suites_pass(name):
    report = run_suite(name, max_n=40)
    assert report.passed and report.count > 0


def test_two_square_suite_small():
    report = run_suite("two-square", ns=(5, 13, 7))
    assert report.passed
    assert report.count == 10  # two checks per witness, one per rejected form


def test_unknown_suite():
    with pytest.raises(ValueError, match="unknown suite"):
        suite_tasks("nope")
    assert len(SUITES) == 9


def test_report_json_is_timing_free_by_default():
    data = run_suite("atoms-product", max_n=5).to_json()
    assert "elapsed" not in data and data["count"] == 5
