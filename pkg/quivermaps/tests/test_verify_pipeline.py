"""Verification pipeline: suite resolution, determinism and check accounting."""

import os
import random
import sys

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..")))

from quivermaps.verify import resolve_suites, run_suite, run_verification
from quivermaps.verify.base import capped, run_check


def test_resolve_suites():
    assert resolve_suites("conjugacy") == ["conjugacy"]
    assert resolve_suites("all")[0] == "periodicity"
    with pytest.raises(ValueError):
        resolve_suites("nonsense")


def test_capped():
    assert capped(10000, 50) == 50
    assert capped(5, 1000) == 5
    assert capped(0, 1000) == 1


def test_run_check_counts_failures_and_exceptions():
    outcomes = iter([None, "first", None, "second"])
    result = run_check("demo", random.Random(0), 4, lambda rng: next(outcomes))
    assert (result.total, result.failures, result.counterexample) == (4, 2, "first")

    def boom(rng):
        raise ZeroDivisionError("division by zero")

    crashed = run_check("crash", random.Random(0), 2, boom)
    assert crashed.failures == 2
    assert crashed.counterexample.startswith("ZeroDivisionError")


@pytest.mark.parametrize("name", ["periodicity", "conjugacy", "symplectic"])
def test_small_suites_pass(name):
    result = run_suite(name, seed=1, samples=4)
    assert result.passed, [c.counterexample for c in result.checks if not c.passed]
    assert all(check.total <= 4 for check in result.checks)


def test_closed_form_and_varieties_pass():
    report = run_verification("closedform", seed=2, samples=2)
    assert report.passed
    report = run_verification("varieties", seed=2, samples=2)
    assert report.passed


def test_integrals_suite_passes():
    assert run_verification("integrals", seed=5, samples=2).passed


def test_report_is_deterministic_across_workers():
    one = run_verification("all", seed=11, samples=2, workers=1)
    many = run_verification("all", seed=11, samples=2, workers=3)
    assert one.model_dump() == many.model_dump()
    assert [suite.name for suite in one.suites] == resolve_suites("all")


def test_rejects_zero_samples():
    with pytest.raises(ValueError):
        run_verification("periodicity", samples=0)
