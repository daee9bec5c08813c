"""Shared helpers for verification checks."""

from __future__ import annotations

import logging
import random
from typing import Callable, Optional

from quivermaps.schema import CheckResult

logger = logging.getLogger(__name__)

# A trial draws its own inputs from the rng and returns None on success,
# or a description of the counterexample in exact rationals.
Trial = Callable[[random.Random], Optional[str]]


def capped(samples: int, acceptance_size: int) -> int:
    return max(1, min(samples, acceptance_size))


def run_check(name: str, rng: random.Random, count: int, trial: Trial) -> CheckResult:
    failures = 0
    counterexample = None
    for _ in range(count):
        try:
            problem = trial(rng)
        except Exception as exc:
            problem = f"{type(exc).__name__}: {exc}"
        if problem is None:
            continue
        failures += 1
        if counterexample is None:
            counterexample = problem
            logger.warning("check failed: check=%s detail=%s", name, problem)
    return CheckResult(name=name, total=count, failures=failures, counterexample=counterexample)
