"""Verification pipeline orchestrator."""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from quivermaps.config import get_available_suites, get_verify_config
from quivermaps.schema import SuiteResult, VerifyReport
from quivermaps.utils.logging import setup_logging
from quivermaps.verify.suites import SUITE_MODULES


def resolve_suites(suite: str) -> list[str]:
    if suite == "all":
        return get_available_suites()
    if suite not in SUITE_MODULES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(get_available_suites())} or all")
    return [suite]


def run_suite(name: str, seed: int, samples: int) -> SuiteResult:
    logger = setup_logging()
    logger.info("SUITE_%s", name.upper())
    # each suite owns its stream so results do not depend on scheduling
    rng = random.Random(f"{seed}:{name}")
    result = SUITE_MODULES[name].run(rng, samples, get_verify_config())
    failed = sum(1 for check in result.checks if not check.passed)
    logger.info("suite=%s checks=%d failed=%d", name, len(result.checks), failed)
    return result


def run_verification(
    suite: str = "all",
    seed: Optional[int] = None,
    samples: Optional[int] = None,
    workers: Optional[int] = None,
) -> VerifyReport:
    cfg = get_verify_config()
    seed = cfg["seed"] if seed is None else seed
    samples = cfg["samples"] if samples is None else samples
    workers = cfg["workers"] if workers is None else workers
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")

    names = resolve_suites(suite)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        results = list(pool.map(lambda name: run_suite(name, seed, samples), names))
    return VerifyReport(seed=seed, samples=samples, suites=results)
