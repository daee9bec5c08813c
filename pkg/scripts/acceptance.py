"""Acceptance harness: every verification suite at its full sample size."""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path
from typing import Any

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.append(str(ROOT))

from quivermaps.errors import ClosedFormMismatch
from quivermaps.orbit import validate_closed_form
from quivermaps.schema import MapId, Point
from quivermaps.utils.logging import setup_logging
from quivermaps.verify import run_verification

# each check caps itself at its own acceptance size
ACCEPTANCE_SAMPLES = 10000

CLOSED_FORM_STARTS = [
    (MapId.F0, Point.of(1, 1, 1, 2), 16),
    (MapId.F0, Point.of(1, 1, 2, Fraction(5, 2)), 16),
    (MapId.DP3, Point.of(1, 1, 1, 1, 1, 2), 16),
    (MapId.DP3, Point.of(1, 2, 1, 3, 2, 5), 18),
]


def closed_form_rows() -> list[dict[str, Any]]:
    rows = []
    for map_id, start, n_max in CLOSED_FORM_STARTS:
        row = {"case": f"{map_id.value} {start}", "rows": 0, "max_bits": 0, "failures": []}
        try:
            report = validate_closed_form(map_id, start, n_max)
        except ClosedFormMismatch as exc:
            row["failures"].append(str(exc))
        else:
            row["rows"] = len(report.comparisons)
            row["max_bits"] = max((c.bit_length for c in report.comparisons), default=0)
        row["status"] = "FAIL" if row["failures"] else "PASS"
        rows.append(row)
    return rows


def _print_table(rows: list[dict[str, Any]]) -> None:
    header = f"{'case':<44} {'rows':<6} {'max_bits':<9} status"
    print(header)
    print("-" * len(header))
    for row in rows:
        print(f"{row['case']:<44} {row['rows']:<6} {row['max_bits']:<9} {row['status']}")
        for failure in row["failures"]:
            print(f"  - {failure}")


def main() -> int:
    import argparse

    parser = argparse.ArgumentParser(description="Run the acceptance verification.")
    parser.add_argument("--seed", type=int, default=None, help="Override the configured seed.")
    parser.add_argument("--workers", type=int, default=None)
    args = parser.parse_args()

    setup_logging()
    report = run_verification("all", seed=args.seed, samples=ACCEPTANCE_SAMPLES, workers=args.workers)

    header = f"{'suite':<12} {'check':<40} {'total':>7} {'failed':>7} status"
    print(header)
    print("-" * len(header))
    failed = 0
    for suite in report.suites:
        for check in suite.checks:
            status = "PASS" if check.passed else "FAIL"
            failed += 0 if check.passed else 1
            print(f"{suite.name:<12} {check.name:<40} {check.total:>7} {check.failures:>7} {status}")
            if check.counterexample:
                print(f"  - {check.counterexample}")
    print()

    rows = closed_form_rows()
    _print_table(rows)
    failed += sum(1 for row in rows if row["failures"])

    print(f"\nseed={report.seed} failed={failed}")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
