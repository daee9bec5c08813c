"""
Orbit engine.

run_orbit records every step of a phi, phi_hat or psi orbit together with
its sheet index and integral values, and detects the first exact revisit.
"""

from __future__ import annotations

import logging
from typing import Optional

from quivermaps.closed_form.theorems import admissible_steps, on_base_variety, theorem_orbit
from quivermaps.config import get_orbit_config
from quivermaps.errors import ClosedFormMismatch
from quivermaps.invariants.integrals import integrals_psi, lifted_integrals
from quivermaps.invariants.varieties import sheet_of
from quivermaps.maps.formulas import conj_Pi_tilde, get_map, phi, project_pi, psi
from quivermaps.maps.registry import arity_of, period_of, require_arity, resolve_which
from quivermaps.schema import (
    ClosedFormReport,
    ComparisonRow,
    GrowthReport,
    GrowthRow,
    IntegralValues,
    MapId,
    OrbitRecord,
    OrbitRun,
    OrbitSummary,
    Point,
)

logger = logging.getLogger(__name__)


def _integrals_for(map_id: MapId, which: str, p: Point) -> IntegralValues:
    if which == "phi":
        return lifted_integrals(map_id, p)
    if which == "phi_hat":
        return integrals_psi(map_id, conj_Pi_tilde(map_id, p))
    return integrals_psi(map_id, p)


def run_orbit(map_id: MapId, which: str, x0: Point, steps: int) -> OrbitRun:
    which = resolve_which(which)
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    require_arity(x0, arity_of(map_id) if which == "phi" else 2)

    f = get_map(map_id, which)
    anchor: Optional[Point] = project_pi(map_id, x0) if which == "phi" else None
    m = period_of(map_id)

    points = [x0]
    for _ in range(steps):
        points.append(f(points[-1]))

    records = []
    seen: dict[Point, int] = {}
    period_found = None
    for n, point in enumerate(points):
        if period_found is None and point in seen:
            period_found = n - seen[point]
        seen.setdefault(point, n)
        records.append(
            OrbitRecord(
                n=n,
                point=point,
                sheet=sheet_of(map_id, point, anchor) if anchor is not None else None,
                integrals=_integrals_for(map_id, which, point),
            )
        )

    growth = [
        (n, min(b / a for a, b in zip(points[n].coords, points[n + m].coords)))
        for n in range(0, steps - m + 1)
    ]
    summary = OrbitSummary(
        steps=steps,
        period_found=period_found,
        min_component_growth=growth,
        bitlength_series=[(n, p.bit_length()) for n, p in enumerate(points)],
    )
    logger.debug("orbit map=%s which=%s steps=%d period=%s", map_id.value, which, steps, period_found)
    return OrbitRun(map_id=map_id, which=which, records=records, summary=summary)


def _formula_label(map_id: MapId, on_base: bool, n: int) -> str:
    if not on_base:
        return f"{map_id.value}_block"
    if map_id is MapId.F0:
        return "f0_base"
    return "dp3_base_odd" if n % 2 else "dp3_base_even"


def validate_closed_form(map_id: MapId, x0: Point, n_max: int) -> ClosedFormReport:
    """Compare the closed forms with brute iteration at every admissible n <= n_max."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    require_arity(x0, arity_of(map_id))
    targets = set(admissible_steps(map_id, x0, n_max))
    on_base = on_base_variety(map_id, x0)

    rows = []
    current = x0
    for n in range(1, n_max + 1):
        current = phi(map_id, current)
        if n not in targets:
            continue
        expected = theorem_orbit(map_id, x0, n)
        if expected != current:
            raise ClosedFormMismatch(n, expected, current)
        rows.append(
            ComparisonRow(
                n=n,
                formula=_formula_label(map_id, on_base, n),
                passed=True,
                bit_length=current.bit_length(),
            )
        )
    return ClosedFormReport(map_id=map_id, start=x0, comparisons=rows)


def growth_probe(
    map_id: MapId,
    x0: Point,
    burn_in: Optional[int] = None,
    probes: Optional[int] = None,
    which: str = "phi",
) -> GrowthReport:
    """Stride-m strict growth of every component of phi^n for n = burn_in .. burn_in+probes-1."""
    if resolve_which(which) != "phi":
        raise ValueError(f"growth probes apply to phi only, got {which!r}")
    cfg = get_orbit_config()
    burn_in = cfg["burn_in"] if burn_in is None else burn_in
    probes = cfg["probes"] if probes is None else probes
    if burn_in < cfg["burn_in"]:
        raise ValueError(f"burn_in must be >= {cfg['burn_in']}, got {burn_in}")
    if probes < 2:
        raise ValueError(f"probes must be >= 2, got {probes}")
    require_arity(x0, arity_of(map_id))

    m = period_of(map_id)
    points = [x0]
    for _ in range(burn_in + probes - 1 + m):
        points.append(phi(map_id, points[-1]))

    rows = []
    for n in range(burn_in, burn_in + probes):
        increased = all(b > a for a, b in zip(points[n].coords, points[n + m].coords))
        rows.append(GrowthRow(n=n, increased=increased))
    passed = all(row.increased for row in rows)
    return GrowthReport(map_id=map_id, burn_in=burn_in, probes=probes, passed=passed, rows=rows)


def orbit_projection_matches(map_id: MapId, x: Point, steps: int) -> bool:
    """pi of the phi orbit is the psi orbit of pi(x), step by step."""
    require_arity(x, arity_of(map_id))
    upstairs = x
    downstairs = project_pi(map_id, x)
    for _ in range(steps):
        upstairs = phi(map_id, upstairs)
        downstairs = psi(map_id, downstairs)
        if project_pi(map_id, upstairs) != downstairs:
            return False
    return True
