"""First integrals, the Jacobian locus and the level-set dichotomy."""

from __future__ import annotations

from fractions import Fraction
from functools import partial

from quivermaps.closed_form.theorems import dp3_bar
from quivermaps.invariants.integrals import (
    integral_jacobian,
    integrals_psi,
    jacobian_det_I,
    lifted_integrals,
    lifted_integrals_via_pi,
    restricted_integrals_dp3,
)
from quivermaps.invariants.levelsets import (
    brute_force_level_solutions,
    level_equations,
    level_set,
    level_set_octet,
    level_set_report,
)
from quivermaps.invariants.varieties import sample_variety
from quivermaps.maps.formulas import iterate_map, phi, psi
from quivermaps.maps.registry import arity_of
from quivermaps.numeric.sampling import random_pair_off_base, random_point, random_scalar
from quivermaps.numeric.scalar import height as scalar_height
from quivermaps.schema import MapId, Point, SuiteResult, VarietyC
from quivermaps.verify.base import capped, run_check

NAME = "integrals"
ORBIT_SAMPLES = 100
FORMULA_SAMPLES = 1000
RESTRICTED_SAMPLES = 50
LEVEL_SAMPLES = 100
ORACLE_SAMPLES = 20

# Degenerate anchors sit on the Jacobian locus of the respective integrals.
F0_ANCHOR_KINDS = ("generic", "a=b", "a=1", "b=1", "ab=1")
DP3_ANCHOR_KINDS = ("generic", "a=b", "a=1", "b=1", "ab=1", "b=a^2", "a=b^2")


def _anchor(kinds, height: int, rng) -> tuple[Fraction, Fraction]:
    kind = kinds[rng.randrange(len(kinds))]
    a, b = random_scalar(rng, height), random_scalar(rng, height)
    if kind == "a=b":
        b = a
    elif kind == "a=1":
        a = Fraction(1)
    elif kind == "b=1":
        b = Fraction(1)
    elif kind == "ab=1":
        b = 1 / a
    elif kind == "b=a^2":
        b = a * a
    elif kind == "a=b^2":
        a = b * b
    return a, b


def _lifted_constant(map_id: MapId, height: int, steps: int, rng):
    x = random_point(rng, arity_of(map_id), height)
    level = lifted_integrals(map_id, x)
    y = x
    for n in range(1, steps + 1):
        y = phi(map_id, y)
        if lifted_integrals(map_id, y) != level:
            return f"x={x}: integrals change at n={n}"
    return None


def _display_eq_composition(height: int, rng):
    x = random_point(rng, 4, height)
    display = lifted_integrals(MapId.F0, x)
    composed = lifted_integrals_via_pi(MapId.F0, x)
    return None if display == composed else f"x={x}: display={display} composed={composed}"


def _psi_integrals_constant(map_id: MapId, height: int, rng):
    p = random_point(rng, 2, height)
    q = psi(map_id, p)
    return None if integrals_psi(map_id, q) == integrals_psi(map_id, p) else f"p={p}"


def _bar_integrals_constant(rng):
    free = [random_scalar(rng, 20) for _ in range(4)]
    x = sample_variety(MapId.DP3, VarietyC(map_id=MapId.DP3, a=1, b=1), free)
    level = restricted_integrals_dp3("bar", x)
    y = x
    for n in range(1, 7):
        y = dp3_bar(y)
        if restricted_integrals_dp3("bar", y) != level:
            return f"x={x}: bar integrals change at n={n}"
    return None


def _tilde_integrals_constant(rng):
    a, b = random_pair_off_base(rng, 10)
    free = [random_scalar(rng, 20) for _ in range(4)]
    x = sample_variety(MapId.DP3, VarietyC(map_id=MapId.DP3, a=a, b=b), free)
    y = iterate_map(partial(phi, MapId.DP3), x, 6)
    before, after = restricted_integrals_dp3("tilde", x), restricted_integrals_dp3("tilde", y)
    return None if before == after else f"x={x}: tilde integrals {before} -> {after}"


def _jacobian_display(height: int, rng):
    p = random_point(rng, 2, height)
    display, jets = jacobian_det_I(p), integral_jacobian(MapId.F0, p)
    return None if display == jets else f"p={p}: display={display} jets={jets}"


def _octet_solves(height: int, rng):
    a, b = random_scalar(rng, height), random_scalar(rng, height)
    for p in level_set_octet(a, b):
        if level_equations(a, b, p[0], p[1]) != (0, 0):
            return f"(a,b)=({a},{b}): {p} misses the level equations"
    return None


def _dichotomy(map_id: MapId, kinds, height: int, rng):
    a, b = _anchor(kinds, height, rng)
    report = level_set_report(map_id, a, b)
    if not report.consistent:
        return f"{map_id.value} P=({a},{b}): jacobian={report.jacobian} points={len(report.points)}"
    if map_id is MapId.F0 and set(report.points) != set(level_set_octet(a, b)):
        return f"P=({a},{b}): orbit union differs from the octet"
    if report.case == "ii" and len(report.points) != 2 * len(report.orbit_anchor):
        return f"{map_id.value} P=({a},{b}): orbits not disjoint"
    return None


def _oracle(map_id: MapId, height: int, param_height: int, rng):
    a, b = random_scalar(rng, param_height), random_scalar(rng, param_height)
    found = brute_force_level_solutions(a, b, height, map_id)
    expected = level_set_octet(a, b) if map_id is MapId.F0 else level_set(map_id, a, b)
    extra = found - expected
    if extra:
        return f"{map_id.value} (a,b)=({a},{b}): extra solutions {sorted(str(p) for p in extra)}"
    # the search only sees points whose coordinates have height <= `height`
    missed = {p for p in expected if max(scalar_height(c) for c in p.coords) <= height} - found
    if missed:
        return f"{map_id.value} (a,b)=({a},{b}): search missed {sorted(str(p) for p in missed)}"
    return None


def run(rng, samples: int, config: dict) -> SuiteResult:
    height = config["height"]
    steps = config["orbit_steps"]
    checks = []
    for map_id in MapId:
        tag = map_id.value
        checks.append(
            run_check(
                f"{tag}.lifted_constant",
                rng,
                capped(samples, ORBIT_SAMPLES),
                partial(_lifted_constant, map_id, height, steps),
            )
        )
        checks.append(
            run_check(
                f"{tag}.psi_integrals_constant",
                rng,
                capped(samples, FORMULA_SAMPLES),
                partial(_psi_integrals_constant, map_id, height),
            )
        )
    checks += [
        run_check("f0.lifted_display", rng, capped(samples, FORMULA_SAMPLES), partial(_display_eq_composition, height)),
        run_check("dp3.bar_integrals_constant", rng, capped(samples, RESTRICTED_SAMPLES), _bar_integrals_constant),
        run_check("dp3.tilde_integrals_constant", rng, capped(samples, RESTRICTED_SAMPLES), _tilde_integrals_constant),
        run_check("f0.jacobian_display", rng, capped(samples, FORMULA_SAMPLES), partial(_jacobian_display, height)),
        run_check("f0.octet_solves", rng, capped(samples, LEVEL_SAMPLES), partial(_octet_solves, height)),
        run_check(
            "f0.level_set_dichotomy",
            rng,
            capped(samples, LEVEL_SAMPLES),
            partial(_dichotomy, MapId.F0, F0_ANCHOR_KINDS, height),
        ),
        run_check(
            "dp3.level_set_dichotomy",
            rng,
            capped(samples, LEVEL_SAMPLES),
            partial(_dichotomy, MapId.DP3, DP3_ANCHOR_KINDS, height),
        ),
        run_check(
            "f0.level_set_oracle",
            rng,
            capped(samples, ORACLE_SAMPLES),
            partial(_oracle, MapId.F0, config["oracle_height"], config["oracle_param_height"]),
        ),
        run_check(
            "dp3.level_set_oracle",
            rng,
            capped(samples, ORACLE_SAMPLES),
            partial(_oracle, MapId.DP3, config["oracle_height"], config["oracle_param_height"]),
        ),
    ]
    return SuiteResult(name=NAME, checks=checks)
