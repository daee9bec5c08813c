"""Closed-form orbits against brute iteration, k constants, no periodic points and growth."""

from __future__ import annotations

from functools import partial

from quivermaps.closed_form.constants import k_constants
from quivermaps.closed_form.lemma import SCALED_MAPS, lemma1_power, tilde_map
from quivermaps.closed_form.theorems import (
    block_orbit,
    restricted_map,
    theorem_orbit,
)
from quivermaps.invariants.varieties import sample_variety
from quivermaps.maps.formulas import iterate_map, phi, project_pi
from quivermaps.maps.registry import arity_of, period_of
from quivermaps.numeric.sampling import (
    random_pair_off_base,
    random_point,
    random_scalar,
    random_square_pair,
)
from quivermaps.orbit.engine import growth_probe
from quivermaps.schema import MapId, SuiteResult, VarietyC
from quivermaps.verify.base import capped, run_check

NAME = "closedform"
FORMULA_SAMPLES = 50
CONSTANT_SAMPLES = 1000
ORBIT_SAMPLES = 100
FREE_HEIGHT = 20


def _free(map_id: MapId, rng) -> list:
    count = 2 if map_id is MapId.F0 else 4
    return [random_scalar(rng, FREE_HEIGHT) for _ in range(count)]


def _base_point(map_id: MapId, rng):
    return sample_variety(map_id, VarietyC(map_id=map_id, a=1, b=1), _free(map_id, rng))


def _general_point(map_id: MapId, rng):
    if map_id is MapId.F0:
        a, b = random_square_pair(rng)
    else:
        a, b = random_pair_off_base(rng, 10)
    return sample_variety(map_id, VarietyC(map_id=map_id, a=a, b=b), _free(map_id, rng))


def _compare(map_id: MapId, x, steps: list[int]):
    current, done = x, 0
    for n in steps:
        current = iterate_map(partial(phi, map_id), current, n - done)
        done = n
        closed = theorem_orbit(map_id, x, n)
        if closed != current:
            return f"x={x} n={n}: closed={closed} iterated={current}"
    return None


def _base_formula(map_id: MapId, n_max: int, rng):
    return _compare(map_id, _base_point(map_id, rng), list(range(1, n_max + 1)))


def _block_formula(map_id: MapId, n_max: int, rng):
    m = period_of(map_id)
    return _compare(map_id, _general_point(map_id, rng), list(range(m, n_max + 1, m)))


def _block_matches_base(map_id: MapId, rng):
    x = _base_point(map_id, rng)
    m = period_of(map_id)
    for blocks in range(1, 4):
        n = blocks * m
        if block_orbit(map_id, x, n) != theorem_orbit(map_id, x, n):
            return f"x={x} n={n}: block and base formulas disagree"
    return None


def _lemma_power(n_max: int, rng):
    maps = list(SCALED_MAPS.values())
    g = maps[rng.randrange(len(maps))]
    x = random_point(rng, g.arity, FREE_HEIGHT)
    for n in range(n_max + 1):
        if lemma1_power(g, x, n) != iterate_map(g, x, n):
            return f"{g.name} x={x} n={n}"
    return None


def _tilde_power(map_id: MapId, rng):
    a, b = random_pair_off_base(rng, 10)
    g = tilde_map(map_id, a, b)
    x = random_point(rng, g.arity, FREE_HEIGHT)
    for n in range(4):
        if lemma1_power(g, x, n) != iterate_map(g, x, n):
            return f"{g.name} x={x} n={n}"
    return None


def _restricted_tilde(map_id: MapId, rng):
    x = _general_point(map_id, rng)
    a, b = project_pi(map_id, x).coords
    m = period_of(map_id)
    got = restricted_map(map_id, "tilde", a, b, x)
    want = iterate_map(partial(phi, map_id), x, m)
    return None if got == want else f"x={x}: tilde={got} phi^{m}={want}"


def _k_inequalities(map_id: MapId, height: int, rng):
    a, b = random_pair_off_base(rng, height)
    k = k_constants(map_id, a, b)
    return None if k.inequalities_hold() else f"(a,b)=({a},{b}): k1={k.k1} k2={k.k2}"


def _no_periodic_points(map_id: MapId, height: int, steps: int, rng):
    x = random_point(rng, arity_of(map_id), height)
    y = x
    for n in range(1, steps + 1):
        y = phi(map_id, y)
        if y == x:
            return f"phi^{n}({x}) = {x}"
    return None


def _growth(map_id: MapId, height: int, rng):
    x = random_point(rng, arity_of(map_id), height)
    report = growth_probe(map_id, x)
    if report.passed:
        return None
    failed = [row.n for row in report.rows if not row.increased]
    return f"x={x}: no stride growth at n={failed}"


def run(rng, samples: int, config: dict) -> SuiteResult:
    n_max = config["closed_form_steps"]
    height = config["height"]
    formulas = capped(samples, FORMULA_SAMPLES)
    checks = []
    for map_id in MapId:
        tag = map_id.value
        checks += [
            run_check(f"{tag}.base_formula", rng, formulas, partial(_base_formula, map_id, n_max)),
            run_check(f"{tag}.block_formula", rng, formulas, partial(_block_formula, map_id, n_max)),
            run_check(f"{tag}.block_matches_base", rng, formulas, partial(_block_matches_base, map_id)),
            run_check(f"{tag}.tilde_lemma_power", rng, formulas, partial(_tilde_power, map_id)),
            run_check(f"{tag}.tilde_eq_phi_period", rng, formulas, partial(_restricted_tilde, map_id)),
            run_check(
                f"{tag}.k_inequalities",
                rng,
                capped(samples, CONSTANT_SAMPLES),
                partial(_k_inequalities, map_id, height),
            ),
            run_check(
                f"{tag}.no_periodic_points",
                rng,
                capped(samples, ORBIT_SAMPLES),
                partial(_no_periodic_points, map_id, height, config["orbit_steps"]),
            ),
            run_check(
                f"{tag}.stride_growth",
                rng,
                capped(samples, ORBIT_SAMPLES),
                partial(_growth, map_id, config["growth_height"]),
            ),
        ]
    checks.append(run_check("lemma_power", rng, formulas, partial(_lemma_power, n_max)))
    return SuiteResult(name=NAME, checks=checks)
