"""Sheet cycling on S_P, phi^m invariance of pi, and the D varieties."""

from __future__ import annotations

from functools import partial

from quivermaps.invariants.integrals import restricted_integrals_dp3
from quivermaps.invariants.varieties import (
    classify_variety,
    h_map,
    membership_base_confined,
    membership_C,
    membership_D,
    sample_variety,
)
from quivermaps.maps.formulas import iterate_map, phi, project_pi
from quivermaps.maps.registry import arity_of, period_of
from quivermaps.numeric.sampling import random_point, random_scalar, random_square_pair
from quivermaps.orbit.engine import orbit_projection_matches
from quivermaps.schema import MapId, SuiteResult, VarietyC, VarietyD
from quivermaps.verify.base import capped, run_check

NAME = "varieties"
ORBIT_SAMPLES = 100
PARAM_SAMPLES = 1000
D_TUPLES = 20
D_POINTS = 50
CONFINED_SAMPLES = 50
CONFINED_STEPS = 12
FREE_HEIGHT = 20


def _sheet_cycling(map_id: MapId, height: int, steps: int, rng):
    x = random_point(rng, arity_of(map_id), height)
    anchor = project_pi(map_id, x)
    m = period_of(map_id)
    y = x
    for n in range(steps + 1):
        sheet = classify_variety(map_id, y, anchor)
        if sheet != n % m:
            return f"x={x}: sheet {sheet} at n={n}"
        y = phi(map_id, y)
    return None


def _period_invariance(map_id: MapId, height: int, rng):
    x = random_point(rng, arity_of(map_id), height)
    m = period_of(map_id)
    y = iterate_map(partial(phi, map_id), x, m)
    return None if project_pi(map_id, y) == project_pi(map_id, x) else f"x={x}"


def _projection(map_id: MapId, height: int, steps: int, rng):
    x = random_point(rng, arity_of(map_id), height)
    return None if orbit_projection_matches(map_id, x, steps) else f"x={x}"


def _sample_on_c(map_id: MapId, rng):
    if map_id is MapId.F0:
        a, b = random_square_pair(rng)
        free = [random_scalar(rng, FREE_HEIGHT) for _ in range(2)]
    else:
        a, b = random_scalar(rng, 10), random_scalar(rng, 10)
        free = [random_scalar(rng, FREE_HEIGHT) for _ in range(4)]
    variety = VarietyC(map_id=map_id, a=a, b=b)
    x = sample_variety(map_id, variety, free)
    return None if membership_C(variety, x) else f"C({a},{b}) free={free}: {x}"


def _h_period(rng):
    q = tuple(random_scalar(rng, 100) for _ in range(4))
    r = q
    for _ in range(6):
        r = h_map(r)
    return None if r == q else f"h^6({q}) = {r}"


def _d_cycling(rng):
    params = tuple(random_scalar(rng, 10) for _ in range(4))
    for _ in range(D_POINTS):
        free = [random_scalar(rng, FREE_HEIGHT) for _ in range(2)]
        current = params
        z = sample_variety(MapId.DP3, VarietyD(a=params[0], b=params[1], c=params[2], d=params[3]), free)
        for step in range(6):
            z = phi(MapId.DP3, z)
            current = h_map(current)
            variety = VarietyD(a=current[0], b=current[1], c=current[2], d=current[3])
            if not membership_D(variety, z):
                return f"D{params} free={free}: phi^{step + 1} leaves D{current}"
    return None


def _base_confinement(rng):
    free = [random_scalar(rng, FREE_HEIGHT) for _ in range(4)]
    x = sample_variety(MapId.DP3, VarietyC(map_id=MapId.DP3, a=1, b=1), free)
    level = restricted_integrals_dp3("bar", x)
    z = x
    for n in range(CONFINED_STEPS + 1):
        if not membership_base_confined(z, level.j1, level.j2):
            return f"x={x}: leaves the confining variety at n={n}"
        z = phi(MapId.DP3, z)
    return None


def run(rng, samples: int, config: dict) -> SuiteResult:
    height = config["height"]
    steps = config["orbit_steps"]
    orbits = capped(samples, ORBIT_SAMPLES)
    checks = []
    for map_id in MapId:
        tag = map_id.value
        checks += [
            run_check(f"{tag}.sheet_cycling", rng, orbits, partial(_sheet_cycling, map_id, height, steps)),
            run_check(f"{tag}.pi_invariant_under_phi_period", rng, orbits, partial(_period_invariance, map_id, height)),
            run_check(f"{tag}.orbit_projection", rng, orbits, partial(_projection, map_id, height, steps)),
            run_check(f"{tag}.sample_on_C", rng, orbits, partial(_sample_on_c, map_id)),
        ]
    checks += [
        run_check("h_period_six", rng, capped(samples, PARAM_SAMPLES), _h_period),
        run_check("dp3.D_cycling", rng, capped(samples, D_TUPLES), _d_cycling),
        run_check("dp3.base_confinement", rng, capped(samples, CONFINED_SAMPLES), _base_confinement),
    ]
    return SuiteResult(name=NAME, checks=checks)
