"""Global periodicity of psi and phi_hat, minimal periods and fixed points."""

from __future__ import annotations

from functools import partial

from quivermaps.maps.formulas import fixed_points, iterate_map, phi_hat, psi
from quivermaps.maps.registry import period_of
from quivermaps.numeric.sampling import random_point
from quivermaps.schema import MapId, Point, SuiteResult
from quivermaps.verify.base import capped, run_check

NAME = "periodicity"
PERIOD_SAMPLES = 1000
FIXED_SEARCH_SAMPLES = 10000
ONE = Point.of(1, 1)


def _psi_period(map_id: MapId, height: int, rng):
    p = random_point(rng, 2, height)
    m = period_of(map_id)
    f = partial(psi, map_id)
    if iterate_map(f, p, m) != p:
        return f"psi^{m}({p}) = {iterate_map(f, p, m)}"
    if p != ONE:
        q = p
        for k in range(1, m):
            q = f(q)
            if q == p:
                return f"psi^{k}({p}) = {p} with k < {m}"
    return None


def _phi_hat_period(map_id: MapId, height: int, rng):
    p = random_point(rng, 2, height)
    m = period_of(map_id)
    q = iterate_map(partial(phi_hat, map_id), p, m)
    if q != p:
        return f"phi_hat^{m}({p}) = {q}"
    return None


def _known_fixed_points(map_id: MapId, rng):
    fixed = fixed_points(map_id)
    if psi(map_id, fixed["psi"]) != fixed["psi"]:
        return f"psi does not fix {fixed['psi']}"
    if phi_hat(map_id, fixed["phi_hat"]) != fixed["phi_hat"]:
        return f"phi_hat does not fix {fixed['phi_hat']}"
    return None


def _no_other_fixed_point(map_id: MapId, height: int, rng):
    p = random_point(rng, 2, height)
    fixed = fixed_points(map_id)
    if p != fixed["psi"] and psi(map_id, p) == p:
        return f"unexpected psi fixed point {p}"
    if p != fixed["phi_hat"] and phi_hat(map_id, p) == p:
        return f"unexpected phi_hat fixed point {p}"
    return None


def run(rng, samples: int, config: dict) -> SuiteResult:
    height = config["height"]
    checks = []
    for map_id in MapId:
        tag = map_id.value
        n = capped(samples, PERIOD_SAMPLES)
        checks.append(run_check(f"{tag}.psi_global_period", rng, n, partial(_psi_period, map_id, height)))
        checks.append(run_check(f"{tag}.phi_hat_global_period", rng, n, partial(_phi_hat_period, map_id, height)))
        checks.append(run_check(f"{tag}.known_fixed_points", rng, 1, partial(_known_fixed_points, map_id)))
        checks.append(
            run_check(
                f"{tag}.fixed_point_search",
                rng,
                capped(samples, FIXED_SEARCH_SAMPLES),
                partial(_no_other_fixed_point, map_id, height),
            )
        )
    return SuiteResult(name=NAME, checks=checks)
