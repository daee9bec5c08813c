"""Pullback of dx^dy/(xy) under phi_hat and psi, with Jacobians from jets."""

from __future__ import annotations

from functools import partial

from quivermaps.maps.planar import planar_formula
from quivermaps.numeric.jet import jacobian_det
from quivermaps.numeric.sampling import random_point
from quivermaps.schema import MapId, Point, SuiteResult
from quivermaps.verify.base import capped, run_check

NAME = "symplectic"
PULLBACK_SAMPLES = 1000


def _log_form_preserved(map_id: MapId, which: str, height: int, rng):
    p = random_point(rng, 2, height)
    f = planar_formula(map_id, which)
    image = Point.of(*f(p[0], p[1]))
    det = jacobian_det(f, p)
    left = det * p[0] * p[1]
    right = image[0] * image[1]
    return None if left == right else f"p={p}: det*x*y={left} x'*y'={right}"


def run(rng, samples: int, config: dict) -> SuiteResult:
    height = config["height"]
    count = capped(samples, PULLBACK_SAMPLES)
    checks = [
        run_check(
            f"{map_id.value}.{which}_log_form",
            rng,
            count,
            partial(_log_form_preserved, map_id, which, height),
        )
        for map_id in MapId
        for which in ("phi_hat", "psi")
    ]
    return SuiteResult(name=NAME, checks=checks)
