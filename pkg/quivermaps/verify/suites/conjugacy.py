"""Semiconjugacy and conjugacy diagrams between phi, phi_hat and psi."""

from __future__ import annotations

from functools import partial

from quivermaps.maps.formulas import (
    conj_Pi_tilde,
    conj_Pi_tilde_inv,
    phi,
    phi_hat,
    project_Pi,
    project_pi,
    project_pi_composed,
    psi,
)
from quivermaps.maps.registry import arity_of
from quivermaps.numeric.sampling import random_point
from quivermaps.schema import MapId, SuiteResult
from quivermaps.verify.base import capped, run_check

NAME = "conjugacy"
DIAGRAM_SAMPLES = 1000


def _pi_hat_semiconjugacy(map_id: MapId, height: int, rng):
    x = random_point(rng, arity_of(map_id), height)
    left = project_Pi(map_id, phi(map_id, x))
    right = phi_hat(map_id, project_Pi(map_id, x))
    return None if left == right else f"x={x}: Pi(phi(x))={left} phi_hat(Pi(x))={right}"


def _pi_tilde_conjugacy(map_id: MapId, height: int, rng):
    p = random_point(rng, 2, height)
    left = conj_Pi_tilde(map_id, phi_hat(map_id, p))
    right = psi(map_id, conj_Pi_tilde(map_id, p))
    return None if left == right else f"p={p}: Pi~(phi_hat(p))={left} psi(Pi~(p))={right}"


def _pi_semiconjugacy(map_id: MapId, height: int, rng):
    x = random_point(rng, arity_of(map_id), height)
    left = project_pi(map_id, phi(map_id, x))
    right = psi(map_id, project_pi(map_id, x))
    return None if left == right else f"x={x}: pi(phi(x))={left} psi(pi(x))={right}"


def _pi_composition(map_id: MapId, height: int, rng):
    x = random_point(rng, arity_of(map_id), height)
    direct = project_pi(map_id, x)
    composed = project_pi_composed(map_id, x)
    return None if direct == composed else f"x={x}: pi(x)={direct} Pi~(Pi(x))={composed}"


def _inverse_round_trip(map_id: MapId, height: int, rng):
    p = random_point(rng, 2, height)
    q = conj_Pi_tilde(map_id, p)
    back = conj_Pi_tilde_inv(map_id, q)
    if back != p:
        return f"p={p}: inverse(Pi~(p))={back}"
    again = conj_Pi_tilde(map_id, back)
    return None if again == q else f"q={q}: Pi~(inverse(q))={again}"


CHECKS = [
    ("Pi_phi_eq_phi_hat_Pi", _pi_hat_semiconjugacy),
    ("Pi_tilde_phi_hat_eq_psi_Pi_tilde", _pi_tilde_conjugacy),
    ("pi_phi_eq_psi_pi", _pi_semiconjugacy),
    ("pi_eq_Pi_tilde_Pi", _pi_composition),
    ("Pi_tilde_inverse_round_trip", _inverse_round_trip),
]


def run(rng, samples: int, config: dict) -> SuiteResult:
    height = config["height"]
    count = capped(samples, DIAGRAM_SAMPLES)
    checks = [
        run_check(f"{map_id.value}.{name}", rng, count, partial(trial, map_id, height))
        for map_id in MapId
        for name, trial in CHECKS
    ]
    return SuiteResult(name=NAME, checks=checks)
