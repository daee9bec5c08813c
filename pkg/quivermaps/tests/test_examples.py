"""Worked examples from JSON fixtures."""

import json
import os
import sys
from pathlib import Path

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..")))

from quivermaps import errors
from quivermaps.closed_form import k_constants, restricted_map, thm3_orbit, thm4_orbit
from quivermaps.invariants import (
    classify_variety,
    h_map,
    integrals_psi,
    jacobian_det_I,
    lifted_integrals,
    restricted_integrals_dp3,
    sample_variety,
    sigma,
)
from quivermaps.maps import (
    conj_Pi_tilde,
    conj_Pi_tilde_inv,
    get_map,
    iterate_map,
    phi,
    phi_hat,
    project_Pi,
    project_pi,
    psi,
    resolve_map,
)
from quivermaps.numeric import parse_scalar_list
from quivermaps.schema import Point, VarietyC


FIXTURES_DIR = Path(__file__).resolve().parent / "fixtures"


def load_cases() -> list[dict]:
    cases = []
    for path in sorted(FIXTURES_DIR.glob("*_examples.json")):
        data = json.loads(path.read_text(encoding="utf-8"))
        cases.extend(data["cases"])
    return cases


def _point(text: str) -> Point:
    return Point(coords=parse_scalar_list(text))


def _values(result) -> list:
    if isinstance(result, Point):
        return list(result.coords)
    if hasattr(result, "j1"):
        return [result.j1, result.j2]
    if hasattr(result, "k1"):
        return [result.k1, result.k2]
    if isinstance(result, tuple):
        return list(result)
    return [result]


POINT_OPS = {
    "phi": phi,
    "phi_hat": phi_hat,
    "psi": psi,
    "project_Pi": project_Pi,
    "conj_Pi_tilde": conj_Pi_tilde,
    "conj_Pi_tilde_inv": conj_Pi_tilde_inv,
    "project_pi": project_pi,
    "integrals_psi": integrals_psi,
    "lifted_integrals": lifted_integrals,
}


def evaluate(case: dict):
    op = case["op"]
    map_id = resolve_map(case["map"]) if "map" in case else None
    if op in POINT_OPS:
        return POINT_OPS[op](map_id, _point(case["point"]))
    if op == "iterate":
        return iterate_map(get_map(map_id, case["which"]), _point(case["point"]), case["n"])
    if op == "k_constants":
        a, b = parse_scalar_list(case["point"])
        return k_constants(map_id, a, b)
    if op == "thm3_orbit":
        return thm3_orbit(_point(case["point"]), case["n"])
    if op == "thm4_orbit":
        return thm4_orbit(_point(case["point"]), case["n"])
    if op == "restricted_map":
        a, b = parse_scalar_list(case["ab"])
        return restricted_map(map_id, case["which"], a, b, _point(case["point"]))
    if op == "restricted_integrals_dp3":
        return restricted_integrals_dp3(case["which"], _point(case["point"]))
    if op == "jacobian_det_I":
        return jacobian_det_I(_point(case["point"]))
    if op == "sigma":
        return sigma(_point(case["point"]))
    if op == "h_map":
        return h_map(parse_scalar_list(case["point"]))
    if op == "classify_variety":
        return classify_variety(map_id, _point(case["point"]), _point(case["ab"]))
    if op == "sample_variety":
        a, b = parse_scalar_list(case["ab"])
        return sample_variety(map_id, VarietyC(map_id=map_id, a=a, b=b), parse_scalar_list(case["point"]))
    raise AssertionError(f"unknown op {op}")


@pytest.mark.parametrize("case", load_cases(), ids=lambda case: case["id"])
def test_example(case: dict) -> None:
    if "error" in case:
        with pytest.raises(getattr(errors, case["error"])):
            evaluate(case)
        return
    result = evaluate(case)
    assert _values(result) == parse_scalar_list(case["expected"]), case["id"]
