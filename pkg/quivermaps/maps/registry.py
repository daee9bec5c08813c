# quivermaps/maps/registry.py
"""
Map family profiles.
Every generic operation takes a MapId and looks up arity and period here.
"""

from quivermaps.errors import ArityMismatch
from quivermaps.schema import MapId, Point

MAP_PROFILES = {
    MapId.F0: {
        "arity": 4,
        "period": 4,
        "psi_fixed_point": (1, 1),
        "phi_hat_fixed_point": (2, 1),
    },
    MapId.DP3: {
        "arity": 6,
        "period": 6,
        "psi_fixed_point": (1, 1),
        "phi_hat_fixed_point": (1, 2),
    },
}

# CLI string to Enum mapping
STRING_TO_MAP = {
    "f0": MapId.F0,
    "F0": MapId.F0,
    "dp3": MapId.DP3,
    "dP3": MapId.DP3,
    "DP3": MapId.DP3,
}

WHICH_ALIASES = {
    "phi": "phi",
    "phihat": "phi_hat",
    "phi_hat": "phi_hat",
    "psi": "psi",
}


def resolve_map(name) -> MapId:
    if isinstance(name, MapId):
        return name
    try:
        return STRING_TO_MAP[name]
    except KeyError:
        raise ValueError(f"unknown map {name!r}; expected one of f0, dp3") from None


def resolve_which(name: str) -> str:
    try:
        return WHICH_ALIASES[name]
    except KeyError:
        raise ValueError(f"unknown map kind {name!r}; expected phi, phihat or psi") from None


def arity_of(map_id: MapId) -> int:
    return MAP_PROFILES[map_id]["arity"]


def period_of(map_id: MapId) -> int:
    return MAP_PROFILES[map_id]["period"]


def require_arity(point: Point, arity: int, what: str = "point") -> None:
    if point.arity != arity:
        raise ArityMismatch(f"{what} needs arity {arity}, got {point.arity}")
