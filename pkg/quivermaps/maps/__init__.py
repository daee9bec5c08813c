from .formulas import (
    conj_Pi_tilde,
    conj_Pi_tilde_inv,
    fixed_points,
    get_map,
    iterate_map,
    phi,
    phi_hat,
    project_Pi,
    project_pi,
    project_pi_composed,
    psi,
)
from .planar import planar_formula
from .registry import MAP_PROFILES, arity_of, period_of, resolve_map, resolve_which

__all__ = [
    "MAP_PROFILES",
    "arity_of",
    "conj_Pi_tilde",
    "conj_Pi_tilde_inv",
    "fixed_points",
    "get_map",
    "iterate_map",
    "period_of",
    "phi",
    "phi_hat",
    "planar_formula",
    "project_Pi",
    "project_pi",
    "project_pi_composed",
    "psi",
    "resolve_map",
    "resolve_which",
]
