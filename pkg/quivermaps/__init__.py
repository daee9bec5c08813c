"""quivermaps: exact dynamics of the F0 and dP3 quiver maps (closed forms + integrals + varieties)."""

from .closed_form import (
    closed_form_orbit,
    k_constants,
    lemma1_power,
    restricted_map,
    theorem_orbit,
    thm3_orbit,
    thm4_orbit,
)
from .invariants import (
    classify_variety,
    h_map,
    integrals_psi,
    jacobian_det_I,
    level_set_octet,
    lifted_integrals,
    membership_D,
    restricted_integrals_dp3,
    sample_variety,
    sigma,
)
from .maps import (
    conj_Pi_tilde,
    conj_Pi_tilde_inv,
    iterate_map,
    phi,
    phi_hat,
    project_Pi,
    project_pi,
    psi,
)
from .numeric import Jet2, jet_eval, sqrt_exact
from .orbit import growth_probe, run_orbit, validate_closed_form
from .schema import MapId, Point

__version__ = "1.0.0"

__all__ = [
    # Numeric
    "Jet2",
    "jet_eval",
    "sqrt_exact",
    # Maps
    "MapId",
    "Point",
    "conj_Pi_tilde",
    "conj_Pi_tilde_inv",
    "iterate_map",
    "phi",
    "phi_hat",
    "project_Pi",
    "project_pi",
    "psi",
    # Closed forms
    "closed_form_orbit",
    "k_constants",
    "lemma1_power",
    "restricted_map",
    "theorem_orbit",
    "thm3_orbit",
    "thm4_orbit",
    # Invariants
    "classify_variety",
    "h_map",
    "integrals_psi",
    "jacobian_det_I",
    "level_set_octet",
    "lifted_integrals",
    "membership_D",
    "restricted_integrals_dp3",
    "sample_variety",
    "sigma",
    # Orbits
    "growth_probe",
    "run_orbit",
    "validate_closed_form",
]
