from .integrals import (
    integral_formula,
    integral_jacobian,
    integrals_psi,
    jacobian_det_I,
    lifted_integrals,
    lifted_integrals_via_pi,
    restricted_integrals_dp3,
)
from .levelsets import (
    brute_force_level_solutions,
    level_equations,
    level_set,
    level_set_octet,
    level_set_report,
    psi_orbit,
    sigma,
)
from .varieties import (
    classify_variety,
    d_parameters,
    h_map,
    membership_base_confined,
    membership_C,
    membership_D,
    sample_variety,
    sheet_of,
)
