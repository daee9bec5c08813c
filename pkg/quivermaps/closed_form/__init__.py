from .constants import k_constants
from .lemma import (
    DP3_BAR_SQUARED,
    F0_BAR,
    SCALED_MAPS,
    ScaledDiagonalMap,
    dp3_tilde_map,
    f0_tilde_map,
    get_scaled_map,
    lemma1_power,
    register_scaled_map,
    tilde_map,
)
from .theorems import (
    admissible_steps,
    closed_form_orbit,
    on_base_variety,
    dp3_bar,
    dp3_base_orbit,
    dp3_block_orbit,
    f0_base_orbit,
    f0_block_orbit,
    restricted_map,
    theorem_orbit,
    thm3_orbit,
    thm4_orbit,
)
