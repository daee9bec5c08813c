from .scalar import (
    Scalar,
    as_scalar,
    bit_length,
    format_scalar,
    height,
    parse_scalar,
    parse_scalar_list,
    sqrt_exact,
)
from .jet import Jet2, jacobian, jacobian_det, jet_eval
from .sampling import random_pair_off_base, random_point, random_scalar, random_square_pair

__all__ = [
    "Scalar",
    "as_scalar",
    "bit_length",
    "format_scalar",
    "height",
    "parse_scalar",
    "parse_scalar_list",
    "sqrt_exact",
    "Jet2",
    "jacobian",
    "jacobian_det",
    "jet_eval",
    "random_pair_off_base",
    "random_point",
    "random_scalar",
    "random_square_pair",
]
