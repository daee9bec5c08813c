"""
Planar rational maps written over bare (x, y).

The same callables evaluate on Fractions and on Jet2 values, so the exact
Jacobian of every registered planar map comes from forward-mode jets.
"""

from quivermaps.schema import MapId


def f0_phi_hat(x, y):
    q = 1 + y * y
    return (y * (1 + q * q / (x * x)), q / x)


def dp3_phi_hat(x, y):
    return (y / (1 + x), y * (1 + x + y) / (x * (1 + x) * (1 + x)))


def f0_psi(x, y):
    return (y, 1 / x)


def dp3_psi(x, y):
    return (y, y / x)


def f0_pi_tilde(x, y):
    q = 1 + y * y
    return (y * q / x, q / (x * y))


def dp3_pi_tilde(x, y):
    return (x, y / (1 + x))


def identity(x, y):
    return (x, y)


PLANAR_FORMULAS = {
    (MapId.F0, "phi_hat"): f0_phi_hat,
    (MapId.F0, "psi"): f0_psi,
    (MapId.F0, "pi_tilde"): f0_pi_tilde,
    (MapId.DP3, "phi_hat"): dp3_phi_hat,
    (MapId.DP3, "psi"): dp3_psi,
    (MapId.DP3, "pi_tilde"): dp3_pi_tilde,
}


def planar_formula(map_id: MapId, which: str):
    try:
        return PLANAR_FORMULAS[(map_id, which)]
    except KeyError:
        raise ValueError(f"no planar formula {which!r} for {map_id.value}") from None
