# quivermaps/config.py
"""
Runtime configuration.
Edit this file (or set the environment variables) to tune orbit limits,
verification sampling and export formatting.
"""

import os

DYNAMICS_CONFIG = {
    # ═══════════════════════════════════════════════════════════════════
    # Orbit Engine Limits
    # ═══════════════════════════════════════════════════════════════════
    "orbit": {
        "phi_steps": 24,          # default steps for phi orbits (bit growth ~ n^2)
        "periodic_steps": 64,     # default steps for psi / phi_hat orbits
        "max_steps": 512,         # hard cap accepted by the CLI
        "burn_in": 8,             # growth probes start here
        "probes": 3,
    },

    # ═══════════════════════════════════════════════════════════════════
    # Verification Suites
    # ═══════════════════════════════════════════════════════════════════
    "verify": {
        "seed": int(os.getenv("QUIVERMAPS_SEED", "7")),
        "samples": int(os.getenv("QUIVERMAPS_SAMPLES", "200")),
        "workers": int(os.getenv("QUIVERMAPS_WORKERS", "1")),
        "height": 100,            # numerators/denominators drawn from 1..height
        "growth_height": 10,
        "oracle_height": 12,      # brute-force level-set search
        "oracle_param_height": 6,
        "orbit_steps": 24,
        "closed_form_steps": 12,
    },

    # ═══════════════════════════════════════════════════════════════════
    # Export
    # ═══════════════════════════════════════════════════════════════════
    "export": {
        "log_digits": 12,
    },

    "logging": {
        "level": os.getenv("QUIVERMAPS_LOG_LEVEL", "INFO"),
    },
}

# ═══════════════════════════════════════════════════════════════════
# Helper Functions
# ═══════════════════════════════════════════════════════════════════

def get_orbit_config() -> dict:
    """Get orbit settings with defaults."""
    defaults = {
        "phi_steps": 24,
        "periodic_steps": 64,
        "max_steps": 512,
        "burn_in": 8,
        "probes": 3,
    }
    return {**defaults, **DYNAMICS_CONFIG.get("orbit", {})}


def get_verify_config() -> dict:
    """Get verification settings with defaults."""
    defaults = {
        "seed": 7,
        "samples": 200,
        "workers": 1,
        "height": 100,
        "growth_height": 10,
        "oracle_height": 12,
        "oracle_param_height": 6,
        "orbit_steps": 24,
        "closed_form_steps": 12,
    }
    return {**defaults, **DYNAMICS_CONFIG.get("verify", {})}


def get_export_config() -> dict:
    return {"log_digits": 12, **DYNAMICS_CONFIG.get("export", {})}


def get_logging_config() -> dict:
    return {"level": "INFO", **DYNAMICS_CONFIG.get("logging", {})}


# ═══════════════════════════════════════════════════════════════════
# Available Suites and Maps (Single Source of Truth)
# ═══════════════════════════════════════════════════════════════════

AVAILABLE_SUITES = [
    "periodicity",
    "conjugacy",
    "closedform",
    "integrals",
    "varieties",
    "symplectic",
]

AVAILABLE_MAPS = ["f0", "dp3"]

AVAILABLE_WHICH = ["phi", "phihat", "psi"]


def get_available_suites() -> list[str]:
    """
    Get list of verification suites in run order.

    Returns:
        Copy of suite list to prevent external modification.
    """
    return AVAILABLE_SUITES.copy()


def get_available_maps() -> list[str]:
    return AVAILABLE_MAPS.copy()
