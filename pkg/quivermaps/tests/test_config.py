# test_config.py
"""Unit tests for runtime configuration."""

import os
import sys

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..")))


def test_get_available_suites():
    """Suites come back in run order as a copy."""
    from quivermaps.config import AVAILABLE_SUITES, get_available_suites

    suites = get_available_suites()

    assert suites[0] == "periodicity"
    assert set(suites) == {"periodicity", "conjugacy", "closedform", "integrals", "varieties", "symplectic"}

    suites.append("extra")
    assert "extra" not in AVAILABLE_SUITES


def test_every_suite_has_a_module():
    from quivermaps.config import get_available_suites
    from quivermaps.verify.suites import SUITE_MODULES

    assert set(get_available_suites()) == set(SUITE_MODULES)


def test_available_maps_resolve():
    from quivermaps.config import get_available_maps
    from quivermaps.maps.registry import resolve_map

    for name in get_available_maps():
        assert resolve_map(name).value == name


def test_orbit_defaults():
    from quivermaps.config import get_orbit_config

    cfg = get_orbit_config()

    assert cfg["burn_in"] >= 8
    assert cfg["probes"] >= 2
    assert 0 < cfg["phi_steps"] <= cfg["max_steps"]
    assert cfg["periodic_steps"] <= cfg["max_steps"]


def test_verify_defaults():
    from quivermaps.config import get_verify_config

    cfg = get_verify_config()

    assert cfg["samples"] >= 1
    assert cfg["workers"] >= 1
    assert cfg["growth_height"] <= cfg["height"]


def test_export_digits():
    from quivermaps.config import get_export_config

    assert get_export_config()["log_digits"] == 12
