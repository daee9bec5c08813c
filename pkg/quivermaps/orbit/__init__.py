from .engine import growth_probe, orbit_projection_matches, run_orbit, validate_closed_form
