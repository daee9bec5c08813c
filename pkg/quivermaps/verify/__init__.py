from .base import capped, run_check
from .pipeline import resolve_suites, run_suite, run_verification
