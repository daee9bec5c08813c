"""
Utilities Module.
"""

from .export import (
    create_csv_text,
    create_json_text,
    create_plot_csv_text,
    log10_text,
    orbit_rows,
)
from .logging import setup_logging

__all__ = [
    "create_csv_text",
    "create_json_text",
    "create_plot_csv_text",
    "log10_text",
    "orbit_rows",
    "setup_logging",
]
