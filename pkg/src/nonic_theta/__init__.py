"""Formal and numeric verification of nonic and septic theta-function identities."""

from .checks import registry, run_check
from .report import CheckReport

__all__ = ["CheckReport", "registry", "run_check"]
