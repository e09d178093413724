"""
Verification runner for the checks behind ``verify``.
"""

from .runner import CHECKS, DERIVED, SECTIONS, VerificationRunner, checks_for, derived_constants, run_check

__all__ = [
    "CHECKS",
    "DERIVED",
    "SECTIONS",
    "VerificationRunner",
    "checks_for",
    "derived_constants",
    "run_check",
]
