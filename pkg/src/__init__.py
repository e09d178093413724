"""
Cubic Surface Moduli Embedding

Exact verification toolkit for the W(E6)-equivariant embedding of the moduli
space of marked cubic surfaces into P^39.
"""

__version__ = "1.0.0"
__author__ = "Cubic Moduli Embedding"

from .errors import CubicModuliError
from .models import CheckResult, CommandOptions, Report, VerificationConfig

__all__ = [
    "CubicModuliError",
    "CheckResult",
    "CommandOptions",
    "Report",
    "VerificationConfig",
]
