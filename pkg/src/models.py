"""
Configuration and report models using Pydantic for validation.
"""
from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

from .algebra import parse_rational_list

SCHEMA_VERSION = 1

CHECK_STATUSES = ("pass", "fail", "skipped")


class VerificationConfig(BaseModel):
    """Settings shared by the verification runner and the randomized checks."""

    seed: int = Field(0, description="Seed for numpy.random.RandomState")
    samples: int = Field(25, gt=0, description="Random samples per randomized check")
    long_mode: bool = Field(False, description="Run exhaustive symbolic checks")
    max_workers: Optional[int] = Field(None, description="Worker processes (defaults to CPU count)")
    group_budget: int = Field(200000, gt=0, description="Element budget for group closure")
    parallel: bool = Field(False, description="Fan sample checks out to worker processes")

    @field_validator("max_workers")
    @classmethod
    def validate_max_workers(cls, v):
        if v is not None and v < 1:
            raise ValueError(f"Invalid worker count {v}: must be >= 1")
        return v


# Arity of every rational list option
_ARITIES = {"x": 4, "matrix": 18, "z": 3, "xi": 4, "base": 5}


class CommandOptions(BaseModel):
    """Command line flags; rational lists are kept as text and checked on input."""

    x: Optional[str] = Field(None, description="Point of M as x1,x2,x3,x4")
    matrix: Optional[str] = Field(None, description="3x6 matrix as 18 rationals, row-major")
    z: Optional[str] = Field(None, description="Point of X(2,6) as z1,z2,z3")
    xi: Optional[str] = Field(None, description="Limit direction as xi1,xi2,xi3,xi4")
    base: Optional[str] = Field(None, description="Base point g1,...,g5")
    label: Optional[str] = Field(None, description="Coordinate label such as (123,456)")
    name: Optional[str] = Field(None, description="Generator name s1..s6 or sr")
    sections: List[str] = Field(default_factory=list, description="Verification sections")
    out: Optional[str] = Field(None, description="Write the JSON report to this file")

    @field_validator("x", "matrix", "z", "xi", "base")
    @classmethod
    def validate_rationals(cls, v, info):
        if v is not None:
            parse_rational_list(v, _ARITIES[info.field_name])
        return v

    def rationals(self, field: str) -> List[Fraction]:
        """The parsed values of a rational list option."""
        text = getattr(self, field)
        if text is None:
            raise ValueError(f"Option --{field} is required")
        return parse_rational_list(text, _ARITIES[field])


class CheckResult(BaseModel):
    """Outcome of a single verification check."""

    name: str
    status: str
    details: Dict[str, Any] = Field(default_factory=dict)

    @field_validator("status")
    @classmethod
    def validate_status(cls, v):
        if v not in CHECK_STATUSES:
            raise ValueError(f"Invalid status {v}: must be one of {CHECK_STATUSES}")
        return v


class Report(BaseModel):
    """Machine-readable result of one command."""

    schema_version: int = Field(SCHEMA_VERSION, serialization_alias="schema")
    command: str
    options: Dict[str, Any] = Field(default_factory=dict)
    result: Any = None
    checks: List[CheckResult] = Field(default_factory=list)
    derived: Dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def sorted(self) -> "Report":
        """Copy with checks ordered by name."""
        return self.model_copy(update={"checks": sorted(self.checks, key=lambda c: c.name)})

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)


class EquivarianceReport(BaseModel):
    """Extracted transformation table of one generator."""

    generator: str
    rows_checked: int
    cofactor: str
    cofactor_matches: bool
    printed_mismatches: List[int] = Field(default_factory=list)
    combinatorial_mismatches: List[int] = Field(default_factory=list)
    signed_targets: List[int] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.rows_checked == 40 and self.cofactor_matches
                and not self.printed_mismatches and not self.combinatorial_mismatches)
