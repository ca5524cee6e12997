"""
Data models for Monotone Hurwitz Lab.

Defines Pydantic models for queries, reports, persisted records and run
configuration. Hot-path values (partitions, permutations, series) are plain
classes elsewhere; these models sit at the boundaries.
"""

from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator

from ..exact.arithmetic import render_exact
from ..exact.partitions import Partition

# Hard limits that no configuration may exceed
HARD_LIMITS = {
    "monotone_d_max": 9,
    "monotone_r_max": 16,
    "classical_d_max": 8,
    "classical_r_max": 12,
    "rank_d_max": 6,
    "rank_r_max": 6,
    "jm_d_max": 9,
    "weight": 12,
    "r_max": 20,
    "degree": 16,
    "genus": 4,
    "points": 4,
}

SUITES = (
    "oracle-vs-recurrence",
    "closed-form",
    "jm-total",
    "exp-log",
    "joincut",
    "operator-genus",
    "f3d",
    "toprec",
    "all",
)


class FactorizationMode(str, Enum):
    """Which factor set the oracle enumerates."""

    MONOTONE = "monotone"
    CLASSICAL = "classical"
    RANK_WEIGHTED = "rank-weighted"


class EnumerationBounds(BaseModel):
    """Brute-force enumeration limits (overridable from env and CLI)."""

    monotone_d_max: int = Field(default=7, ge=1, description="Largest d for monotone enumeration")
    monotone_r_max: int = Field(default=12, ge=0, description="Largest r for monotone enumeration")
    classical_d_max: int = Field(default=6, ge=1, description="Largest d for classical enumeration")
    classical_r_max: int = Field(default=8, ge=0, description="Largest r for classical enumeration")
    rank_d_max: int = Field(default=5, ge=1, description="Largest d for rank-weighted enumeration")
    rank_r_max: int = Field(default=4, ge=0, description="Largest r for rank-weighted enumeration")

    @field_validator("*")
    @classmethod
    def validate_hard_limit(cls, v: int, info) -> int:
        """Validate that each bound stays under its hard limit."""
        limit = HARD_LIMITS[info.field_name]
        if v > limit:
            raise ValueError(f"{info.field_name}={v} exceeds hard limit {limit}")
        return v


class FactorizationQuery(BaseModel):
    """One brute-force counting request."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    alpha: Partition = Field(description="Target cycle type")
    r: int = Field(ge=0, description="Number of factors")
    mode: FactorizationMode = Field(default=FactorizationMode.MONOTONE)
    transitive_only: bool = Field(default=True)
    genus: Optional[int] = Field(default=None, ge=0, description="Genus (rank-weighted mode only)")

    @field_validator("alpha", mode="before")
    @classmethod
    def validate_alpha(cls, v) -> Partition:
        """Coerce to a canonical partition of weight at least 1."""
        alpha = v if isinstance(v, Partition) else Partition(v)
        if alpha.weight < 1:
            raise ValueError("target cycle type must have weight d >= 1")
        return alpha


class FormulaReport(BaseModel):
    """Exact evaluation of one closed formula, with its cross-check."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    alpha: Partition
    formula: str = Field(description="Formula identifier: monotone-genus0, classical-genus0, bms-genus0, ...")
    value: Fraction
    integral: bool
    reference: Optional[Fraction] = Field(None, description="Independent value it was compared with")
    status: Literal["agrees", "disagrees", "unchecked", "unreconciled"] = "unchecked"

    @field_serializer("alpha")
    def serialize_alpha(self, alpha: Partition) -> List[int]:
        return list(alpha)

    @field_serializer("value", "reference")
    def serialize_exact(self, value: Optional[Fraction]) -> Optional[str]:
        return None if value is None else render_exact(value)


class DiscrepancyRecord(BaseModel):
    """A documented, non-failing disagreement between two published values."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    label: str
    alpha: Partition
    r: Optional[int] = None
    claimed: Fraction = Field(description="Value of the printed formula or inline claim")
    enumerated: Fraction = Field(description="Value from enumeration or the main formula")
    status: Literal["unreconciled"] = "unreconciled"

    @field_serializer("alpha")
    def serialize_alpha(self, alpha: Partition) -> List[int]:
        return list(alpha)

    @field_serializer("claimed", "enumerated")
    def serialize_exact(self, value: Fraction) -> str:
        return render_exact(value)


class MemoHeader(BaseModel):
    """First line of a memo cache file."""

    format: Literal["monotone-memo"] = "monotone-memo"
    version: Literal[1] = 1


class MemoRecord(BaseModel):
    """One persisted memo cell."""

    alpha: List[int] = Field(min_length=1)
    r: int = Field(ge=0)
    M: str = Field(pattern=r"^-?\d+$", description="Exact decimal integer")


class SeriesRecord(BaseModel):
    """One coefficient line of a series dump."""

    alpha: List[int]
    r: int
    x: List[int]
    c: str = Field(pattern=r"^-?\d+/\d+$")


class TableRow(BaseModel):
    """One JSON table row."""

    alpha: List[int]
    genus: int = Field(ge=0)
    r: int = Field(ge=0)
    value: str


class ReconcileReport(BaseModel):
    """Outcome of comparing a topological-recursion table with other methods."""

    g: int
    points: int
    degree: int
    checked: int = 0
    closed_form_checked: int = 0
    symmetric: bool = True
    mismatches: List[str] = Field(default_factory=list)

    @property
    def matches(self) -> bool:
        return self.symmetric and not self.mismatches


class SuiteResult(BaseModel):
    """Outcome of one verification suite."""

    name: str
    passed: bool
    checks: int = 0
    first_failure: Optional[str] = None
    notes: List[str] = Field(default_factory=list)
    discrepancies: List[DiscrepancyRecord] = Field(default_factory=list)


class RunConfig(BaseModel):
    """Resolved command-line configuration."""

    command: Literal["compute", "table", "verify", "cache"]
    kind: Optional[str] = None
    alpha: Optional[str] = None
    genus: Optional[int] = Field(None, ge=0)
    r: Optional[int] = Field(None, ge=0)
    method: Optional[str] = None
    all_methods: bool = False
    d_max: int = Field(default=4, ge=1)
    genus_max: int = Field(default=0, ge=0)
    r_max: int = Field(default=8, ge=0)
    degree: int = Field(default=6, ge=0)
    points: int = Field(default=1, ge=1)
    weight: int = Field(default=6, ge=1)
    output_format: Literal["csv", "json", "plain"] = "plain"
    output: Optional[Path] = None
    cache_path: Optional[Path] = None
    suite: str = "all"
    action: Optional[str] = None
    workers: int = Field(default=1, ge=1)
    stats: bool = False

    @field_validator("suite")
    @classmethod
    def validate_suite(cls, v: str) -> str:
        """Validate the suite selector."""
        if v not in SUITES:
            raise ValueError(f"unknown suite {v!r}; choose from {', '.join(SUITES)}")
        return v

    @field_validator("d_max", "weight")
    @classmethod
    def validate_weight_cap(cls, v: int) -> int:
        """Validate weight-like caps against the hard limit."""
        if v > HARD_LIMITS["weight"]:
            raise ValueError(f"cap {v} exceeds hard limit {HARD_LIMITS['weight']}")
        return v

    @field_validator("r_max")
    @classmethod
    def validate_r_cap(cls, v: int) -> int:
        """Validate the t-degree cap."""
        if v > HARD_LIMITS["r_max"]:
            raise ValueError(f"r-max {v} exceeds hard limit {HARD_LIMITS['r_max']}")
        return v

    @field_validator("degree")
    @classmethod
    def validate_degree(cls, v: int) -> int:
        """Validate the catalyst degree cap."""
        if v > HARD_LIMITS["degree"]:
            raise ValueError(f"degree {v} exceeds hard limit {HARD_LIMITS['degree']}")
        return v

    @field_validator("genus_max")
    @classmethod
    def validate_genus_max(cls, v: int) -> int:
        """Validate the genus cap."""
        if v > HARD_LIMITS["genus"]:
            raise ValueError(f"genus-max {v} exceeds hard limit {HARD_LIMITS['genus']}")
        return v

    @field_validator("points")
    @classmethod
    def validate_points(cls, v: int) -> int:
        """Validate the number of catalyst points."""
        if v > HARD_LIMITS["points"]:
            raise ValueError(f"points {v} exceeds hard limit {HARD_LIMITS['points']}")
        return v
