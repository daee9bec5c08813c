"""Pydantic models for points, orbit records and verification reports."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


POINT_ARITIES = (2, 4, 6)


class MapId(Enum):
    F0 = "f0"
    DP3 = "dp3"


def _to_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise ValueError(f"float {value!r} is not an exact scalar")
    return Fraction(value)


class ExactModel(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class Point(ExactModel):
    coords: tuple[Fraction, ...]

    @field_validator("coords", mode="before")
    @classmethod
    def _coerce(cls, value: Any) -> tuple[Fraction, ...]:
        return tuple(_to_fraction(item) for item in value)

    @model_validator(mode="after")
    def _check_phase_space(self) -> "Point":
        if len(self.coords) not in POINT_ARITIES:
            raise ValueError(f"arity must be one of {POINT_ARITIES}, got {len(self.coords)}")
        for idx, coord in enumerate(self.coords, start=1):
            if coord <= 0:
                raise ValueError(f"coordinate x{idx} must be positive, got {coord}")
        return self

    @classmethod
    def of(cls, *coords: Any) -> "Point":
        return cls(coords=coords)

    @property
    def arity(self) -> int:
        return len(self.coords)

    def __getitem__(self, idx: int) -> Fraction:
        return self.coords[idx]

    def __len__(self) -> int:
        return len(self.coords)

    def bit_length(self) -> int:
        return max(
            max(c.numerator.bit_length(), c.denominator.bit_length()) for c in self.coords
        )

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


class IntegralValues(ExactModel):
    j1: Fraction
    j2: Fraction

    @field_validator("j1", "j2", mode="before")
    @classmethod
    def _coerce(cls, value: Any) -> Fraction:
        return _to_fraction(value)


class KConstants(ExactModel):
    k1: Fraction
    k2: Fraction
    map_id: MapId
    a: Fraction
    b: Fraction

    @field_validator("k1", "k2", "a", "b", mode="before")
    @classmethod
    def _coerce(cls, value: Any) -> Fraction:
        return _to_fraction(value)

    def inequalities_hold(self) -> bool:
        if self.map_id is MapId.F0:
            return self.k1 > 1 and self.k2 > 1 and self.k2 / self.k1 > 1
        return self.k1 > 2 and self.k2 > 3


class VarietyC(ExactModel):
    map_id: MapId
    a: Fraction
    b: Fraction

    @field_validator("a", "b", mode="before")
    @classmethod
    def _coerce(cls, value: Any) -> Fraction:
        return _to_fraction(value)

    @model_validator(mode="after")
    def _check_params(self) -> "VarietyC":
        if self.a <= 0 or self.b <= 0:
            raise ValueError("variety parameters must be positive")
        return self

    @property
    def label(self) -> Point:
        return Point.of(self.a, self.b)


class VarietyD(ExactModel):
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    @field_validator("a", "b", "c", "d", mode="before")
    @classmethod
    def _coerce(cls, value: Any) -> Fraction:
        return _to_fraction(value)

    @model_validator(mode="after")
    def _check_params(self) -> "VarietyD":
        if min(self.a, self.b, self.c, self.d) <= 0:
            raise ValueError("variety parameters must be positive")
        return self

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)


class OrbitRecord(ExactModel):
    n: int = Field(ge=0)
    point: Point
    sheet: Optional[int] = None
    integrals: IntegralValues


class OrbitSummary(ExactModel):
    steps: int = Field(ge=0)
    period_found: Optional[int] = None
    min_component_growth: list[tuple[int, Fraction]] = Field(default_factory=list)
    bitlength_series: list[tuple[int, int]] = Field(default_factory=list)


class OrbitRun(ExactModel):
    map_id: MapId
    which: Literal["phi", "phi_hat", "psi"]
    records: list[OrbitRecord]
    summary: OrbitSummary


class ComparisonRow(ExactModel):
    n: int
    formula: str
    passed: bool
    bit_length: int


class ClosedFormReport(ExactModel):
    map_id: MapId
    start: Point
    comparisons: list[ComparisonRow] = Field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(row.passed for row in self.comparisons)


class GrowthRow(ExactModel):
    n: int
    increased: bool


class GrowthReport(ExactModel):
    map_id: MapId
    burn_in: int
    probes: int
    passed: bool
    rows: list[GrowthRow] = Field(default_factory=list)


class CheckResult(BaseModel):
    name: str
    total: int = Field(ge=0)
    failures: int = Field(ge=0)
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0


class SuiteResult(BaseModel):
    name: str
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


class VerifyReport(BaseModel):
    seed: int
    samples: int
    suites: list[SuiteResult]

    @property
    def passed(self) -> bool:
        return all(suite.passed for suite in self.suites)


class LevelSetReport(ExactModel):
    map_id: MapId
    anchor: Point
    points: list[Point]
    orbit_anchor: list[Point]
    orbit_reflected: list[Point]
    jacobian: Fraction
    case: Literal["i", "ii"]
    consistent: bool
