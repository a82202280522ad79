import json
from pathlib import Path
from typing import Any, Literal, Optional

from pydantic import BaseModel, Field, computed_field

from stanley.config import Limits

__all__ = ["Check", "InstanceReport", "Violation", "VerificationReport"]

Relation = Literal[">=", "==", "holds"]


class Check(BaseModel):
    """
    One verified statement. Inequalities and equalities keep both sides so the
    report shows the slack; plain claims only carry :code:`holds`.
    """

    name: str
    holds: bool
    relation: Relation = "holds"
    lhs: Optional[int] = None
    rhs: Optional[int] = None
    detail: Optional[str] = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def slack(self) -> Optional[int]:
        if self.lhs is None or self.rhs is None:
            return None
        return self.lhs - self.rhs

    @classmethod
    def at_least(
        cls, name: str, lhs: int, rhs: int, detail: Optional[str] = None
    ) -> "Check":
        return cls(
            name=name, holds=lhs >= rhs, relation=">=", lhs=lhs, rhs=rhs, detail=detail
        )

    @classmethod
    def equal(
        cls, name: str, lhs: int, rhs: int, detail: Optional[str] = None
    ) -> "Check":
        return cls(
            name=name, holds=lhs == rhs, relation="==", lhs=lhs, rhs=rhs, detail=detail
        )

    @classmethod
    def claim(cls, name: str, holds: bool, detail: Optional[str] = None) -> "Check":
        return cls(name=name, holds=holds, detail=detail)

    def __str__(self) -> str:
        if self.relation == "holds":
            text = f"{self.name}: {'holds' if self.holds else 'fails'}"
        else:
            text = f"{self.name}: {self.lhs} {self.relation} {self.rhs}"
        return f"{text} ({self.detail})" if self.detail else text


class InstanceReport(BaseModel):
    id: str
    command: str
    n: int
    m: int
    d: Optional[int] = None
    generators: list[list[int]]
    chordal: Optional[bool] = None
    depth_oracle: Optional[int] = None
    depth_lq: Optional[int] = None
    sdepth_ideal: Optional[int] = None
    sdepth_quotient: Optional[int] = None
    sv_restricted: Optional[int] = None
    torsion_free: Optional[bool] = None
    checks: list[Check] = Field(default_factory=list)
    skipped: list[str] = Field(default_factory=list)
    certificates: dict[str, Any] = Field(default_factory=dict)

    def failures(self) -> list[Check]:
        return [check for check in self.checks if not check.holds]


class Violation(BaseModel):
    instance: str
    check: Check
    bundle: Optional[str] = None


class VerificationReport(BaseModel):
    """
    Per-instance results in instance-id order. :code:`violation` names the first
    failed check; instances after it were not verified.
    """

    seed: Optional[int] = None
    limits: Limits = Field(default_factory=Limits.default)
    trim: bool = False
    instances: list[InstanceReport] = Field(default_factory=list)
    violation: Optional[Violation] = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def summary(self) -> dict[str, int]:
        checks = [check for report in self.instances for check in report.checks]
        return {
            "instances": len(self.instances),
            "checks": len(checks),
            "failed": sum(1 for check in checks if not check.holds),
            "skipped": sum(len(report.skipped) for report in self.instances),
        }

    @property
    def ok(self) -> bool:
        return self.violation is None

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"

    def write(self, path: "Path | str") -> Path:
        path = Path(path)
        path.write_text(self.to_json(), encoding="utf-8")
        return path
