from typing import Callable, List, Optional
from pydantic import BaseModel, Field

from hallverdict.groups.schema import SimpleGroupId
from hallverdict.schemas.primeset_schema import PrimeSet
from hallverdict.schemas.trace_schema import ConditionTrace
from hallverdict.utils.constants import SCHEMA_VERSION

# ClassSpec.rule
RULE_ALL_PI_GROUPS = "gpi"
RULE_SOLVABLE_ONLY = "spi"
RULE_CUSTOM = "custom"

# FactorStatus.status
STATUS_IN_CLASS = "InClass"
STATUS_CONDITION_MET = "ConditionMet"
STATUS_FAILED = "Failed"


class ClassSpec(BaseModel):
    """a complete class X: its prime spectrum and which nonabelian simple groups it contains"""

    pi: PrimeSet
    rule: str = RULE_ALL_PI_GROUPS
    predicate: Optional[Callable[[SimpleGroupId], bool]] = None

    class Config:
        frozen = True
        arbitrary_types_allowed = True

    @classmethod
    def all_pi_groups(cls, pi: PrimeSet) -> "ClassSpec":
        """G_pi"""
        return cls(pi=pi, rule=RULE_ALL_PI_GROUPS)

    @classmethod
    def solvable_only(cls, pi: PrimeSet) -> "ClassSpec":
        """S_pi"""
        return cls(pi=pi, rule=RULE_SOLVABLE_ONLY)

    @classmethod
    def custom(cls, pi: PrimeSet, predicate: Callable[[SimpleGroupId], bool]) -> "ClassSpec":
        """the caller vouches that the rule defines a complete class"""
        return cls(pi=pi, rule=RULE_CUSTOM, predicate=predicate)

    def report(self) -> dict:
        return {"pi": self.pi.describe(), "rule": self.rule}


class FactorStatus(BaseModel):
    """verdict on one composition factor"""

    factor: SimpleGroupId
    status: str
    witness: Optional[ConditionTrace] = None
    traces: List[ConditionTrace] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status != STATUS_FAILED

    def report(self) -> dict:
        flags = sorted({flag for trace in self.traces for flag in trace.flags})
        return {
            "id": self.factor.label,
            "status": self.status,
            "witness_condition": self.witness.name if self.witness else None,
            "witness_realization": (
                self.witness.realization.label
                if self.witness and self.witness.realization
                else None
            ),
            "bindings": self.witness.bindings if self.witness else {},
            "flags": flags,
            "traces": [trace.report() for trace in self.traces],
        }


class Verdict(BaseModel):
    """answer plus the per-factor explanation"""

    answer: bool
    class_spec: ClassSpec
    per_factor: List[FactorStatus] = Field(default_factory=list)

    class Config:
        arbitrary_types_allowed = True

    def report(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "verdict": self.answer,
            "class": self.class_spec.report(),
            "factors": [status.report() for status in self.per_factor],
        }
