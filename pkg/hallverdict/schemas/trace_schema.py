from typing import Any, Dict, List, Optional
from pydantic import BaseModel, Field

from hallverdict.groups.schema import LieRealization

CONDITIONS = ("I", "II", "III", "IV", "V", "VI", "VII")


class ConditionTrace(BaseModel):
    """one evaluation of one condition on (S, pi) or on (realization, pi)"""

    condition: str
    subcase: Optional[str] = None
    realization: Optional[LieRealization] = None
    bindings: Dict[str, Any] = Field(default_factory=dict)
    satisfied: bool = False
    reason: Optional[str] = None
    flags: List[str] = Field(default_factory=list)
    witness: bool = False

    @property
    def outcome(self) -> str:
        return "satisfied" if self.satisfied else "failed"

    @property
    def rank(self) -> int:
        """position of the condition in I..VII"""
        return CONDITIONS.index(self.condition)

    @property
    def name(self) -> str:
        """e.g. IV.1, or II when there is no subcase"""
        if self.subcase:
            return f"{self.condition}.{self.subcase}"
        return self.condition

    def report(self) -> dict:
        """json-ready form"""
        return {
            "condition": self.name,
            "realization": self.realization.label if self.realization else None,
            "outcome": self.outcome,
            "reason": self.reason,
            "bindings": self.bindings,
            "flags": sorted(self.flags),
        }
