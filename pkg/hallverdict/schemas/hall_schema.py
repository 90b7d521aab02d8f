from typing import Optional, Tuple
from pydantic import BaseModel

from hallverdict.core.structure import structure_order


class HallRecord(BaseModel):
    """a pi-Hall subgroup listed for a symmetric, alternating or sporadic group"""

    group: str
    pi_intersection: Tuple[int, ...]
    structure: str
    conjugacy_note: Optional[str] = None

    class Config:
        frozen = True

    @property
    def order(self) -> int:
        """order implied by the structure string"""
        return structure_order(self.structure)

    def report(self) -> dict:
        """json-ready form"""
        return {
            "group": self.group,
            "pi": list(self.pi_intersection),
            "structure": self.structure,
            "notes": self.conjugacy_note,
        }
