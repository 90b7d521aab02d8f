from typing import Tuple
from pydantic import BaseModel


class SubgroupRecord(BaseModel):
    """a pi-subgroup of a PermGroup, as sorted indices into the group's element list"""

    elements: Tuple[int, ...]
    order: int
    is_pi_group: bool = True
    class_id: int

    class Config:
        frozen = True


class SubgroupClass(BaseModel):
    """a conjugacy class of pi-subgroups"""

    class_id: int
    order: int
    size: int
    maximal: bool
    representative: Tuple[int, ...]

    def report(self) -> dict:
        """json-ready form"""
        return {"order": self.order, "count": self.size, "maximal": self.maximal}
