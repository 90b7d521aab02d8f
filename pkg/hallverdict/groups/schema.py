from typing import Optional
from pydantic import BaseModel

from hallverdict.groups import KIND_ALTERNATING, KIND_CYCLIC, KIND_LIE, KIND_SPORADIC


class SimpleGroupId(BaseModel):
    """descriptor of a finite simple group; which fields are set depends on kind"""

    kind: str
    p: Optional[int] = None
    n: Optional[int] = None
    name: Optional[str] = None
    family: Optional[str] = None
    rank: Optional[int] = None
    q: Optional[int] = None

    class Config:
        frozen = True

    @classmethod
    def cyclic(cls, p: int) -> "SimpleGroupId":
        """Cyc(p)"""
        return cls(kind=KIND_CYCLIC, p=p)

    @classmethod
    def alternating(cls, n: int) -> "SimpleGroupId":
        """Alt(n)"""
        return cls(kind=KIND_ALTERNATING, n=n)

    @classmethod
    def sporadic(cls, name: str) -> "SimpleGroupId":
        """Spor(name)"""
        return cls(kind=KIND_SPORADIC, name=name)

    @classmethod
    def lie(cls, family: str, rank: int, q: int) -> "SimpleGroupId":
        """Lie(family, rank, q)"""
        return cls(kind=KIND_LIE, family=family, rank=rank, q=q)

    @property
    def is_lie(self) -> bool:
        return self.kind == KIND_LIE

    @property
    def is_abelian(self) -> bool:
        return self.kind == KIND_CYCLIC

    @property
    def label(self) -> str:
        """the descriptor in the textual grammar"""
        if self.kind == KIND_CYCLIC:
            return f"Cyc({self.p})"
        if self.kind == KIND_ALTERNATING:
            return f"Alt({self.n})"
        if self.kind == KIND_SPORADIC:
            return f"Spor({self.name})"
        return f"Lie({self.family},{self.rank},{self.q})"

    def __str__(self) -> str:
        return self.label


class LieRealization(BaseModel):
    """one presentation of a simple group as a group of Lie type over F_q, q = p^k"""

    family: str
    rank: int
    q: int
    p: int

    class Config:
        frozen = True

    def group_id(self) -> SimpleGroupId:
        """the (not necessarily canonical) descriptor of this presentation"""
        return SimpleGroupId.lie(self.family, self.rank, self.q)

    @property
    def label(self) -> str:
        return f"{self.family}_{self.rank}({self.q})"

    def __str__(self) -> str:
        return self.label
