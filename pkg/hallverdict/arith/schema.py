from typing import Dict, List, Tuple
from pydantic import BaseModel, Field


class Factorization(BaseModel):
    """prime factorization of a natural number, primes ascending"""

    factors: List[Tuple[int, int]] = Field(default_factory=list)

    class Config:
        frozen = True

    @property
    def primes(self) -> List[int]:
        """pi(n)"""
        return [prime for prime, _ in self.factors]

    def as_dict(self) -> Dict[int, int]:
        """prime -> exponent"""
        return dict(self.factors)

    def value(self) -> int:
        """the number that was factored"""
        result = 1
        for prime, exponent in self.factors:
            result *= prime**exponent
        return result
