from typing import Iterable, List, Tuple
from pydantic import BaseModel, validator
from sympy import isprime

from hallverdict.utils.errors import InvalidInput

COFINITE_PREFIX = "excluded:"


class PrimeSet(BaseModel):
    """a finite set of primes, or the complement of one"""

    cofinite: bool = False
    primes: Tuple[int, ...] = ()

    class Config:
        frozen = True

    @validator("primes")
    def check_primes(cls, value):  # skipcq: PYL-E0213
        """entries are distinct primes, kept sorted"""
        for prime in value:
            if not isprime(prime):
                raise ValueError(f"{prime} is not a prime")
        if len(set(value)) != len(value):
            raise ValueError("repeated prime")
        return tuple(sorted(value))

    @classmethod
    def finite(cls, primes: Iterable[int]) -> "PrimeSet":
        return cls(cofinite=False, primes=tuple(sorted(set(primes))))

    @classmethod
    def excluding(cls, primes: Iterable[int]) -> "PrimeSet":
        """every prime except the given ones"""
        return cls(cofinite=True, primes=tuple(sorted(set(primes))))

    @classmethod
    def parse(cls, text: str) -> "PrimeSet":
        """'2,3' or 'excluded:7,11'"""
        text = text.strip()
        cofinite = text.startswith(COFINITE_PREFIX)
        if cofinite:
            text = text[len(COFINITE_PREFIX) :]
        try:
            primes = [int(item) for item in text.split(",") if item.strip()]
        except ValueError as error:
            raise InvalidInput(f"cannot parse prime set '{text}'") from error
        try:
            return cls.excluding(primes) if cofinite else cls.finite(primes)
        except ValueError as error:
            raise InvalidInput(f"invalid prime set '{text}': {error}") from error

    def __contains__(self, prime: int) -> bool:
        return (prime in self.primes) != self.cofinite

    def intersect(self, primes: Iterable[int]) -> List[int]:
        """pi & primes, sorted; primes is finite"""
        return sorted({prime for prime in primes if prime in self})

    def contains_all(self, primes: Iterable[int]) -> bool:
        return all(prime in self for prime in primes)

    def as_set(self) -> set:
        """the members of a finite set"""
        if self.cofinite:
            raise InvalidInput("a cofinite prime set cannot be enumerated")
        return set(self.primes)

    def describe(self) -> str:
        text = ",".join(str(prime) for prime in self.primes)
        return COFINITE_PREFIX + text if self.cofinite else text

    def __str__(self) -> str:
        return self.describe()
