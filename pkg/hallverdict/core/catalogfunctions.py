"""lookups in the tables of Hall subgroups of symmetric, alternating and sporadic groups"""

from functools import lru_cache
from math import factorial
from typing import List, Optional, Tuple

from hallverdict.arith.arith_service import prime_set
from hallverdict.groups.descriptors import sporadic_name
from hallverdict.groups.groups_service import prime_spectrum
from hallverdict.groups.schema import SimpleGroupId
from hallverdict.schemas.hall_schema import HallRecord
from hallverdict.schemas.primeset_schema import PrimeSet
from hallverdict.utils.custom_logger import CustomLogger
from hallverdict.utils.errors import HypothesisViolated, InvalidInput
from hallverdict.utils.helpers import load_seed

SYMMETRIC_SEED = "hall_symmetric.json"
SPORADIC_SEED = "hall_sporadic.json"

PRIME_DEGREE = "prime"

logger = CustomLogger("hallverdict")


@lru_cache(maxsize=1)
def symmetric_rows() -> Tuple[dict, ...]:
    """the rows of the symmetric-group table"""
    return tuple(load_seed(SYMMETRIC_SEED, "hallverdict.SymmetricHallRow"))


@lru_cache(maxsize=1)
def sporadic_rows() -> Tuple[dict, ...]:
    """the rows of the sporadic-group table"""
    return tuple(load_seed(SPORADIC_SEED, "hallverdict.SporadicHallRow"))


def _primes_below(n: int) -> List[int]:
    return prime_set(factorial(n - 1)) if n > 2 else []


def _symmetric_row(n: int, pi: PrimeSet) -> Optional[Tuple[dict, List[int]]]:
    if n < 5:
        raise InvalidInput(f"the table covers degrees n >= 5, got {n}")
    spectrum = prime_set(factorial(n))
    common = pi.intersect(spectrum)
    if len(common) <= 1 or pi.contains_all(spectrum):
        raise HypothesisViolated(
            f"Sym({n}), pi={pi.describe()}: needs |pi & pi(n!)| > 1 and pi(n!) not inside pi"
        )
    for row in symmetric_rows():
        if row["degree"] == PRIME_DEGREE:
            if n in spectrum and common == _primes_below(n):
                return row, common
        elif row["degree"] == n and common == sorted(row["pi"]):
            return row, common
    return None


def _concrete(structure: str, n: int) -> str:
    """substitute the degree into a row that is stated for every prime n"""
    return structure.replace("(n-1)", f"({n - 1})")


def hall_symmetric(n: int, pi: PrimeSet) -> Optional[HallRecord]:
    """the pi-Hall subgroup of Sym(n), or None when Sym(n) has none"""
    found = _symmetric_row(n, pi)
    if found is None:
        return None
    row, common = found
    return HallRecord(
        group=f"Sym({n})",
        pi_intersection=tuple(common),
        structure=_concrete(row["symmetric"], n),
    )


def hall_alternating(n: int, pi: PrimeSet) -> Optional[HallRecord]:
    """the pi-Hall subgroup of Alt(n): the intersection with Alt(n) of the one of Sym(n)"""
    found = _symmetric_row(n, pi)
    if found is None:
        return None
    row, common = found
    return HallRecord(
        group=f"Alt({n})",
        pi_intersection=tuple(common),
        structure=_concrete(row["alternating"], n),
        conjugacy_note=f"H & Alt({n}) for H = {_concrete(row['symmetric'], n)}",
    )


def hall_sporadic(name: str, pi: PrimeSet) -> List[HallRecord]:
    """every listed pi-Hall subgroup of a sporadic group (or the Tits group)"""
    name = sporadic_name(name)
    spectrum = prime_spectrum(SimpleGroupId.sporadic(name)).primes
    common = pi.intersect(spectrum)
    if 2 not in pi or pi.contains_all(spectrum) or len(common) <= 1:
        raise HypothesisViolated(
            f"{name}, pi={pi.describe()}: needs 2 in pi, pi(G) not inside pi and |pi & pi(G)| > 1"
        )
    records = [
        HallRecord(
            group=f"Spor({name})",
            pi_intersection=tuple(common),
            structure=row["structure"],
            conjugacy_note=row["note"],
        )
        for row in sporadic_rows()
        if row["group"] == name and sorted(row["pi"]) == common
    ]
    logger.debug("%d Hall records for %s, pi=%s", len(records), name, pi.describe())
    return records
