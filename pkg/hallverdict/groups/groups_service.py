"""orders, prime spectra, exceptional isomorphisms and Lie realizations of finite simple groups"""

from functools import lru_cache
from math import factorial, gcd
from typing import Dict, List, Optional, Tuple

from sympy import divisors, isprime

from hallverdict.arith.arith_service import cyclotomic_value, prime_factorization, prime_set
from hallverdict.groups import KIND_ALTERNATING, KIND_CYCLIC, KIND_LIE, KIND_SPORADIC
from hallverdict.groups.schema import LieRealization, SimpleGroupId
from hallverdict.schemas.primeset_schema import PrimeSet
from hallverdict.utils.constants import (
    EXCEPTIONAL_WEYL,
    FAMILY_2A,
    FAMILY_2B2,
    FAMILY_2D,
    FAMILY_2E6,
    FAMILY_2F4,
    FAMILY_2G2,
    FAMILY_3D4,
    FAMILY_A,
    FAMILY_B,
    FAMILY_C,
    FAMILY_D,
    FAMILY_E6,
    FAMILY_E7,
    FAMILY_E8,
    FAMILY_F4,
    FAMILY_G2,
    FIXED_RANK,
    FIXED_SUBSCRIPT,
    LIE_FAMILIES,
    MIN_RANK,
    NON_SIMPLE_LIE,
    ORDER_COLLISIONS,
    SPORADIC_NAMES,
    SPORADIC_ORDERS,
    WEYL_AMBIENT,
)
from hallverdict.utils.custom_logger import CustomLogger
from hallverdict.utils.errors import NotSimple, UnrecognizedSimpleGroup

logger = CustomLogger("hallverdict")


# ================================================================================================
def characteristic(q: int) -> Optional[int]:
    """p with q = p^k, or None when q is not a prime power"""
    if q < 2:
        return None
    factors = prime_factorization(q).factors
    if len(factors) != 1:
        return None
    return factors[0][0]


def _field_degree(q: int, p: int) -> int:
    degree = 0
    while q > 1:
        q //= p
        degree += 1
    return degree


def validate(group: SimpleGroupId) -> SimpleGroupId:
    """return the descriptor if it denotes a finite simple group, raise NotSimple otherwise"""
    if group.kind == KIND_CYCLIC:
        if group.p is None or not isprime(group.p):
            raise NotSimple(f"Cyc({group.p}): the order of a simple cyclic group is prime")
        return group
    if group.kind == KIND_ALTERNATING:
        if group.n is None or group.n < 5:
            raise NotSimple(f"Alt({group.n}) is not simple, the degree must be at least 5")
        return group
    if group.kind == KIND_SPORADIC:
        if group.name not in SPORADIC_NAMES:
            raise NotSimple(f"'{group.name}' is not a sporadic group")
        return group
    if group.kind != KIND_LIE:
        raise NotSimple(f"unknown kind '{group.kind}'")

    family, rank, q = group.family, group.rank, group.q
    if family not in LIE_FAMILIES:
        raise NotSimple(f"unknown Lie family '{family}'")
    p = characteristic(q) if q is not None else None
    if p is None:
        raise NotSimple(f"{group.label}: q = {q} is not a prime power")
    if family in FIXED_RANK:
        if rank not in (FIXED_RANK[family], FIXED_SUBSCRIPT[family]):
            raise NotSimple(f"{group.label}: {family} has rank {FIXED_RANK[family]}")
        rank = FIXED_RANK[family]
    elif rank is None or rank < MIN_RANK[family]:
        raise NotSimple(f"{group.label}: {family} needs rank at least {MIN_RANK[family]}")
    reason = NON_SIMPLE_LIE.get((family, rank, q))
    if reason is not None:
        raise NotSimple(f"{group.label}: {reason}")
    if family in (FAMILY_2B2, FAMILY_2F4) and (p != 2 or _field_degree(q, p) % 2 == 0):
        raise NotSimple(f"{group.label}: q must be an odd power of 2")
    if family == FAMILY_2G2 and (p != 3 or _field_degree(q, p) % 2 == 0):
        raise NotSimple(f"{group.label}: q must be an odd power of 3")
    return group


# exceptional isomorphisms onto the chosen representative
_ISOMORPHISMS = {
    (FAMILY_A, 1, 4): SimpleGroupId.alternating(5),
    (FAMILY_A, 1, 5): SimpleGroupId.alternating(5),
    (FAMILY_A, 1, 9): SimpleGroupId.alternating(6),
    (FAMILY_A, 3, 2): SimpleGroupId.alternating(8),
    (FAMILY_A, 2, 2): SimpleGroupId.lie(FAMILY_A, 1, 7),
    (FAMILY_2A, 3, 2): SimpleGroupId.lie(FAMILY_B, 2, 3),
}

# canonical representative -> its Lie presentations other than itself
_ALIASES = {
    SimpleGroupId.alternating(5): [(FAMILY_A, 1, 4), (FAMILY_A, 1, 5)],
    SimpleGroupId.alternating(6): [(FAMILY_A, 1, 9)],
    SimpleGroupId.alternating(8): [(FAMILY_A, 3, 2)],
    SimpleGroupId.lie(FAMILY_A, 1, 7): [(FAMILY_A, 2, 2)],
    SimpleGroupId.lie(FAMILY_B, 2, 3): [(FAMILY_C, 2, 3), (FAMILY_2A, 3, 2)],
}


def canonicalize(group: SimpleGroupId) -> SimpleGroupId:
    """map a validated descriptor to the representative of its isomorphism class"""
    if group.kind != KIND_LIE:
        return group
    family, rank, q = group.family, group.rank, group.q
    if family in FIXED_RANK:
        rank = FIXED_RANK[family]
    target = _ISOMORPHISMS.get((family, rank, q))
    if target is not None:
        return target
    if family == FAMILY_B and q % 2 == 0:
        return SimpleGroupId.lie(FAMILY_C, rank, q)
    if family == FAMILY_C and rank == 2 and q % 2 == 1:
        return SimpleGroupId.lie(FAMILY_B, rank, q)
    return SimpleGroupId.lie(family, rank, q)


# ================================================================================================
def _minus(d: int) -> List[int]:
    """cyclotomic indices of q^d - 1"""
    return list(divisors(d))


def _plus(d: int) -> List[int]:
    """cyclotomic indices of q^d + 1"""
    return [k for k in divisors(2 * d) if d % k != 0]


def _lie_order_data(family: str, rank: int, q: int) -> Tuple[int, List[int], int]:
    """(N, cyclotomic indices k, d) with |S| = q^N prod Phi_k(q) / d"""
    n = rank
    if family == FAMILY_A:
        indices = [k for i in range(1, n + 1) for k in _minus(i + 1)]
        return n * (n + 1) // 2, indices, gcd(n + 1, q - 1)
    if family == FAMILY_2A:
        indices = []
        for i in range(1, n + 1):
            indices += _minus(i + 1) if (i + 1) % 2 == 0 else _plus(i + 1)
        return n * (n + 1) // 2, indices, gcd(n + 1, q + 1)
    if family in (FAMILY_B, FAMILY_C):
        indices = [k for i in range(1, n + 1) for k in _minus(2 * i)]
        return n * n, indices, gcd(2, q - 1)
    if family == FAMILY_D:
        indices = _minus(n) + [k for i in range(1, n) for k in _minus(2 * i)]
        return n * (n - 1), indices, gcd(4, q**n - 1)
    if family == FAMILY_2D:
        indices = _plus(n) + [k for i in range(1, n) for k in _minus(2 * i)]
        return n * (n - 1), indices, gcd(4, q**n + 1)
    if family == FAMILY_3D4:
        # q^8 + q^4 + 1 = (q^12 - 1) / (q^4 - 1)
        indices = [k for k in divisors(12) if 4 % k != 0] + _minus(6) + _minus(2)
        return 12, indices, 1
    if family == FAMILY_E6:
        indices = [k for d in (12, 9, 8, 6, 5, 2) for k in _minus(d)]
        return 36, indices, gcd(3, q - 1)
    if family == FAMILY_2E6:
        indices = _minus(12) + _plus(9) + _minus(8) + _minus(6) + _plus(5) + _minus(2)
        return 36, indices, gcd(3, q + 1)
    if family == FAMILY_E7:
        indices = [k for d in (18, 14, 12, 10, 8, 6, 2) for k in _minus(d)]
        return 63, indices, gcd(2, q - 1)
    if family == FAMILY_E8:
        indices = [k for d in (30, 24, 20, 18, 14, 12, 8, 2) for k in _minus(d)]
        return 120, indices, 1
    if family == FAMILY_F4:
        indices = [k for d in (12, 8, 6, 2) for k in _minus(d)]
        return 24, indices, 1
    if family == FAMILY_G2:
        return 6, _minus(6) + _minus(2), 1
    if family == FAMILY_2B2:
        return 2, _plus(2) + _minus(1), 1
    if family == FAMILY_2G2:
        return 3, _plus(3) + _minus(1), 1
    if family == FAMILY_2F4:
        return 12, _plus(6) + _minus(4) + _plus(3) + _minus(1), 1
    raise NotSimple(f"unknown Lie family '{family}'")


@lru_cache(maxsize=4096)
def order(group: SimpleGroupId) -> int:
    """exact order of a validated simple group"""
    if group.kind == KIND_CYCLIC:
        return group.p
    if group.kind == KIND_ALTERNATING:
        return factorial(group.n) // 2
    if group.kind == KIND_SPORADIC:
        result = 1
        for prime, exponent in SPORADIC_ORDERS[group.name].items():
            result *= prime**exponent
        return result
    rank = FIXED_RANK.get(group.family, group.rank)
    exponent, indices, divisor = _lie_order_data(group.family, rank, group.q)
    result = group.q**exponent
    for k in indices:
        result *= cyclotomic_value(k, group.q)
    return result // divisor


@lru_cache(maxsize=4096)
def _spectrum(group: SimpleGroupId) -> Tuple[int, ...]:
    if group.kind == KIND_CYCLIC:
        return (group.p,)
    if group.kind == KIND_ALTERNATING:
        return tuple(prime_set(factorial(group.n) // 2))
    if group.kind == KIND_SPORADIC:
        return tuple(sorted(SPORADIC_ORDERS[group.name]))
    # factor the cyclotomic pieces of the order instead of the order itself
    rank = FIXED_RANK.get(group.family, group.rank)
    _, indices, _ = _lie_order_data(group.family, rank, group.q)
    candidates = {characteristic(group.q)}
    for k in set(indices):
        candidates.update(prime_set(cyclotomic_value(k, group.q)))
    group_order = order(group)
    return tuple(sorted(prime for prime in candidates if group_order % prime == 0))


def prime_spectrum(group: SimpleGroupId) -> PrimeSet:
    """pi(S) as a finite prime set"""
    return PrimeSet.finite(_spectrum(group))


# ================================================================================================
def _realization(family: str, rank: int, q: int) -> LieRealization:
    return LieRealization(family=family, rank=rank, q=q, p=characteristic(q))


def lie_realizations(group: SimpleGroupId) -> List[LieRealization]:
    """every presentation of the group as a group of Lie type, the canonical one first"""
    canonical = canonicalize(validate(group))
    realizations = []
    if canonical.kind == KIND_LIE:
        realizations.append(_realization(canonical.family, canonical.rank, canonical.q))
    for family, rank, q in _ALIASES.get(canonical, []):
        realizations.append(_realization(family, rank, q))
    if canonical.kind == KIND_LIE and canonical not in _ALIASES:
        family, rank, q = canonical.family, canonical.rank, canonical.q
        if family == FAMILY_C and q % 2 == 0:
            realizations.append(_realization(FAMILY_B, rank, q))
        if family == FAMILY_B and rank == 2 and q % 2 == 1:
            realizations.append(_realization(FAMILY_C, rank, q))
    logger.debug("realizations of %s: %s", canonical.label, [r.label for r in realizations])
    return realizations


def weyl_order(real: LieRealization) -> int:
    """|W| of the root system; twisted families use the untwisted ambient system"""
    family, rank = real.family, real.rank
    if family in WEYL_AMBIENT:
        family, ambient_rank = WEYL_AMBIENT[family]
        rank = ambient_rank or rank
    if family == FAMILY_A:
        return factorial(rank + 1)
    if family in (FAMILY_B, FAMILY_C):
        return 2**rank * factorial(rank)
    if family == FAMILY_D:
        return 2 ** (rank - 1) * factorial(rank)
    return EXCEPTIONAL_WEYL[family]["order"]


def weyl_record(family: str) -> Dict:
    """untwisted rank, torus divisor and structure of W for an exceptional family"""
    if family in WEYL_AMBIENT:
        family = WEYL_AMBIENT[family][0]
    record = EXCEPTIONAL_WEYL.get(family)
    if record is None:
        return {}
    return {"root_system": family, **record}


# ================================================================================================
def _prime_powers():
    q = 2
    while True:
        if characteristic(q) is not None:
            yield q
        q += 1


def _lie_groups_up_to(family: str, bound: int) -> List[SimpleGroupId]:
    found = []
    ranks = [FIXED_RANK[family]] if family in FIXED_RANK else None
    rank = MIN_RANK.get(family)
    while True:
        if ranks is not None:
            if not ranks:
                break
            rank = ranks.pop()
        smallest = None
        for q in _prime_powers():
            candidate = SimpleGroupId.lie(family, rank, q)
            try:
                validate(candidate)
            except NotSimple:
                if q > bound:
                    break
                continue
            candidate_order = order(candidate)
            if smallest is None:
                smallest = candidate_order
            if candidate_order > bound:
                break
            found.append(canonicalize(candidate))
        if ranks is None:
            if smallest is None or smallest > bound:
                break
            rank += 1
    return found


@lru_cache(maxsize=16)
def simple_groups_up_to(bound: int) -> Dict[int, Tuple[SimpleGroupId, ...]]:
    """order -> canonical nonabelian simple groups of that order, for orders up to bound"""
    table: Dict[int, List[SimpleGroupId]] = {}

    def add(group: SimpleGroupId):
        entries = table.setdefault(order(group), [])
        if group not in entries:
            entries.append(group)

    degree = 5
    while factorial(degree) // 2 <= bound:
        add(SimpleGroupId.alternating(degree))
        degree += 1
    for name in SPORADIC_NAMES:
        sporadic = SimpleGroupId.sporadic(name)
        if order(sporadic) <= bound:
            add(sporadic)
    for family in LIE_FAMILIES:
        for group in _lie_groups_up_to(family, bound):
            add(group)
    return {key: tuple(value) for key, value in table.items()}


def identify_by_order(group_order: int, max_element_order: int = None) -> SimpleGroupId:
    """the nonabelian simple group of the given order"""
    candidates = simple_groups_up_to(group_order).get(group_order, ())
    if len(candidates) == 1:
        return candidates[0]
    if not candidates:
        raise UnrecognizedSimpleGroup(f"no nonabelian simple group has order {group_order}")
    collision = ORDER_COLLISIONS.get(group_order, {})
    if max_element_order in collision:
        kind, parameters = collision[max_element_order]
        if kind == KIND_ALTERNATING:
            return SimpleGroupId.alternating(parameters)
        return SimpleGroupId.lie(*parameters)
    raise UnrecognizedSimpleGroup(
        f"order {group_order} is shared by {[c.label for c in candidates]}"
    )
