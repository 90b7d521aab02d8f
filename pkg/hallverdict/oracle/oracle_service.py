"""
brute-force answers on small permutation groups: pi-subgroups by saturation,
pi-maximal classes, D_pi, Hall existence and composition factors
"""

import os
import time
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from dotenv import load_dotenv

from hallverdict.arith.arith_service import pi_part, prime_set
from hallverdict.groups.groups_service import identify_by_order
from hallverdict.groups.schema import SimpleGroupId
from hallverdict.oracle.permgroup import PermGroup, generate
from hallverdict.oracle.schema import SubgroupClass, SubgroupRecord
from hallverdict.schemas.primeset_schema import PrimeSet
from hallverdict.utils.custom_logger import CustomLogger
from hallverdict.utils.errors import CapExceeded

load_dotenv()

SUBGROUP_CAP = int(os.getenv("HV_ORACLE_SUBGROUP_CAP", "1000000"))

logger = CustomLogger("hallverdict")


class _Saturation:
    """conjugacy classes of pi-subgroups of one group for one pi"""

    def __init__(self):
        self.representatives: List[np.ndarray] = []
        self.generating_sets: List[List[int]] = []
        self.members: List[np.ndarray] = []
        self.maximal: List[bool] = []
        self.keys: Dict[bytes, int] = {}


# ================================================================================================
def _pi_key(group: PermGroup, pi: PrimeSet) -> Tuple[int, ...]:
    return tuple(pi.intersect(prime_set(group.order)))


def _pi_elements(group: PermGroup, primes: Sequence[int]) -> np.ndarray:
    orders = group.element_orders
    allowed = {
        value for value in np.unique(orders).tolist() if set(prime_set(value)) <= set(primes)
    }
    return np.flatnonzero(np.isin(orders, list(allowed)))


def _register(group: PermGroup, state: _Saturation, subgroup: np.ndarray, gens: List[int]) -> bool:
    """add the class of the subgroup unless it is known; True if it was new"""
    key = subgroup.astype(np.int64).tobytes()
    if key in state.keys:
        return False
    conjugates = group.conjugates(subgroup)
    class_id = len(state.representatives)
    for row in conjugates:
        state.keys[row.tobytes()] = class_id
    state.representatives.append(subgroup.astype(np.int64))
    state.generating_sets.append(gens)
    state.members.append(conjugates)
    state.maximal.append(True)
    total = sum(len(rows) for rows in state.members)
    if total > SUBGROUP_CAP:
        logger.warning("pi-subgroup count passed %d", SUBGROUP_CAP)
        raise CapExceeded(
            f"more than {SUBGROUP_CAP} pi-subgroups; {len(state.representatives)} classes found so far"
        )
    return True


def _saturate(group: PermGroup, pi: PrimeSet) -> _Saturation:
    """
    start from the trivial subgroup and adjoin pi-elements to class representatives,
    one double coset HgH at a time, keeping the joins that are pi-groups
    """
    primes = _pi_key(group, pi)
    if primes in group.saturations:
        return group.saturations[primes]
    started = time.perf_counter()
    hall_order = pi_part(group.order, primes)
    candidates = _pi_elements(group, primes)
    table = group.table

    state = _Saturation()
    _register(group, state, np.array([0], dtype=np.int64), [])
    position = 0
    while position < len(state.representatives):
        subgroup = state.representatives[position]
        gens = state.generating_sets[position]
        covered = np.zeros(group.order, dtype=bool)
        covered[subgroup] = True
        for g in candidates:
            if covered[g]:
                continue
            double_coset = table[np.ix_(table[subgroup, g], subgroup)]
            covered[double_coset.ravel()] = True
            joined = group.closure(gens + [int(g)], limit=hall_order)
            if joined is None or hall_order % joined.size != 0:
                continue
            state.maximal[position] = False
            _register(group, state, joined, gens + [int(g)])
        position += 1

    group.saturations[primes] = state
    logger.info(
        "%d classes of pi-subgroups for pi=%s in %.2fs",
        len(state.representatives),
        list(primes),
        time.perf_counter() - started,
    )
    return state


def pi_subgroups(group: PermGroup, pi: PrimeSet) -> List[SubgroupRecord]:
    """every subgroup whose order is a pi-number"""
    state = _saturate(group, pi)
    records = []
    for class_id, rows in enumerate(state.members):
        for row in rows:
            records.append(
                SubgroupRecord(
                    elements=tuple(row.tolist()), order=len(row), class_id=class_id
                )
            )
    return records


def subgroup_classes(group: PermGroup, pi: PrimeSet) -> List[SubgroupClass]:
    """the conjugacy classes of pi-subgroups"""
    state = _saturate(group, pi)
    return [
        SubgroupClass(
            class_id=class_id,
            order=len(representative),
            size=len(state.members[class_id]),
            maximal=state.maximal[class_id],
            representative=tuple(representative.tolist()),
        )
        for class_id, representative in enumerate(state.representatives)
    ]


def pi_maximal_classes(group: PermGroup, pi: PrimeSet) -> List[SubgroupClass]:
    """the classes of pi-subgroups that lie in no larger pi-subgroup"""
    return [entry for entry in subgroup_classes(group, pi) if entry.maximal]


def is_dpi(group: PermGroup, pi: PrimeSet) -> bool:
    """all pi-maximal subgroups are conjugate"""
    return len(pi_maximal_classes(group, pi)) == 1


def hall_exists(group: PermGroup, pi: PrimeSet) -> bool:
    """some pi-subgroup has order |G|_pi"""
    hall_order = pi_part(group.order, _pi_key(group, pi))
    return any(entry.order == hall_order for entry in subgroup_classes(group, pi))


# ================================================================================================
def _as_indices(subgroup) -> np.ndarray:
    if isinstance(subgroup, SubgroupRecord):
        return np.asarray(subgroup.elements, dtype=np.int64)
    return np.asarray(subgroup, dtype=np.int64)


def subgroup_group(group: PermGroup, subgroup) -> PermGroup:
    """the subgroup as a PermGroup in its own right, with a small generating set"""
    indices = np.unique(_as_indices(subgroup))
    gens: List[int] = []
    current = np.array([0], dtype=np.int64)
    for index in indices.tolist():
        if index in current:
            continue
        gens.append(index)
        current = group.closure(gens)
        if current.size == indices.size:
            break
    return PermGroup(group.elements[indices], [group.elements[g] for g in gens])


def is_normal(group: PermGroup, subgroup) -> bool:
    """whether every generator conjugates the subgroup onto itself"""
    indices = np.unique(_as_indices(subgroup))
    table, inverse = group.table, group.inverse
    for g in group.generator_indices:
        conjugated = np.unique(table[table[inverse[g], indices], g])
        if not np.array_equal(conjugated, indices):
            return False
    return True


def quotient_group(group: PermGroup, normal) -> PermGroup:
    """G/N acting on the right cosets of N"""
    indices = np.unique(_as_indices(normal))
    table = group.table
    smallest = table[indices[:, None], np.arange(group.order)[None, :]].min(axis=0)
    representatives, coset_of = np.unique(smallest, return_inverse=True)
    images = [
        tuple(coset_of[table[representatives, g]].tolist()) for g in group.generator_indices
    ]
    if len(representatives) == 1:
        images = [(0,)]
    return generate(images, cap=group.order)


def derived_subgroup(group: PermGroup) -> np.ndarray:
    """G', the normal closure of the commutators of the generators"""
    table, inverse = group.table, group.inverse
    gens = group.generator_indices
    commutators = [
        int(table[table[table[inverse[a], inverse[b]], a], b]) for a in gens for b in gens
    ]
    return group.normal_closure(commutators)


def center(group: PermGroup) -> np.ndarray:
    """elements commuting with every generator"""
    gens = group.generator_indices
    table = group.table
    commuting = np.all(table[:, gens] == table[gens, :].T, axis=1)
    return np.flatnonzero(commuting)


# ================================================================================================
def _minimal_normal_subgroup(group: PermGroup, rng: Optional[np.random.Generator]) -> np.ndarray:
    """a normal closure of a nontrivial class that contains no smaller such closure"""
    closures = []
    for members in group.conjugacy_classes():
        if members[0] == 0:
            continue
        normal = group.normal_closure(members)
        if not any(np.array_equal(normal, known) for known in closures):
            closures.append(normal)
    minimal = [
        normal
        for normal in closures
        if not any(other.size < normal.size and np.isin(other, normal).all() for other in closures)
    ]
    minimal.sort(key=lambda normal: (normal.size, normal.tolist()))
    if rng is None:
        return minimal[0]
    return minimal[int(rng.integers(len(minimal)))]


def composition_factors(
    group: PermGroup, rng: Optional[np.random.Generator] = None
) -> List[SimpleGroupId]:
    """
    factors of G/N followed by those of N, N a minimal normal subgroup;
    rng picks N at random among the minimal ones
    """
    if group.order == 1:
        return []
    normal = _minimal_normal_subgroup(group, rng)
    if normal.size == group.order:
        if len(prime_set(group.order)) == 1 and prime_set(group.order)[0] == group.order:
            return [SimpleGroupId.cyclic(group.order)]
        largest = int(group.element_orders.max())
        return [identify_by_order(group.order, largest)]
    factors = composition_factors(quotient_group(group, normal), rng)
    factors += composition_factors(subgroup_group(group, normal), rng)
    logger.debug("composition factors of %s: %s", group.label, [f.label for f in factors])
    return factors
