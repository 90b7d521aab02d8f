"""
permutation groups small enough to enumerate: element list, multiplication table,
inverses and element orders, all as numpy arrays

elements are 0-based image tuples sorted lexicographically, so the identity has index 0;
products follow (a*b)[x] = b[a[x]]
"""

import os
import re
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from dotenv import load_dotenv
from sympy.combinatorics import Permutation

from hallverdict.utils.constants import MAX_DEGREE
from hallverdict.utils.custom_logger import CustomLogger
from hallverdict.utils.errors import CapExceeded, GeneratorFileError

load_dotenv()

ORDER_CAP = int(os.getenv("HV_ORACLE_ORDER_CAP", "20000"))

CYCLE_RE = re.compile(r"\(([^()]*)\)")

# fixed seed so that element keys, and everything ordered by them, are reproducible
KEY_SEED = 20240229

logger = CustomLogger("hallverdict")


# ================================================================================================
def _parse_cycles(line: str, lineno: int) -> List[List[int]]:
    stripped = CYCLE_RE.sub("", line).strip()
    if stripped:
        raise GeneratorFileError(f"line {lineno}: unexpected text '{stripped}'")
    cycles = []
    seen = set()
    for body in CYCLE_RE.findall(line):
        try:
            points = [int(token) for token in body.replace(",", " ").split()]
        except ValueError as error:
            raise GeneratorFileError(f"line {lineno}: points must be integers") from error
        for point in points:
            if point < 1:
                raise GeneratorFileError(f"line {lineno}: points are numbered from 1")
            if point in seen:
                raise GeneratorFileError(f"line {lineno}: cycles are not disjoint at {point}")
            seen.add(point)
        if len(points) > 1:
            cycles.append([point - 1 for point in points])
    return cycles


def parse_generators(text: str, max_degree: int = MAX_DEGREE) -> List[Tuple[int, ...]]:
    """
    one permutation per line in disjoint cycle notation on points 1..N, e.g. (1 2 3)(4 5);
    '#' starts a comment; the degree is the largest point named
    """
    parsed = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parsed.append(_parse_cycles(line, lineno))
    if not parsed:
        raise GeneratorFileError("no generators given")
    degree = max(
        [point + 1 for cycles in parsed for cycle in cycles for point in cycle], default=1
    )
    if degree > max_degree:
        raise GeneratorFileError(f"degree {degree} exceeds the limit of {max_degree}")
    generators = []
    for cycles in parsed:
        if cycles:
            generators.append(tuple(Permutation(cycles, size=degree).array_form))
        else:
            generators.append(tuple(range(degree)))
    return generators


def load_generators(path) -> List[Tuple[int, ...]]:
    """read a generator file"""
    path = Path(path)
    if not path.is_file():
        raise GeneratorFileError(f"generator file {path} not found")
    with open(path, "r", encoding="utf-8") as gens_file:
        return parse_generators(gens_file.read())


def format_permutation(perm: Sequence[int]) -> str:
    """disjoint cycle notation on points 1..N; the identity is ()"""
    cycles = Permutation(list(int(x) for x in perm)).cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(point + 1) for point in cycle) + ")" for cycle in cycles)


# ================================================================================================
class PermGroup:
    """a permutation group with its elements enumerated"""

    def __init__(self, elements: np.ndarray, generators: Iterable[Sequence[int]]):
        self.elements = elements
        self.generators = [tuple(int(x) for x in gen) for gen in generators]
        self.order = elements.shape[0]
        self.degree = elements.shape[1]
        self._weights = np.random.default_rng(KEY_SEED).integers(
            1, 2**63, size=self.degree, dtype=np.uint64
        )
        keys = self._keys(elements)
        self._key_order = np.argsort(keys, kind="stable")
        self._sorted_keys = keys[self._key_order]
        if np.any(self._sorted_keys[1:] == self._sorted_keys[:-1]):
            raise CapExceeded("element keys collide; the group cannot be indexed")
        self._table = None
        self._inverse = None
        self._element_orders = None
        self.saturations = {}

    @property
    def label(self) -> str:
        return f"PermGroup(order={self.order}, degree={self.degree})"

    def __repr__(self) -> str:
        return self.label

    def _keys(self, rows: np.ndarray) -> np.ndarray:
        return (rows.astype(np.uint64) * self._weights).sum(axis=-1, dtype=np.uint64)

    def index_of(self, rows: np.ndarray) -> np.ndarray:
        """indices of the given permutations, which must be elements"""
        rows = np.asarray(rows)
        return self._key_order[np.searchsorted(self._sorted_keys, self._keys(rows))]

    @property
    def table(self) -> np.ndarray:
        """table[i, j] is the index of elements[i] * elements[j]"""
        if self._table is None:
            dtype = np.int16 if self.order <= np.iinfo(np.int16).max else np.int32
            table = np.empty((self.order, self.order), dtype=dtype)
            for i in range(self.order):
                table[i] = self.index_of(self.elements[:, self.elements[i]])
            self._table = table
        return self._table

    @property
    def inverse(self) -> np.ndarray:
        """inverse[i] is the index of elements[i]^-1"""
        if self._inverse is None:
            self._inverse = self.index_of(np.argsort(self.elements, axis=1))
        return self._inverse

    @property
    def element_orders(self) -> np.ndarray:
        """the order of every element, by repeated multiplication"""
        if self._element_orders is None:
            everything = np.arange(self.order)
            orders = np.zeros(self.order, dtype=np.int64)
            power = everything.copy()
            exponent = 1
            while not orders.all():
                orders[(power == 0) & (orders == 0)] = exponent
                power = self.table[power, everything]
                exponent += 1
            self._element_orders = orders
        return self._element_orders

    @property
    def generator_indices(self) -> np.ndarray:
        if not self.generators:
            return np.zeros(0, dtype=np.int64)
        return self.index_of(np.array(self.generators, dtype=np.int64))

    def closure(self, gens: Sequence[int], limit: int = None) -> Optional[np.ndarray]:
        """
        sorted indices of the subgroup generated by the given element indices,
        or None as soon as it has more than `limit` elements
        """
        gens = np.unique(np.asarray(gens, dtype=np.int64))
        member = np.zeros(self.order, dtype=bool)
        member[0] = True
        count = 1
        frontier = np.array([0], dtype=np.int64)
        while frontier.size and gens.size:
            products = self.table[np.ix_(frontier, gens)].ravel()
            fresh = np.unique(products[~member[products]])
            member[fresh] = True
            count += fresh.size
            if limit is not None and count > limit:
                return None
            frontier = fresh.astype(np.int64)
        return np.flatnonzero(member)

    def conjugates(self, subgroup: np.ndarray) -> np.ndarray:
        """every conjugate x^-1 H x of H, one sorted row each, without repeats"""
        everything = np.arange(self.order)
        left = self.table[self.inverse[:, None], subgroup[None, :]]
        conjugated = np.sort(self.table[left, everything[:, None]].astype(np.int64), axis=1)
        return np.unique(conjugated, axis=0)

    def conjugacy_classes(self) -> List[np.ndarray]:
        """the conjugacy classes of elements, ordered by their smallest index"""
        everything = np.arange(self.order)
        seen = np.zeros(self.order, dtype=bool)
        classes = []
        for x in range(self.order):
            if seen[x]:
                continue
            members = np.unique(self.table[self.table[self.inverse, x], everything])
            seen[members] = True
            classes.append(members.astype(np.int64))
        return classes

    def normal_closure(self, seeds: Sequence[int]) -> np.ndarray:
        """the smallest normal subgroup containing the given elements"""
        current = self.closure(seeds)
        gens = self.generator_indices
        while True:
            conjugated = self.table[self.table[self.inverse[gens][:, None], current[None, :]], gens[:, None]]
            fresh = np.setdiff1d(conjugated.ravel(), current)
            if fresh.size == 0:
                return current
            current = self.closure(np.concatenate([current, fresh]))


def generate(gens: Sequence[Sequence[int]], cap: int = None) -> PermGroup:
    """
    enumerate the group generated by the given permutations (0-based image tuples)
    breadth first; CapExceeded once the order passes the cap
    """
    cap = cap or ORDER_CAP
    if not gens:
        raise GeneratorFileError("no generators given")
    degree = len(gens[0])
    if any(len(gen) != degree for gen in gens):
        raise GeneratorFileError("generators act on different degrees")
    generator_rows = [np.asarray(gen, dtype=np.int64) for gen in gens]
    for row in generator_rows:
        if sorted(row.tolist()) != list(range(degree)):
            raise GeneratorFileError(f"{row.tolist()} is not a permutation")

    identity = np.arange(degree, dtype=np.int64)
    seen = {identity.tobytes()}
    found = [identity]
    frontier = [identity]
    while frontier:
        fresh = []
        for element in frontier:
            for gen in generator_rows:
                product = gen[element]
                key = product.tobytes()
                if key in seen:
                    continue
                seen.add(key)
                fresh.append(product)
                if len(seen) > cap:
                    logger.warning("closure passed %d elements", cap)
                    raise CapExceeded(f"the group has more than {cap} elements")
        found.extend(fresh)
        frontier = fresh
    elements = np.array(found, dtype=np.int64)
    elements = elements[np.lexsort(elements.T[::-1])]
    logger.info("generated a group of order %d on %d points", len(found), degree)
    return PermGroup(elements, [tuple(row.tolist()) for row in generator_rows])
