"""
generators of the small groups used to cross-check the classifier, built from field arithmetic;
the files in assets/generators hold the same permutations
"""

from itertools import product
from typing import Callable, Dict, List, Sequence, Tuple

from django.conf import settings

from hallverdict.utils.errors import InvalidInput

Perm = Tuple[int, ...]


def _cycles(degree: int, *cycles: Sequence[int]) -> Perm:
    """a permutation from 1-based cycles"""
    images = list(range(degree))
    for cycle in cycles:
        for position, point in enumerate(cycle):
            images[point - 1] = cycle[(position + 1) % len(cycle)] - 1
    return tuple(images)


def _on_points(points: List, action: Callable) -> Perm:
    index = {point: position for position, point in enumerate(points)}
    return tuple(index[action(point)] for point in points)


# ================================================================================================
# projective line over F_p, points 0..p-1 and infinity = p


def _smallest_nonsquare(p: int) -> int:
    squares = {(x * x) % p for x in range(1, p)}
    return next(x for x in range(2, p) if x not in squares)


def projective_line(p: int, full: bool = False) -> List[Perm]:
    """PSL_2(p), or PGL_2(p) when full, on the p+1 points of the projective line"""
    infinity = p
    points = list(range(p + 1))

    def translate(x):
        return x if x == infinity else (x + 1) % p

    def invert(x):
        if x == infinity:
            return 0
        if x == 0:
            return infinity
        return (-pow(x, p - 2, p)) % p

    gens = [_on_points(points, translate), _on_points(points, invert)]
    if full:
        nonsquare = _smallest_nonsquare(p)
        gens.append(
            _on_points(points, lambda x: x if x == infinity else (nonsquare * x) % p)
        )
    return gens


# ================================================================================================
# F_8 = F_2[w] / (w^3 + w + 1), elements as bit masks


def _f8_mul(a: int, b: int) -> int:
    result = 0
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a & 8:
            a ^= 0b1011
    return result


def _f8_inverse(a: int) -> int:
    return next(b for b in range(1, 8) if _f8_mul(a, b) == 1)


def projective_line_f8() -> List[Perm]:
    """PSL_2(8) on the 9 points of the projective line over F_8"""
    infinity = 8
    points = list(range(9))

    def shift(z):
        return z if z == infinity else z ^ 1

    def scale(z):
        return z if z == infinity else _f8_mul(2, z)

    def invert(z):
        if z == infinity:
            return 0
        if z == 0:
            return infinity
        return _f8_inverse(z)

    return [_on_points(points, action) for action in (shift, scale, invert)]


# ================================================================================================
def _normalize(vector: Tuple[int, ...], p: int) -> Tuple[int, ...]:
    lead = next(x for x in vector if x)
    scale = pow(lead, p - 2, p)
    return tuple((scale * x) % p for x in vector)


def projective_plane_f3() -> List[Perm]:
    """PSL_3(3) on the 13 points of the projective plane, generated by the elementary transvections"""
    points = sorted({_normalize(v, 3) for v in product(range(3), repeat=3) if any(v)})
    gens = []
    for i in range(3):
        for j in range(3):
            if i == j:
                continue

            def transvection(v, i=i, j=j):
                w = list(v)
                w[i] = (w[i] + w[j]) % 3
                return _normalize(tuple(w), 3)

            gens.append(_on_points(points, transvection))
    return gens


def sl2_f5_vectors() -> List[Perm]:
    """SL_2(5) on the 24 nonzero vectors of F_5^2"""
    points = sorted(v for v in product(range(5), repeat=2) if any(v))

    def upper(v):
        return ((v[0] + v[1]) % 5, v[1])

    def lower(v):
        return (v[0], (v[0] + v[1]) % 5)

    return [_on_points(points, upper), _on_points(points, lower)]


# ================================================================================================
CORPUS: Dict[str, Callable[[], List[Perm]]] = {
    "a5": lambda: [_cycles(5, (1, 2, 3, 4, 5)), _cycles(5, (3, 4, 5))],
    "s5": lambda: [_cycles(5, (1, 2)), _cycles(5, (1, 2, 3, 4, 5))],
    "a6": lambda: [_cycles(6, (1, 2, 3)), _cycles(6, (2, 3, 4, 5, 6))],
    "s6": lambda: [_cycles(6, (1, 2)), _cycles(6, (1, 2, 3, 4, 5, 6))],
    "a7": lambda: [_cycles(7, (1, 2, 3)), _cycles(7, (1, 2, 3, 4, 5, 6, 7))],
    "psl27": lambda: projective_line(7),
    "pgl27": lambda: projective_line(7, full=True),
    "psl28": projective_line_f8,
    "psl211": lambda: projective_line(11),
    "psl213": lambda: projective_line(13),
    "psl33": projective_plane_f3,
    "sl25": sl2_f5_vectors,
    "c2xa5": lambda: [
        _cycles(7, (1, 2, 3, 4, 5)),
        _cycles(7, (3, 4, 5)),
        _cycles(7, (6, 7)),
    ],
}

CORPUS_ORDERS = {
    "a5": 60,
    "s5": 120,
    "a6": 360,
    "s6": 720,
    "a7": 2520,
    "psl27": 168,
    "pgl27": 336,
    "psl28": 504,
    "psl211": 660,
    "psl213": 1092,
    "psl33": 5616,
    "sl25": 120,
    "c2xa5": 120,
}


def corpus_generators(name: str) -> List[Perm]:
    """0-based generators of a corpus group"""
    if name not in CORPUS:
        raise InvalidInput(f"'{name}' is not a corpus group, expected one of {sorted(CORPUS)}")
    return CORPUS[name]()


def corpus_file(name: str):
    """the shipped generator file of a corpus group"""
    return settings.GENERATORS_DIR / f"{name}.gens"
