"""textual descriptors: Alt(n), Spor(NAME), Cyc(p), Lie(FAM,rank,q) and the classical aliases"""

import re
from typing import List

from hallverdict.groups.schema import SimpleGroupId
from hallverdict.utils.constants import (
    FAMILY_2A,
    FAMILY_2B2,
    FAMILY_2G2,
    FAMILY_A,
    FAMILY_C,
    FIXED_RANK,
    FIXED_SUBSCRIPT,
    LIE_FAMILIES,
    SPORADIC_ALIASES,
    SPORADIC_NAMES,
)
from hallverdict.utils.errors import DescriptorParseError

DESCRIPTOR_RE = re.compile(r"^\s*([A-Za-z]+)\s*\((.*)\)\s*$")


def _integers(text: str, head: str, count: int) -> List[int]:
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != count:
        raise DescriptorParseError(f"{head}(...) takes {count} argument(s), got '{text}'")
    try:
        return [int(part) for part in parts]
    except ValueError as error:
        raise DescriptorParseError(f"{head}({text}): arguments must be integers") from error


def sporadic_name(text: str) -> str:
    """resolve a sporadic group name or one of its aliases"""
    name = text.strip()
    name = SPORADIC_ALIASES.get(name, name)
    if name not in SPORADIC_NAMES:
        raise DescriptorParseError(f"unknown sporadic group '{text}'")
    return name


def lie_family(text: str) -> str:
    """FAM of Lie(FAM,rank,q); the superscript may be written ^2 or omitted"""
    family = text.strip().replace("^", "")
    if family not in LIE_FAMILIES:
        raise DescriptorParseError(f"unknown Lie family '{text}'")
    return family


def parse_descriptor(text: str) -> SimpleGroupId:
    """parse one descriptor; the result still has to be validated"""
    match = DESCRIPTOR_RE.match(text)
    if match is None:
        raise DescriptorParseError(f"cannot parse group descriptor '{text}'")
    head, body = match.group(1), match.group(2)

    if head == "Alt":
        return SimpleGroupId.alternating(*_integers(body, head, 1))
    if head == "Cyc":
        return SimpleGroupId.cyclic(*_integers(body, head, 1))
    if head == "Spor":
        return SimpleGroupId.sporadic(sporadic_name(body))
    if head == "Lie":
        parts = body.split(",", 1)
        if len(parts) != 2:
            raise DescriptorParseError(f"Lie(...) takes 3 arguments, got '{body}'")
        family = lie_family(parts[0])
        rank, q = _integers(parts[1], head, 2)
        if family in FIXED_RANK and rank == FIXED_SUBSCRIPT[family]:
            rank = FIXED_RANK[family]
        return SimpleGroupId.lie(family, rank, q)
    if head == "PSL":
        n, q = _integers(body, head, 2)
        return SimpleGroupId.lie(FAMILY_A, n - 1, q)
    if head == "PSU":
        n, q = _integers(body, head, 2)
        return SimpleGroupId.lie(FAMILY_2A, n - 1, q)
    if head == "PSp":
        dimension, q = _integers(body, head, 2)
        if dimension % 2:
            raise DescriptorParseError(f"PSp needs an even dimension, got {dimension}")
        return SimpleGroupId.lie(FAMILY_C, dimension // 2, q)
    if head == "Sz":
        return SimpleGroupId.lie(FAMILY_2B2, FIXED_RANK[FAMILY_2B2], *_integers(body, head, 1))
    if head == "Ree":
        return SimpleGroupId.lie(FAMILY_2G2, FIXED_RANK[FAMILY_2G2], *_integers(body, head, 1))
    raise DescriptorParseError(f"unknown descriptor '{head}'")


def split_top_level(text: str) -> List[str]:
    """split on the commas that are not inside parentheses"""
    items = []
    depth = 0
    current = []
    for char in text:
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise DescriptorParseError(f"unbalanced parentheses in '{text}'")
        if char == "," and depth == 0:
            items.append("".join(current))
            current = []
            continue
        current.append(char)
    if depth != 0:
        raise DescriptorParseError(f"unbalanced parentheses in '{text}'")
    items.append("".join(current))
    return [item.strip() for item in items if item.strip()]


def parse_descriptor_list(text: str) -> List[SimpleGroupId]:
    """parse a comma separated list of descriptors, e.g. "Alt(5),Cyc(2)" """
    items = split_top_level(text)
    if not items:
        raise DescriptorParseError("empty list of composition factors")
    return [parse_descriptor(item) for item in items]
