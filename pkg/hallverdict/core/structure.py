"""
order implied by an ATLAS-style structure string such as "2^4:(3xAlt(5)):2"

    operators   ":" split, "." nonsplit, "x" direct, "o" central (over a common 2),
                "wr" wreath (|A|^k |B|, k the degree of B)
    atoms       p, p^k, p^k_i, Alt(n), Sym(n), Qn, Dn, Ln(q), Un(q), sporadic names
"""

import re
from math import factorial
from typing import List, Optional, Tuple

from hallverdict.groups.groups_service import order
from hallverdict.groups.schema import SimpleGroupId
from hallverdict.utils.constants import FAMILY_2A, FAMILY_A, SPORADIC_NAMES
from hallverdict.utils.errors import DescriptorParseError

_SPORADIC_RE = "|".join(
    re.escape(name) for name in sorted(SPORADIC_NAMES, key=len, reverse=True)
)

TOKEN_RE = re.compile(
    r"\s*(?:"
    r"(?P<alt>Alt\((?P<alt_n>\d+)\))"
    r"|(?P<sym>Sym\((?P<sym_n>\d+)\))"
    r"|(?P<linear>L(?P<linear_n>\d+)\((?P<linear_q>\d+)\))"
    r"|(?P<unitary>U(?P<unitary_n>\d+)\((?P<unitary_q>\d+)\))"
    r"|(?P<quaternion>Q(?P<quaternion_n>\d+))"
    r"|(?P<dihedral>D(?P<dihedral_n>\d+))"
    rf"|(?P<sporadic>{_SPORADIC_RE})"
    r"|(?P<power>(?P<base>\d+)(?:\^(?P<exponent>\d+))?(?:_\d+)?)"
    r"|(?P<op>wr|[:.xo])"
    r"|(?P<paren>[()])"
    r")"
)

# (order, degree of the natural action or None)
Operand = Tuple[int, Optional[int]]


def tokenize(structure: str) -> List[Tuple[str, object]]:
    """split a structure string into (kind, value) tokens"""
    tokens = []
    position = 0
    text = structure.rstrip()
    while position < len(text):
        match = TOKEN_RE.match(text, position)
        if match is None or match.end() == position:
            raise DescriptorParseError(
                f"cannot parse structure '{structure}' at '{text[position:]}'"
            )
        position = match.end()
        if match.group("alt"):
            n = int(match.group("alt_n"))
            tokens.append(("atom", (factorial(n) // 2, n)))
        elif match.group("sym"):
            n = int(match.group("sym_n"))
            tokens.append(("atom", (factorial(n), n)))
        elif match.group("linear"):
            group = SimpleGroupId.lie(
                FAMILY_A, int(match.group("linear_n")) - 1, int(match.group("linear_q"))
            )
            tokens.append(("atom", (order(group), None)))
        elif match.group("unitary"):
            group = SimpleGroupId.lie(
                FAMILY_2A, int(match.group("unitary_n")) - 1, int(match.group("unitary_q"))
            )
            tokens.append(("atom", (order(group), None)))
        elif match.group("quaternion"):
            tokens.append(("atom", (int(match.group("quaternion_n")), None)))
        elif match.group("dihedral"):
            tokens.append(("atom", (int(match.group("dihedral_n")), None)))
        elif match.group("sporadic"):
            tokens.append(("atom", (order(SimpleGroupId.sporadic(match.group("sporadic"))), None)))
        elif match.group("power"):
            base = int(match.group("base"))
            exponent = int(match.group("exponent") or 1)
            # a cyclic group acts regularly on itself
            tokens.append(("atom", (base**exponent, base if exponent == 1 else None)))
        elif match.group("op"):
            tokens.append(("op", match.group("op")))
        else:
            tokens.append(("paren", match.group("paren")))
    return tokens


class _Parser:
    """left-to-right evaluation; every operator binds equally"""

    def __init__(self, structure: str):
        self.structure = structure
        self.tokens = tokenize(structure)
        self.position = 0

    def _peek(self):
        if self.position < len(self.tokens):
            return self.tokens[self.position]
        return (None, None)

    def _next(self):
        token = self._peek()
        self.position += 1
        return token

    def parse(self) -> Operand:
        result = self._expression()
        if self._peek()[0] is not None:
            raise DescriptorParseError(f"trailing input in structure '{self.structure}'")
        return result

    def _expression(self) -> Operand:
        result = self._operand()
        while self._peek()[0] == "op":
            _, operator = self._next()
            right = self._operand()
            result = self._combine(result, operator, right)
        return result

    def _operand(self) -> Operand:
        kind, value = self._next()
        if kind == "atom":
            return value
        if kind == "paren" and value == "(":
            inner = self._expression()
            closing = self._next()
            if closing != ("paren", ")"):
                raise DescriptorParseError(f"unbalanced parentheses in '{self.structure}'")
            return inner
        raise DescriptorParseError(f"expected a group in structure '{self.structure}'")

    def _combine(self, left: Operand, operator: str, right: Operand) -> Operand:
        if operator == "wr":
            if right[1] is None:
                raise DescriptorParseError(
                    f"the top group of a wreath product needs a permutation degree in '{self.structure}'"
                )
            return left[0] ** right[1] * right[0], None
        if operator == "o":
            return left[0] * right[0] // 2, None
        return left[0] * right[0], None


def structure_order(structure: str) -> int:
    """the order implied by a structure string"""
    return _Parser(structure).parse()[0]
