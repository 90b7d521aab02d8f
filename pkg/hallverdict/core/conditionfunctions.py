"""
Conditions I-VII on a pair (S, pi), S a finite simple group

each condition returns a ConditionTrace carrying every quantity it looked at;
do not raise on a failed condition here, record the first violated clause instead
"""

import os
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

from dotenv import load_dotenv

from hallverdict.arith.arith_service import (
    epsilon_of,
    fermat_prime_test,
    mult_order,
    power_r_part,
    prime_set,
)
from hallverdict.groups import KIND_SPORADIC
from hallverdict.groups.groups_service import (
    canonicalize,
    lie_realizations,
    prime_spectrum,
    validate,
    weyl_order,
    weyl_record,
)
from hallverdict.groups.schema import LieRealization, SimpleGroupId
from hallverdict.schemas.primeset_schema import PrimeSet
from hallverdict.schemas.trace_schema import ConditionTrace
from hallverdict.utils.constants import (
    CONDITION_TWO_ITEMS,
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
    FLAG_TITS_NOT_APPLIED,
    FLAG_TWISTED_WEYL_AMBIENT,
    FLAG_WEYL_READING_DIFFERS,
    WEYL_AMBIENT,
)
from hallverdict.utils.custom_logger import CustomLogger
from hallverdict.utils.errors import InvalidInput

load_dotenv()

WEYL_EXCLUDES_P = os.getenv("HV_WEYL_EXCLUDES_P", "False") == "True"

logger = CustomLogger("hallverdict")


class Quantities(NamedTuple):
    """what the subcase clauses of Conditions IV, V and VII read"""

    family: str
    n: int
    q: int
    r: int
    tau: Tuple[int, ...]
    orders: Dict[int, int]
    a: int = 0
    b: int = 0
    c: int = 0
    base_part: int = 0
    phi: Tuple[int, ...] = ()


# ================================================================================================
def _pi_cap_spectrum(group: SimpleGroupId, pi: PrimeSet) -> List[int]:
    return pi.intersect(prime_spectrum(group).primes)


def _classical_n(real: LieRealization) -> int:
    """n of A_{n-1}(q) and 2A_{n-1}(q); the rank otherwise"""
    if real.family in (FAMILY_A, FAMILY_2A):
        return real.rank + 1
    return real.rank


def _tits_flags(group: SimpleGroupId) -> List[str]:
    if group.kind == KIND_SPORADIC and group.name == "Tits":
        return [FLAG_TITS_NOT_APPLIED]
    return []


def cond_I(group: SimpleGroupId, pi: PrimeSet) -> ConditionTrace:
    """|pi & pi(S)| <= 1"""
    common = _pi_cap_spectrum(group, pi)
    flags = _tits_flags(group)
    if len(common) <= 1:
        return ConditionTrace(
            condition="I", bindings={"pi_cap_S": common}, satisfied=True, flags=flags
        )
    return ConditionTrace(
        condition="I",
        bindings={"pi_cap_S": common},
        reason=f"|pi & pi(S)| = {len(common)} > 1",
        flags=flags,
    )


def cond_II(group: SimpleGroupId, pi: PrimeSet) -> ConditionTrace:
    """S sporadic and pi & pi(S) one of the listed sets"""
    if group.kind != KIND_SPORADIC:
        return ConditionTrace(condition="II", reason="S is not sporadic")
    common = _pi_cap_spectrum(group, pi)
    bindings = {"pi_cap_S": common}
    flags = _tits_flags(group)
    for item, name, listed in CONDITION_TWO_ITEMS:
        if name != group.name:
            continue
        bindings["listed"] = [sorted(entry) for entry in listed]
        if set(common) in listed:
            return ConditionTrace(
                condition="II",
                subcase=str(item),
                bindings=bindings,
                satisfied=True,
                flags=flags,
            )
        return ConditionTrace(
            condition="II",
            subcase=str(item),
            bindings=bindings,
            reason=f"pi & pi(S) = {common} is not listed for {name}",
            flags=flags,
        )
    return ConditionTrace(
        condition="II",
        bindings=bindings,
        reason=f"{group.name} does not occur in Condition II",
        flags=flags,
    )


# ================================================================================================
def _cond_III_reading(
    real: LieRealization, pi: PrimeSet, common: List[int], excludes_p: bool
) -> Tuple[bool, Optional[str], Dict]:
    bindings = {}
    if real.p not in pi:
        return False, f"p = {real.p} is not in pi", bindings
    tau = [prime for prime in common if prime != real.p]
    q_minus_one = prime_set(real.q - 1) if real.q > 2 else []
    bindings.update({"tau": tau, "pi_q_minus_1": q_minus_one})
    outside = [prime for prime in tau if prime not in q_minus_one]
    if outside:
        return False, f"tau is not contained in pi(q-1): {outside}", bindings
    order_w = weyl_order(real)
    bindings["weyl_order"] = order_w
    checked = tau if excludes_p else common
    dividing = [prime for prime in checked if order_w % prime == 0]
    if dividing:
        return False, f"{dividing[0]} divides |W| = {order_w}", bindings
    return True, None, bindings


def cond_III(
    real: LieRealization, pi: PrimeSet, weyl_excludes_p: bool = None
) -> ConditionTrace:
    """p in pi, tau = (pi & pi(S)) - {p} inside pi(q-1), no prime of pi & pi(S) divides |W|"""
    if weyl_excludes_p is None:
        weyl_excludes_p = WEYL_EXCLUDES_P
    common = _pi_cap_spectrum(real.group_id(), pi)
    holds, reason, details = _cond_III_reading(real, pi, common, weyl_excludes_p)
    other, _, _ = _cond_III_reading(real, pi, common, not weyl_excludes_p)

    bindings = {"p": real.p, "q": real.q, "pi_cap_S": common, **details}
    bindings["weyl_reading"] = "pi-minus-p" if weyl_excludes_p else "pi"
    if real.family in EXCEPTIONAL_WEYL or real.family in (FAMILY_2E6, FAMILY_2G2, FAMILY_2F4):
        bindings["weyl"] = weyl_record(real.family)
    flags = []
    if holds != other:
        flags.append(FLAG_WEYL_READING_DIFFERS)
    if real.family in WEYL_AMBIENT:
        flags.append(FLAG_TWISTED_WEYL_AMBIENT)
    return ConditionTrace(
        condition="III",
        realization=real,
        bindings=bindings,
        satisfied=holds,
        reason=reason,
        flags=flags,
    )


# ================================================================================================
# Condition IV, one clause per subcase


def _all_orders_equal(quantities: Quantities, value: int) -> bool:
    return all(order == value for order in quantities.orders.values())


def _iv_1(x: Quantities) -> bool:
    return (
        x.family == FAMILY_A
        and x.a == x.r - 1
        and x.b == x.r
        and x.base_part == x.r
        and x.n // (x.r - 1) == x.n // x.r
        and _all_orders_equal(x, x.b)
    )


def _iv_2(x: Quantities) -> bool:
    return (
        x.family == FAMILY_A
        and x.a == x.r - 1
        and x.b == x.r
        and x.base_part == x.r
        and x.n // (x.r - 1) == x.n // x.r + 1
        and x.n % x.r == x.r - 1
        and _all_orders_equal(x, x.b)
    )


def _iv_3(x: Quantities) -> bool:
    return (
        x.family == FAMILY_2A
        and x.r % 4 == 1
        and x.a == x.r - 1
        and x.b == 2 * x.r
        and x.base_part == x.r
        and x.n // (x.r - 1) == x.n // x.r
        and _all_orders_equal(x, x.b)
    )


def _iv_4(x: Quantities) -> bool:
    return (
        x.family == FAMILY_2A
        and x.r % 4 == 3
        and x.a == (x.r - 1) // 2
        and x.b == 2 * x.r
        and x.base_part == x.r
        and x.n // (x.r - 1) == x.n // x.r
        and _all_orders_equal(x, x.b)
    )


def _iv_5(x: Quantities) -> bool:
    return (
        x.family == FAMILY_2A
        and x.r % 4 == 1
        and x.a == x.r - 1
        and x.b == 2 * x.r
        and x.base_part == x.r
        and x.n // (x.r - 1) == x.n // x.r + 1
        and x.n % x.r == x.r - 1
        and _all_orders_equal(x, x.b)
    )


def _iv_6(x: Quantities) -> bool:
    return (
        x.family == FAMILY_2A
        and x.r % 4 == 3
        and x.a == (x.r - 1) // 2
        and x.b == 2 * x.r
        and x.base_part == x.r
        and x.n // (x.r - 1) == x.n // x.r + 1
        and x.n % x.r == x.r - 1
        and _all_orders_equal(x, x.b)
    )


def _iv_7(x: Quantities) -> bool:
    return (
        x.family == FAMILY_2D
        and x.a % 2 == 1
        and x.n == x.b == 2 * x.a
        and all(order in (x.a, x.b) for order in x.orders.values())
    )


def _iv_8(x: Quantities) -> bool:
    return (
        x.family == FAMILY_2D
        and x.b % 2 == 1
        and x.n == x.a == 2 * x.b
        and all(order in (x.a, x.b) for order in x.orders.values())
    )


IV_SUBCASES: List[Tuple[str, Callable[[Quantities], bool]]] = [
    ("1", _iv_1),
    ("2", _iv_2),
    ("3", _iv_3),
    ("4", _iv_4),
    ("5", _iv_5),
    ("6", _iv_6),
    ("7", _iv_7),
    ("8", _iv_8),
]


def _odd_cross_characteristic(
    real: LieRealization, pi: PrimeSet, condition: str
) -> Tuple[Optional[ConditionTrace], List[int], Dict]:
    """shared opening of Conditions IV and V: 2, p not in pi, at least two primes of pi(S) in pi"""
    common = _pi_cap_spectrum(real.group_id(), pi)
    bindings = {"p": real.p, "q": real.q, "pi_cap_S": common}
    reason = None
    if 2 in pi:
        reason = "2 is in pi"
    elif real.p in pi:
        reason = f"p = {real.p} is in pi"
    elif len(common) < 2:
        reason = f"|pi & pi(S)| = {len(common)} < 2"
    if reason is None:
        return None, common, bindings
    failed = ConditionTrace(
        condition=condition, realization=real, bindings=bindings, reason=reason
    )
    return failed, common, bindings


def cond_IV(real: LieRealization, pi: PrimeSet) -> ConditionTrace:
    """some t in tau with b = e(q,t) != a = e(q,r) and one of subcases (1)-(8)"""
    failed, common, bindings = _odd_cross_characteristic(real, pi, "IV")
    if failed is not None:
        return failed
    r, tau = common[0], tuple(common[1:])
    orders = {s: mult_order(real.q, s) for s in tau}
    a = mult_order(real.q, r)
    n = _classical_n(real)
    base_part = power_r_part(real.q, r - 1, r)
    bindings.update(
        {
            "r": r,
            "tau": list(tau),
            "a": a,
            "n": n,
            "e_values": {str(s): order for s, order in orders.items()},
            "r_part_q_r_minus_1": base_part,
        }
    )
    candidates = [t for t in tau if orders[t] != a]
    if not candidates:
        return ConditionTrace(
            condition="IV",
            realization=real,
            bindings=bindings,
            reason="no t in tau with e(q,t) != a",
        )
    for t in candidates:
        quantities = Quantities(
            family=real.family,
            n=n,
            q=real.q,
            r=r,
            tau=tau,
            orders=orders,
            a=a,
            b=orders[t],
            base_part=base_part,
        )
        for label, clause in IV_SUBCASES:
            if clause(quantities):
                return ConditionTrace(
                    condition="IV",
                    subcase=label,
                    realization=real,
                    bindings={**bindings, "t": t, "b": orders[t]},
                    satisfied=True,
                )
    return ConditionTrace(
        condition="IV",
        realization=real,
        bindings={**bindings, "b_candidates": [orders[t] for t in candidates]},
        reason="no subcase of IV holds",
    )


# ================================================================================================
# Condition V, one clause per subcase


def _every_s(x: Quantities, predicate: Callable[[int], bool]) -> bool:
    return all(predicate(s) for s in x.tau)


def _v_1(x: Quantities) -> bool:
    return x.family == FAMILY_A and _every_s(x, lambda s: x.n < x.c * s)


def _v_2(x: Quantities) -> bool:
    return x.family == FAMILY_2A and x.c % 4 == 0 and _every_s(x, lambda s: x.n < x.c * s)


def _v_3(x: Quantities) -> bool:
    return x.family == FAMILY_2A and x.c % 4 == 2 and _every_s(x, lambda s: 2 * x.n < x.c * s)


def _v_4(x: Quantities) -> bool:
    return x.family == FAMILY_2A and x.c % 2 == 1 and _every_s(x, lambda s: x.n < 2 * x.c * s)


def _v_5(x: Quantities) -> bool:
    return (
        x.family in (FAMILY_B, FAMILY_C, FAMILY_2D)
        and x.c % 2 == 1
        and _every_s(x, lambda s: 2 * x.n < x.c * s)
    )


def _v_6(x: Quantities) -> bool:
    return (
        x.family in (FAMILY_B, FAMILY_C, FAMILY_D)
        and x.c % 2 == 0
        and _every_s(x, lambda s: x.n < x.c * s)
    )


def _v_7(x: Quantities) -> bool:
    return x.family == FAMILY_D and x.c % 2 == 0 and _every_s(x, lambda s: 2 * x.n <= x.c * s)


def _v_8(x: Quantities) -> bool:
    return x.family == FAMILY_2D and x.c % 2 == 1 and _every_s(x, lambda s: x.n <= x.c * s)


def _v_9(x: Quantities) -> bool:
    return x.family == FAMILY_3D4


def _excluded(x: Quantities, primes: Tuple[int, ...]) -> bool:
    return not any(prime in x.tau for prime in primes)


def _v_10(x: Quantities) -> bool:
    if x.family != FAMILY_E6:
        return False
    return not (x.r == 3 and x.c == 1) or _excluded(x, (5, 13))


def _v_11(x: Quantities) -> bool:
    if x.family != FAMILY_2E6:
        return False
    return not (x.r == 3 and x.c == 2) or _excluded(x, (5, 13))


def _v_12(x: Quantities) -> bool:
    if x.family != FAMILY_E7:
        return False
    if x.r == 3 and x.c in (1, 2) and not _excluded(x, (5, 7, 13)):
        return False
    if x.r == 5 and x.c in (1, 2) and not _excluded(x, (7,)):
        return False
    return True


def _v_13(x: Quantities) -> bool:
    if x.family != FAMILY_E8:
        return False
    if x.r == 3 and x.c in (1, 2) and not _excluded(x, (5, 7, 13)):
        return False
    if x.r == 5 and x.c in (1, 2) and not _excluded(x, (7, 31)):
        return False
    return True


def _v_14(x: Quantities) -> bool:
    return x.family == FAMILY_G2


def _v_15(x: Quantities) -> bool:
    if x.family != FAMILY_F4:
        return False
    return not (x.r == 3 and x.c == 1) or _excluded(x, (13,))


V_SUBCASES: List[Tuple[str, Callable[[Quantities], bool]]] = [
    ("1", _v_1),
    ("2", _v_2),
    ("3", _v_3),
    ("4", _v_4),
    ("5", _v_5),
    ("6", _v_6),
    ("7", _v_7),
    ("8", _v_8),
    ("9", _v_9),
    ("10", _v_10),
    ("11", _v_11),
    ("12", _v_12),
    ("13", _v_13),
    ("14", _v_14),
    ("15", _v_15),
]


def cond_V(real: LieRealization, pi: PrimeSet) -> ConditionTrace:
    """e(q,t) = c = e(q,r) for every t in tau and one of subcases (1)-(15)"""
    failed, common, bindings = _odd_cross_characteristic(real, pi, "V")
    if failed is not None:
        return failed
    r, tau = common[0], tuple(common[1:])
    orders = {s: mult_order(real.q, s) for s in tau}
    c = mult_order(real.q, r)
    n = _classical_n(real)
    bindings.update(
        {
            "r": r,
            "tau": list(tau),
            "c": c,
            "n": n,
            "e_values": {str(s): order for s, order in orders.items()},
        }
    )
    different = [t for t in tau if orders[t] != c]
    if different:
        t = different[0]
        return ConditionTrace(
            condition="V",
            realization=real,
            bindings=bindings,
            reason=f"e(q,{t}) = {orders[t]} != c = {c}",
        )
    quantities = Quantities(family=real.family, n=n, q=real.q, r=r, tau=tau, orders=orders, c=c)
    for label, clause in V_SUBCASES:
        if clause(quantities):
            return ConditionTrace(
                condition="V",
                subcase=label,
                realization=real,
                bindings=bindings,
                satisfied=True,
            )
    return ConditionTrace(
        condition="V", realization=real, bindings=bindings, reason="no subcase of V holds"
    )


# ================================================================================================
def _odd_exponent_half(q: int, p: int) -> int:
    """m with q = p^(2m+1)"""
    degree = 0
    while q > 1:
        q //= p
        degree += 1
    return (degree - 1) // 2


def condition_six_sets(real: LieRealization) -> List[Tuple[str, List[int]]]:
    """the listed prime sets of Condition VI for a Suzuki or Ree group, as (expression, primes)"""
    q = real.q
    if real.family == FAMILY_2B2:
        m = _odd_exponent_half(q, 2)
        values = [
            ("q-1", q - 1),
            ("q+2^(m+1)+1", q + 2 ** (m + 1) + 1),
            ("q-2^(m+1)+1", q - 2 ** (m + 1) + 1),
        ]
        return [(label, prime_set(value)) for label, value in values]
    if real.family == FAMILY_2G2:
        m = _odd_exponent_half(q, 3)
        values = [
            ("q-1", q - 1),
            ("q+3^(m+1)+1", q + 3 ** (m + 1) + 1),
            ("q-3^(m+1)+1", q - 3 ** (m + 1) + 1),
        ]
        return [
            (label, [prime for prime in prime_set(value) if prime != 2])
            for label, value in values
        ]
    if real.family == FAMILY_2F4:
        m = _odd_exponent_half(q, 2)
        values = [
            ("q^2+1", q**2 + 1),
            ("q^2-1", q**2 - 1),
            ("q+2^(m+1)+1", q + 2 ** (m + 1) + 1),
            ("q-2^(m+1)+1", q - 2 ** (m + 1) + 1),
            ("q^2+2^(3m+2)-2^(m+1)-1", q**2 + 2 ** (3 * m + 2) - 2 ** (m + 1) - 1),
            ("q^2-2^(3m+2)+2^(m+1)-1", q**2 - 2 ** (3 * m + 2) + 2 ** (m + 1) - 1),
            ("q^2+2^(3m+2)+q+2^(m+1)-1", q**2 + 2 ** (3 * m + 2) + q + 2 ** (m + 1) - 1),
            ("q^2-2^(3m+2)+q-2^(m+1)-1", q**2 - 2 ** (3 * m + 2) + q - 2 ** (m + 1) - 1),
        ]
        return [(label, prime_set(value)) for label, value in values]
    return []


def cond_VI(real: LieRealization, pi: PrimeSet) -> ConditionTrace:
    """Suzuki and Ree groups: pi & pi(S) inside one of the listed sets"""
    subcases = {FAMILY_2B2: "1", FAMILY_2G2: "2", FAMILY_2F4: "3"}
    common = _pi_cap_spectrum(real.group_id(), pi)
    bindings = {"p": real.p, "q": real.q, "pi_cap_S": common}
    if real.family not in subcases:
        return ConditionTrace(
            condition="VI",
            realization=real,
            bindings=bindings,
            reason="S is not a Suzuki or Ree group",
        )
    sets = condition_six_sets(real)
    bindings["m"] = _odd_exponent_half(real.q, real.p)
    bindings["sets"] = {label: primes for label, primes in sets}
    for label, primes in sets:
        if set(common) <= set(primes):
            return ConditionTrace(
                condition="VI",
                subcase=subcases[real.family],
                realization=real,
                bindings={**bindings, "containing_set": label},
                satisfied=True,
            )
    return ConditionTrace(
        condition="VI",
        subcase=subcases[real.family],
        realization=real,
        bindings=bindings,
        reason="pi & pi(S) lies in none of the listed sets",
    )


# ================================================================================================
# Condition VII, one clause per subcase


def _vii_1(x: Quantities) -> bool:
    return (
        x.family in (FAMILY_A, FAMILY_2A)
        and _every_s(x, lambda s: s > x.n)
        and all(t > x.n + 1 for t in x.phi)
    )


def _vii_2(x: Quantities) -> bool:
    return x.family == FAMILY_B and _every_s(x, lambda s: s > 2 * x.n + 1)


def _vii_3(x: Quantities) -> bool:
    return (
        x.family == FAMILY_C
        and _every_s(x, lambda s: s > x.n)
        and all(t > 2 * x.n + 1 for t in x.phi)
    )


def _vii_4(x: Quantities) -> bool:
    return x.family in (FAMILY_D, FAMILY_2D) and _every_s(x, lambda s: s > 2 * x.n)


def _vii_5(x: Quantities) -> bool:
    return x.family in (FAMILY_G2, FAMILY_2G2) and _excluded(x, (7,))


def _vii_6(x: Quantities) -> bool:
    return x.family == FAMILY_F4 and _excluded(x, (5, 7))


def _vii_7(x: Quantities) -> bool:
    return x.family in (FAMILY_E6, FAMILY_2E6) and _excluded(x, (5, 7))


def _vii_8(x: Quantities) -> bool:
    return x.family == FAMILY_E7 and _excluded(x, (5, 7, 11))


def _vii_9(x: Quantities) -> bool:
    return x.family == FAMILY_E8 and _excluded(x, (5, 7, 11, 13))


def _vii_10(x: Quantities) -> bool:
    return x.family == FAMILY_3D4 and _excluded(x, (7,))


VII_SUBCASES: List[Tuple[str, Callable[[Quantities], bool]]] = [
    ("1", _vii_1),
    ("2", _vii_2),
    ("3", _vii_3),
    ("4", _vii_4),
    ("5", _vii_5),
    ("6", _vii_6),
    ("7", _vii_7),
    ("8", _vii_8),
    ("9", _vii_9),
    ("10", _vii_10),
]


def cond_VII(real: LieRealization, pi: PrimeSet) -> ConditionTrace:
    """2 in pi, 3 and p not in pi, tau inside pi(q - epsilon) and one of subcases (1)-(10)"""
    common = _pi_cap_spectrum(real.group_id(), pi)
    bindings = {"p": real.p, "q": real.q, "pi_cap_S": common}
    reason = None
    if 2 not in pi:
        reason = "2 is not in pi"
    elif 3 in pi:
        reason = "3 is in pi"
    elif real.p in pi:
        reason = f"p = {real.p} is in pi"
    if reason is not None:
        return ConditionTrace(condition="VII", realization=real, bindings=bindings, reason=reason)
    if real.q % 2 == 0:
        raise InvalidInput(f"Condition VII reached {real.label} with q even")

    epsilon = epsilon_of(real.q)
    tau = tuple(prime for prime in common if prime != 2)
    phi = tuple(t for t in tau if fermat_prime_test(t))
    base_primes = prime_set(real.q - epsilon)
    n = _classical_n(real)
    bindings.update(
        {
            "epsilon": epsilon,
            "pi_q_minus_epsilon": base_primes,
            "tau": list(tau),
            "phi": list(phi),
            "n": n,
        }
    )
    outside = [t for t in tau if t not in base_primes]
    if outside:
        return ConditionTrace(
            condition="VII",
            realization=real,
            bindings=bindings,
            reason=f"tau is not contained in pi(q-epsilon): {outside}",
        )
    quantities = Quantities(
        family=real.family, n=n, q=real.q, r=2, tau=tau, orders={}, phi=phi
    )
    for label, clause in VII_SUBCASES:
        if clause(quantities):
            return ConditionTrace(
                condition="VII",
                subcase=label,
                realization=real,
                bindings=bindings,
                satisfied=True,
            )
    return ConditionTrace(
        condition="VII", realization=real, bindings=bindings, reason="no subcase of VII holds"
    )


# ================================================================================================
def _mark_witness(traces: List[ConditionTrace]) -> None:
    """the satisfied trace of the highest-numbered condition, earliest on ties"""
    satisfied = [trace for trace in traces if trace.satisfied]
    if satisfied:
        best = max(satisfied, key=lambda trace: (trace.rank, -traces.index(trace)))
        best.witness = True


def satisfies_any(
    group: SimpleGroupId, pi: PrimeSet, weyl_excludes_p: bool = None
) -> Tuple[bool, List[ConditionTrace]]:
    """
    whether (S, pi) satisfies one of Conditions I-VII
    I and II short-circuit; every Lie realization is then tried with III..VII,
    stopping at the first satisfied condition of that realization
    """
    group = canonicalize(validate(group))
    traces = [cond_I(group, pi)]
    if not traces[0].satisfied:
        traces.append(cond_II(group, pi))
    if not any(trace.satisfied for trace in traces):
        for real in lie_realizations(group):
            for condition in (cond_III, cond_IV, cond_V, cond_VI, cond_VII):
                if condition is cond_III:
                    trace = cond_III(real, pi, weyl_excludes_p)
                else:
                    trace = condition(real, pi)
                traces.append(trace)
                if trace.satisfied:
                    break
    _mark_witness(traces)
    holds = any(trace.satisfied for trace in traces)
    logger.debug("conditions on %s for pi=%s: %s", group.label, pi.describe(), holds)
    return holds, traces
