"""
verdicts on D_X and D_pi membership, for simple groups and for groups given
by their composition factors
"""

from typing import Dict, Iterable, List, Tuple

from hallverdict.core.conditionfunctions import satisfies_any
from hallverdict.groups.groups_service import canonicalize, prime_spectrum, validate
from hallverdict.groups.schema import SimpleGroupId
from hallverdict.schemas.primeset_schema import PrimeSet
from hallverdict.schemas.verdict_schema import (
    RULE_ALL_PI_GROUPS,
    RULE_SOLVABLE_ONLY,
    STATUS_CONDITION_MET,
    STATUS_FAILED,
    STATUS_IN_CLASS,
    ClassSpec,
    FactorStatus,
    Verdict,
)
from hallverdict.utils.custom_logger import CustomLogger
from hallverdict.utils.errors import InconsistentClass

logger = CustomLogger("hallverdict")


def in_class_simple(group: SimpleGroupId, class_spec: ClassSpec) -> bool:
    """whether the simple group belongs to the class"""
    group = canonicalize(validate(group))
    spectrum = prime_spectrum(group).primes
    if group.is_abelian:
        return group.p in class_spec.pi
    if class_spec.rule == RULE_ALL_PI_GROUPS:
        return class_spec.pi.contains_all(spectrum)
    if class_spec.rule == RULE_SOLVABLE_ONLY:
        return False
    accepted = bool(class_spec.predicate(group))
    if accepted and not class_spec.pi.contains_all(spectrum):
        raise InconsistentClass(
            f"the class rule accepts {group.label} but pi(S) = {list(spectrum)} "
            f"is not inside pi = {class_spec.pi.describe()}"
        )
    return accepted


def _simple_status(
    group: SimpleGroupId, class_spec: ClassSpec, weyl_excludes_p: bool = None
) -> FactorStatus:
    """
    S in X, or pi(S) not inside pi and (S, pi) satisfies one of the conditions
    """
    if in_class_simple(group, class_spec):
        return FactorStatus(factor=group, status=STATUS_IN_CLASS)
    if class_spec.pi.contains_all(prime_spectrum(group).primes):
        return FactorStatus(factor=group, status=STATUS_FAILED)
    holds, traces = satisfies_any(group, class_spec.pi, weyl_excludes_p)
    if not holds:
        return FactorStatus(factor=group, status=STATUS_FAILED, traces=traces)
    witness = next(trace for trace in traces if trace.witness)
    return FactorStatus(
        factor=group, status=STATUS_CONDITION_MET, witness=witness, traces=traces
    )


def dx_simple(
    group: SimpleGroupId, class_spec: ClassSpec, weyl_excludes_p: bool = None
) -> Verdict:
    """D_X for a simple group"""
    group = canonicalize(validate(group))
    status = _simple_status(group, class_spec, weyl_excludes_p)
    return Verdict(answer=status.passed, class_spec=class_spec, per_factor=[status])


def dpi_simple(group: SimpleGroupId, pi: PrimeSet, weyl_excludes_p: bool = None) -> Verdict:
    """D_pi for a simple group: S is a pi-group or (S, pi) satisfies one of the conditions"""
    return dx_simple(group, ClassSpec.all_pi_groups(pi), weyl_excludes_p)


def dx_simple_direct(
    group: SimpleGroupId, class_spec: ClassSpec, weyl_excludes_p: bool = None
) -> bool:
    """the same verdict as dx_simple, evaluated as the plain disjunction"""
    group = canonicalize(validate(group))
    spectrum = prime_spectrum(group).primes
    is_pi_group = class_spec.pi.contains_all(spectrum)
    return in_class_simple(group, class_spec) or (
        not is_pi_group and satisfies_any(group, class_spec.pi, weyl_excludes_p)[0]
    )


def dx_group(
    factors: Iterable[SimpleGroupId], class_spec: ClassSpec, weyl_excludes_p: bool = None
) -> Verdict:
    """
    D_X for a group with the given composition factors: every factor has to pass;
    every factor is evaluated even after one fails
    """
    seen: Dict[Tuple[SimpleGroupId, bool], FactorStatus] = {}
    per_factor: List[FactorStatus] = []
    for factor in factors:
        group = canonicalize(validate(factor))
        key = (group, weyl_excludes_p)
        if key not in seen:
            seen[key] = _simple_status(group, class_spec, weyl_excludes_p)
        per_factor.append(seen[key])
    answer = all(status.passed for status in per_factor)
    logger.info(
        "D_X verdict for %s, pi=%s, rule=%s: %s",
        [status.factor.label for status in per_factor],
        class_spec.pi.describe(),
        class_spec.rule,
        answer,
    )
    return Verdict(answer=answer, class_spec=class_spec, per_factor=per_factor)


def dpi_group(
    factors: Iterable[SimpleGroupId], pi: PrimeSet, weyl_excludes_p: bool = None
) -> Verdict:
    """D_pi for a group with the given composition factors"""
    return dx_group(factors, ClassSpec.all_pi_groups(pi), weyl_excludes_p)
