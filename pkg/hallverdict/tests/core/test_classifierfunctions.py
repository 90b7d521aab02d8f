import random
from itertools import combinations

import pytest

from hallverdict.core.classifierfunctions import (
    dpi_group,
    dpi_simple,
    dx_group,
    dx_simple,
    dx_simple_direct,
    in_class_simple,
)
from hallverdict.groups.groups_service import prime_spectrum
from hallverdict.groups.schema import SimpleGroupId
from hallverdict.schemas.primeset_schema import PrimeSet
from hallverdict.schemas.verdict_schema import (
    STATUS_CONDITION_MET,
    STATUS_FAILED,
    STATUS_IN_CLASS,
    ClassSpec,
)
from hallverdict.utils.errors import InconsistentClass, NotSimple

ALT5 = SimpleGroupId.alternating(5)
SZ8 = SimpleGroupId.lie("2B2", 1, 8)
PSL27 = SimpleGroupId.lie("A", 1, 7)

SAMPLE_GROUPS = [
    SimpleGroupId.cyclic(2),
    SimpleGroupId.cyclic(3),
    SimpleGroupId.cyclic(7),
    ALT5,
    SimpleGroupId.alternating(6),
    SimpleGroupId.alternating(7),
    SimpleGroupId.alternating(8),
    PSL27,
    SimpleGroupId.lie("A", 1, 8),
    SimpleGroupId.lie("A", 1, 11),
    SimpleGroupId.lie("A", 1, 13),
    SimpleGroupId.lie("A", 1, 19),
    SimpleGroupId.lie("A", 1, 29),
    SimpleGroupId.lie("A", 2, 3),
    SimpleGroupId.lie("A", 2, 4),
    SimpleGroupId.lie("2A", 2, 3),
    SimpleGroupId.lie("B", 2, 3),
    SimpleGroupId.lie("G2", 2, 3),
    SZ8,
    SimpleGroupId.lie("2B2", 1, 32),
    SimpleGroupId.lie("2G2", 1, 27),
    SimpleGroupId.sporadic("M11"),
    SimpleGroupId.sporadic("M23"),
    SimpleGroupId.sporadic("J1"),
    SimpleGroupId.sporadic("Tits"),
]

SAMPLE_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


def pi(*primes):
    return PrimeSet.finite(primes)


# ================================================================================================
def test_in_class_simple_examples():
    """verifies class membership of simple groups"""
    assert in_class_simple(ALT5, ClassSpec.all_pi_groups(pi(2, 3, 5)))
    assert not in_class_simple(ALT5, ClassSpec.solvable_only(pi(2, 3, 5)))
    assert not in_class_simple(SimpleGroupId.cyclic(7), ClassSpec.all_pi_groups(pi(2, 3, 5)))
    assert in_class_simple(SimpleGroupId.cyclic(7), ClassSpec.solvable_only(pi(7)))


def test_in_class_simple_custom():
    """verifies a custom rule and the pi(S) sanity check"""
    only_alt5 = ClassSpec.custom(pi(2, 3, 5), lambda group: group == ALT5)
    assert in_class_simple(ALT5, only_alt5)
    assert not in_class_simple(SimpleGroupId.alternating(6), only_alt5)
    everything = ClassSpec.custom(pi(2, 3), lambda group: True)
    with pytest.raises(InconsistentClass):
        in_class_simple(ALT5, everything)


def test_in_class_simple_canonicalizes():
    """verifies that the rule sees the canonical representative"""
    only_alt5 = ClassSpec.custom(pi(2, 3, 5), lambda group: group == ALT5)
    assert in_class_simple(SimpleGroupId.lie("A", 1, 4), only_alt5)


def test_in_class_simple_not_simple():
    """verifies NotSimple on invalid descriptors"""
    with pytest.raises(NotSimple):
        in_class_simple(SimpleGroupId.alternating(4), ClassSpec.all_pi_groups(pi(2, 3)))


# ================================================================================================
def test_dpi_simple_examples():
    """verifies D_pi for the worked examples"""
    verdict = dpi_simple(ALT5, pi(2, 3, 5))
    assert verdict.answer
    assert verdict.per_factor[0].status == STATUS_IN_CLASS

    verdict = dpi_simple(SZ8, pi(2, 3))
    assert verdict.answer
    assert verdict.per_factor[0].status == STATUS_CONDITION_MET
    assert verdict.per_factor[0].witness.name == "I"

    verdict = dpi_simple(PSL27, pi(2, 3))
    assert not verdict.answer
    assert verdict.per_factor[0].status == STATUS_FAILED
    assert verdict.per_factor[0].traces


def test_dx_simple_examples():
    """verifies D_X for the worked examples"""
    assert dx_simple(ALT5, ClassSpec.all_pi_groups(pi(2, 3, 5))).answer
    verdict = dx_simple(ALT5, ClassSpec.solvable_only(pi(2, 3, 5)))
    assert not verdict.answer
    assert verdict.per_factor[0].traces == []
    verdict = dx_simple(SZ8, ClassSpec.solvable_only(pi(2, 3)))
    assert verdict.answer
    assert verdict.per_factor[0].witness.name == "I"


def test_dx_simple_weyl_reading():
    """verifies the Weyl reading reaches Condition III"""
    group = SimpleGroupId.lie("A", 2, 11)
    literal = dpi_simple(group, pi(5, 11), weyl_excludes_p=False)
    excluding_p = dpi_simple(group, pi(5, 11), weyl_excludes_p=True)
    assert literal.answer
    assert excluding_p.answer
    witness = excluding_p.per_factor[0].witness
    assert witness.bindings["weyl_reading"] == "pi-minus-p"


# ================================================================================================
def test_dx_group_examples():
    """verifies D_X for groups given by composition factors"""
    verdict = dx_group([SimpleGroupId.cyclic(2), ALT5], ClassSpec.all_pi_groups(pi(2, 3)))
    assert not verdict.answer
    assert [status.status for status in verdict.per_factor] == [STATUS_IN_CLASS, STATUS_FAILED]

    verdict = dx_group(
        [SimpleGroupId.cyclic(2), SimpleGroupId.cyclic(3), SimpleGroupId.cyclic(5)],
        ClassSpec.solvable_only(pi(2, 3)),
    )
    assert verdict.answer
    assert [status.status for status in verdict.per_factor] == [
        STATUS_IN_CLASS,
        STATUS_IN_CLASS,
        STATUS_CONDITION_MET,
    ]

    verdict = dx_group([ALT5, ALT5, SimpleGroupId.cyclic(2)], ClassSpec.all_pi_groups(pi(2, 3, 5)))
    assert verdict.answer


def test_dx_group_total():
    """verifies that factors after a failing one are still evaluated"""
    verdict = dpi_group([PSL27, ALT5, SZ8], pi(2, 3))
    assert not verdict.answer
    assert len(verdict.per_factor) == 3
    assert verdict.per_factor[2].status == STATUS_CONDITION_MET


def test_dx_group_report():
    """verifies the json report of a verdict"""
    verdict = dpi_group([PSL27], pi(3, 7))
    report = verdict.report()
    assert report["verdict"] is True
    assert report["class"] == {"pi": "3,7", "rule": "gpi"}
    factor = report["factors"][0]
    assert factor["id"] == "Lie(A,1,7)"
    assert factor["status"] == STATUS_CONDITION_MET
    assert factor["witness_condition"] == "IV.1"
    assert factor["witness_realization"] == "A_2(2)"
    assert factor["bindings"]["b"] == 3


def test_dx_group_cofinite():
    """verifies a cofinite pi"""
    verdict = dpi_group([ALT5, SimpleGroupId.cyclic(7)], PrimeSet.excluding([7]))
    assert verdict.answer
    assert verdict.per_factor[0].status == STATUS_IN_CLASS
    assert verdict.per_factor[1].status == STATUS_CONDITION_MET


# ================================================================================================
def test_dx_group_permutation_invariance():
    """verifies that the order of the factors does not matter"""
    rng = random.Random(7)
    for _ in range(60):
        factors = rng.sample(SAMPLE_GROUPS, 4)
        primes = rng.sample(SAMPLE_PRIMES, rng.randint(1, 4))
        spec = ClassSpec.all_pi_groups(pi(*primes))
        shuffled = factors[:]
        rng.shuffle(shuffled)
        assert dx_group(factors, spec).answer == dx_group(shuffled, spec).answer


def test_dx_subset_of_dpi():
    """verifies that D_X membership implies D_pi membership"""
    rng = random.Random(11)
    for _ in range(80):
        factors = rng.sample(SAMPLE_GROUPS, 3)
        primes = rng.sample(SAMPLE_PRIMES, rng.randint(1, 4))
        for spec in [ClassSpec.solvable_only(pi(*primes)), ClassSpec.all_pi_groups(pi(*primes))]:
            if dx_group(factors, spec).answer:
                assert dpi_group(factors, spec.pi).answer


def test_theorem_formula_matches_direct_disjunction():
    """verifies dx_simple against the plain disjunction on 500 seeded pairs"""
    rng = random.Random(20240229)
    for _ in range(500):
        group = rng.choice(SAMPLE_GROUPS)
        primes = rng.sample(SAMPLE_PRIMES, rng.randint(0, 5))
        for spec in [ClassSpec.solvable_only(pi(*primes)), ClassSpec.all_pi_groups(pi(*primes))]:
            assert dx_simple(group, spec).answer == dx_simple_direct(group, spec)


@pytest.mark.parametrize(
    "group",
    [group for group in SAMPLE_GROUPS if not group.is_abelian],
    ids=lambda group: group.label,
)
def test_downward_closure(group):
    """verifies D_pi implies D_tau for every tau inside pi when S is not a pi-group"""
    spectrum = prime_spectrum(group).primes
    subsets = [
        primes
        for size in range(1, len(spectrum))
        for primes in combinations(spectrum, size)
    ]
    inside = {primes for primes in subsets if dpi_simple(group, pi(*primes)).answer}
    for primes in inside:
        for size in range(1, len(primes)):
            for tau in combinations(primes, size):
                assert tau in inside, (group.label, primes, tau)


def test_only_suzuki_groups_in_d23():
    """verifies that among the sample groups only the Suzuki groups are in D_{2,3}"""
    inside = [
        group
        for group in SAMPLE_GROUPS
        if not group.is_abelian and dpi_simple(group, pi(2, 3)).answer
    ]
    assert inside == [SZ8, SimpleGroupId.lie("2B2", 1, 32)]
