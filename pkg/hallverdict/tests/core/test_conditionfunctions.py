from itertools import combinations

import pytest

from hallverdict.core.conditionfunctions import (
    Quantities,
    _v_1,
    _v_6,
    _v_7,
    _v_8,
    cond_I,
    cond_II,
    cond_III,
    cond_IV,
    cond_V,
    cond_VI,
    cond_VII,
    condition_six_sets,
    satisfies_any,
)
from hallverdict.groups.groups_service import characteristic, prime_spectrum
from hallverdict.groups.schema import LieRealization, SimpleGroupId
from hallverdict.schemas.primeset_schema import PrimeSet
from hallverdict.utils.constants import (
    CONDITION_TWO_ITEMS,
    FLAG_TITS_NOT_APPLIED,
    FLAG_TWISTED_WEYL_AMBIENT,
    FLAG_WEYL_READING_DIFFERS,
)
from hallverdict.utils.errors import InvalidInput

REALIZATION_CONDITIONS = {
    "III": cond_III,
    "IV": cond_IV,
    "V": cond_V,
    "VI": cond_VI,
    "VII": cond_VII,
}


def pi(*primes):
    return PrimeSet.finite(primes)


def real(family, rank, q):
    return LieRealization(family=family, rank=rank, q=q, p=characteristic(q))


def spor(name):
    return SimpleGroupId.sporadic(name)


# ================================================================================================
def test_cond_I():
    """verifies |pi & pi(S)| <= 1"""
    assert cond_I(SimpleGroupId.alternating(5), pi(2, 7)).satisfied
    assert cond_I(SimpleGroupId.alternating(5), pi()).satisfied
    trace = cond_I(SimpleGroupId.alternating(5), pi(2, 3))
    assert not trace.satisfied
    assert trace.bindings["pi_cap_S"] == [2, 3]


def test_cond_I_cofinite():
    """verifies that a cofinite pi is cut down to pi(S)"""
    trace = cond_I(SimpleGroupId.alternating(5), PrimeSet.excluding([2, 3]))
    assert trace.satisfied
    assert trace.bindings["pi_cap_S"] == [5]


def test_cond_II_examples():
    """verifies the listed sporadic sets"""
    trace = cond_II(spor("M11"), pi(5, 11))
    assert trace.satisfied
    assert trace.name == "II.1"
    trace = cond_II(spor("Ly"), pi(11, 67))
    assert trace.satisfied
    assert trace.name == "II.9"
    assert not cond_II(spor("M11"), pi(2, 3, 5)).satisfied
    assert cond_II(spor("M23"), pi(11, 23)).name == "II.4"


def test_cond_II_not_sporadic():
    """verifies the failure reasons outside the table"""
    assert not cond_II(SimpleGroupId.alternating(5), pi(2, 5)).satisfied
    trace = cond_II(spor("HS"), pi(5, 11))
    assert not trace.satisfied
    assert "does not occur" in trace.reason


def test_cond_II_tits_flag():
    """verifies that the Tits group is flagged"""
    trace = cond_II(spor("Tits"), pi(5, 13))
    assert not trace.satisfied
    assert FLAG_TITS_NOT_APPLIED in trace.flags


@pytest.mark.parametrize("primes", [(13,), (2, 7), (5, 13), (2, 3)])
def test_tits_flag_on_every_path(primes):
    """verifies that the Tits group is flagged also when Condition I decides"""
    _, traces = satisfies_any(spor("Tits"), pi(*primes))
    assert any(FLAG_TITS_NOT_APPLIED in trace.flags for trace in traces)
    assert FLAG_TITS_NOT_APPLIED in traces[0].flags
    assert FLAG_TITS_NOT_APPLIED not in cond_I(spor("J1"), pi(2, 3)).flags


def test_cond_II_table_size():
    """verifies 17 items and 29 listed pairs"""
    assert len(CONDITION_TWO_ITEMS) == 17
    assert sum(len(listed) for _, _, listed in CONDITION_TWO_ITEMS) == 29


@pytest.mark.parametrize("item, name, listed", CONDITION_TWO_ITEMS)
def test_cond_II_exhaustive(item, name, listed):
    """verifies that exactly the listed subsets of pi(S) of size <= 3 satisfy Condition II"""
    spectrum = prime_spectrum(spor(name)).primes
    for size in range(0, 4):
        for subset in combinations(spectrum, size):
            trace = cond_II(spor(name), pi(*subset))
            assert trace.satisfied == (set(subset) in listed), (name, subset)
            assert trace.subcase == str(item)


# ================================================================================================
def test_cond_III_examples():
    """verifies the defining characteristic condition"""
    trace = cond_III(real("A", 2, 11), pi(5, 11))
    assert trace.satisfied
    assert trace.bindings["tau"] == [5]
    assert trace.bindings["weyl_order"] == 6
    trace = cond_III(real("A", 2, 11), pi(2, 11))
    assert not trace.satisfied
    assert "divides |W|" in trace.reason
    assert cond_III(real("A", 2, 5), pi(5)).satisfied


def test_cond_III_p_not_in_pi():
    """verifies failure when p is not in pi"""
    trace = cond_III(real("A", 2, 11), pi(2, 5))
    assert not trace.satisfied
    assert trace.reason == "p = 11 is not in pi"


def test_cond_III_readings():
    """verifies both Weyl readings and the flag when they disagree"""
    literal = cond_III(real("A", 2, 3), pi(3), weyl_excludes_p=False)
    assert not literal.satisfied
    assert FLAG_WEYL_READING_DIFFERS in literal.flags
    assert literal.bindings["weyl_reading"] == "pi"
    excluding_p = cond_III(real("A", 2, 3), pi(3), weyl_excludes_p=True)
    assert excluding_p.satisfied
    assert FLAG_WEYL_READING_DIFFERS in excluding_p.flags
    assert excluding_p.bindings["weyl_reading"] == "pi-minus-p"
    agreeing = cond_III(real("A", 2, 11), pi(5, 11), weyl_excludes_p=False)
    assert FLAG_WEYL_READING_DIFFERS not in agreeing.flags


def test_cond_III_twisted_and_exceptional():
    """verifies the twisted-ambient flag and the exceptional Weyl record"""
    trace = cond_III(real("2A", 2, 3), pi(3))
    assert FLAG_TWISTED_WEYL_AMBIENT in trace.flags
    trace = cond_III(real("E6", 6, 2), pi(2))
    assert trace.bindings["weyl"]["order"] == 51840
    assert FLAG_TWISTED_WEYL_AMBIENT not in trace.flags


# ================================================================================================
def test_cond_IV_examples():
    """verifies subcases (1) and (8) and the precondition"""
    trace = cond_IV(real("A", 2, 2), pi(3, 7))
    assert trace.satisfied
    assert trace.subcase == "1"
    assert trace.bindings["r"] == 3
    assert trace.bindings["a"] == 2
    assert trace.bindings["b"] == 3
    assert trace.bindings["r_part_q_r_minus_1"] == 3
    trace = cond_IV(real("A", 2, 2), pi(2, 3))
    assert not trace.satisfied
    assert trace.reason == "2 is in pi"
    trace = cond_IV(real("2D", 6, 3), pi(7, 13))
    assert trace.satisfied
    assert trace.subcase == "8"
    assert trace.bindings["a"] == 6
    assert trace.bindings["t"] == 13
    assert trace.bindings["b"] == 3


def test_cond_IV_preconditions():
    """verifies p in pi and a single prime both fail"""
    assert cond_IV(real("A", 2, 3), pi(3, 13)).reason == "p = 3 is in pi"
    assert cond_IV(real("A", 2, 3), pi(13)).reason == "|pi & pi(S)| = 1 < 2"


def test_cond_IV_no_candidate():
    """verifies failure when every t has e(q,t) = a"""
    trace = cond_IV(real("2B2", 1, 128), pi(5, 29))
    assert not trace.satisfied
    assert trace.reason == "no t in tau with e(q,t) != a"


# ================================================================================================
def test_cond_V_examples():
    """verifies subcase (14) and the equal-order requirement"""
    trace = cond_V(real("G2", 2, 31), pi(3, 5))
    assert trace.satisfied
    assert trace.subcase == "14"
    assert trace.bindings["c"] == 1
    trace = cond_V(real("G2", 2, 31), pi(3, 5, 7))
    assert not trace.satisfied
    assert trace.reason == "e(q,7) = 6 != c = 1"
    trace = cond_V(real("3D4", 4, 2), pi(3, 7))
    assert not trace.satisfied
    assert trace.reason == "e(q,7) = 3 != c = 2"


def _quantities(family, n, c, s):
    return Quantities(family=family, n=n, q=0, r=3, tau=(s,), orders={s: c}, c=c)


def test_cond_V_inequalities():
    """verifies which subcases compare strictly and which do not"""
    # (1) n < cs
    assert _v_1(_quantities("A", 6, 1, 7))
    assert not _v_1(_quantities("A", 7, 1, 7))
    # (6) n < cs
    assert _v_6(_quantities("D", 13, 2, 7))
    assert not _v_6(_quantities("D", 14, 2, 7))
    # (7) 2n <= cs
    assert _v_7(_quantities("D", 7, 2, 7))
    assert not _v_7(_quantities("D", 8, 2, 7))
    assert not _v_7(_quantities("D", 7, 1, 7))
    # (8) n <= cs
    assert _v_8(_quantities("2D", 7, 1, 7))
    assert not _v_8(_quantities("2D", 8, 1, 7))
    assert not _v_8(_quantities("2D", 7, 2, 7))


# ================================================================================================
def test_cond_VI_examples():
    """verifies the Suzuki sets"""
    trace = cond_VI(real("2B2", 1, 128), pi(5, 29))
    assert trace.satisfied
    assert trace.subcase == "1"
    assert trace.bindings["containing_set"] == "q+2^(m+1)+1"
    trace = cond_VI(real("2B2", 1, 8), pi(5, 13))
    assert not trace.satisfied
    trace = cond_VI(real("2B2", 1, 2048), pi(23, 89))
    assert trace.satisfied
    assert trace.bindings["containing_set"] == "q-1"


def test_cond_VI_other_families():
    """verifies failure outside the Suzuki and Ree families"""
    trace = cond_VI(real("A", 1, 7), pi(3, 7))
    assert not trace.satisfied
    assert trace.reason == "S is not a Suzuki or Ree group"


def test_condition_six_sets_ree():
    """verifies that 2 is removed from the small Ree sets"""
    sets = dict(condition_six_sets(real("2G2", 1, 27)))
    assert sets == {"q-1": [13], "q+3^(m+1)+1": [37], "q-3^(m+1)+1": [19]}


def test_condition_six_sets_suzuki():
    """verifies the three Suzuki sets for q = 8"""
    sets = dict(condition_six_sets(real("2B2", 1, 8)))
    assert sets == {"q-1": [7], "q+2^(m+1)+1": [13], "q-2^(m+1)+1": [5]}


def test_condition_six_sets_large_ree():
    """verifies the eight large Ree sets for q = 8, expressions evaluated as printed"""
    sets = dict(condition_six_sets(real("2F4", 2, 8)))
    assert len(sets) == 8
    assert sets["q^2+1"] == [5, 13]
    assert sets["q^2-1"] == [3, 7]
    assert sets["q+2^(m+1)+1"] == [13]
    assert sets["q-2^(m+1)+1"] == [5]
    assert sets["q^2+2^(3m+2)-2^(m+1)-1"] == [7, 13]
    assert sets["q^2-2^(3m+2)+2^(m+1)-1"] == [5, 7]


# ================================================================================================
def test_cond_VII_examples():
    """verifies subcase (1) with both signs of epsilon"""
    trace = cond_VII(real("A", 1, 29), pi(2, 7))
    assert trace.satisfied
    assert trace.subcase == "1"
    assert trace.bindings["epsilon"] == 1
    trace = cond_VII(real("A", 1, 11), pi(2, 5))
    assert not trace.satisfied
    assert trace.bindings["epsilon"] == -1
    trace = cond_VII(real("A", 1, 19), pi(2, 5))
    assert trace.satisfied
    assert trace.bindings["phi"] == [5]


def test_cond_VII_preconditions():
    """verifies the 2, 3 and p checks"""
    assert cond_VII(real("A", 1, 29), pi(7)).reason == "2 is not in pi"
    assert cond_VII(real("A", 1, 29), pi(2, 3, 7)).reason == "3 is in pi"
    assert cond_VII(real("A", 1, 29), pi(2, 29)).reason == "p = 29 is in pi"


def test_cond_VII_even_q():
    """verifies InvalidInput when an even q gets past the checks"""
    inconsistent = LieRealization(family="A", rank=1, q=8, p=3)
    with pytest.raises(InvalidInput):
        cond_VII(inconsistent, pi(2, 7))


# ================================================================================================
def test_satisfies_any_examples():
    """verifies the pinned witnesses"""
    holds, traces = satisfies_any(SimpleGroupId.alternating(5), pi(2, 5))
    assert not holds
    assert not any(trace.witness for trace in traces)

    holds, traces = satisfies_any(SimpleGroupId.lie("A", 1, 7), pi(3, 7))
    assert holds
    witness = next(trace for trace in traces if trace.witness)
    assert witness.name == "IV.1"
    assert witness.realization.label == "A_2(2)"

    holds, traces = satisfies_any(spor("M23"), pi(11, 23))
    assert holds
    assert next(trace for trace in traces if trace.witness).name == "II.4"

    holds, traces = satisfies_any(SimpleGroupId.lie("2B2", 1, 8), pi(2, 3))
    assert holds
    assert [trace.name for trace in traces] == ["I"]

    holds, traces = satisfies_any(SimpleGroupId.lie("2B2", 1, 128), pi(5, 29))
    assert holds
    assert next(trace for trace in traces if trace.witness).name == "VI.1"


def test_satisfies_any_psl27_two_three():
    """verifies that PSL(2,7) fails for {2,3}"""
    holds, traces = satisfies_any(SimpleGroupId.lie("A", 1, 7), pi(2, 3))
    assert not holds
    realizations = {trace.realization.label for trace in traces if trace.realization}
    assert realizations == {"A_1(7)", "A_2(2)"}


def test_satisfies_any_single_witness():
    """verifies that at most one trace is marked as witness"""
    for group, primes in [
        (SimpleGroupId.lie("A", 1, 7), (3, 7)),
        (SimpleGroupId.alternating(5), (2, 3)),
        (SimpleGroupId.lie("A", 1, 29), (2, 7)),
    ]:
        _, traces = satisfies_any(group, pi(*primes))
        assert sum(trace.witness for trace in traces) <= 1


def test_satisfies_any_canonical_invariance():
    """verifies that isomorphic descriptors give the same answer"""
    pairs = [
        (SimpleGroupId.lie("A", 2, 2), SimpleGroupId.lie("A", 1, 7)),
        (SimpleGroupId.lie("A", 1, 4), SimpleGroupId.alternating(5)),
        (SimpleGroupId.lie("2A", 3, 2), SimpleGroupId.lie("B", 2, 3)),
        (SimpleGroupId.lie("B", 3, 4), SimpleGroupId.lie("C", 3, 4)),
    ]
    for alias, canonical in pairs:
        for primes in [(2, 3), (3, 7), (3, 5), (2, 5), (5, 7), (2, 3, 5)]:
            assert satisfies_any(alias, pi(*primes))[0] == satisfies_any(canonical, pi(*primes))[0]


# ================================================================================================
def _replay(group, trace):
    replay_pi = PrimeSet.finite(trace.bindings["pi_cap_S"])
    if trace.condition == "I":
        return cond_I(group, replay_pi)
    if trace.condition == "II":
        return cond_II(group, replay_pi)
    if trace.condition == "III":
        weyl_excludes_p = trace.bindings["weyl_reading"] == "pi-minus-p"
        return cond_III(trace.realization, replay_pi, weyl_excludes_p)
    return REALIZATION_CONDITIONS[trace.condition](trace.realization, replay_pi)


@pytest.mark.parametrize(
    "group, primes",
    [
        (SimpleGroupId.lie("A", 1, 7), (3, 7)),
        (SimpleGroupId.lie("A", 1, 7), (2, 3)),
        (SimpleGroupId.alternating(5), (2, 5)),
        (SimpleGroupId.lie("2B2", 1, 128), (5, 29)),
        (SimpleGroupId.lie("G2", 2, 31), (3, 5, 11)),
        (SimpleGroupId.lie("A", 1, 19), (2, 5, 11)),
        (SimpleGroupId.lie("2D", 6, 3), (7, 13, 11)),
        (spor("J1"), (3, 19, 23)),
        (spor("Tits"), (5, 13)),
    ],
)
def test_trace_replay(group, primes):
    """verifies that every trace is reproduced from pi & pi(S) alone"""
    _, traces = satisfies_any(group, pi(*primes))
    for trace in traces:
        if "pi_cap_S" not in trace.bindings:
            continue
        replayed = _replay(group, trace)
        assert replayed.satisfied == trace.satisfied, trace.report()
        assert replayed.subcase == trace.subcase, trace.report()
