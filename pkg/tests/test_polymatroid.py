import pytest
from hypothesis import given
from hypothesis import strategies as st

from corpus import brute_bases, pair_params, single_families
from polymat.core import CapacityError, FamilyParams, InvalidInputError, Presentation, family_presentation
from polymat.intersect import PairParams, intersection_base_set, witness
from polymat.polymatroid import (
    BaseSet,
    ExchangeViolation,
    check_base_exchange,
    enumerate_bases,
    exhaustive_recognize,
    rank_of,
    recognize_transversal,
)


@st.composite
def presentations(draw, min_n=2, max_n=5):
    n = draw(st.integers(min_n, max_n))
    subset = st.sets(st.integers(1, n), min_size=1)
    return Presentation.from_lists(draw(st.lists(subset, min_size=n, max_size=n)), n=n)


@given(presentations())
def test_enumeration_matches_product_oracle(P):
    assert enumerate_bases(P).points == brute_bases(P.sets)


@given(presentations(), st.randoms())
def test_enumeration_ignores_set_order(P, rnd):
    sets = list(P.sets)
    rnd.shuffle(sets)
    assert enumerate_bases(Presentation(P.n, tuple(sets))) == enumerate_bases(P)


@given(presentations(), st.data())
def test_rank_counts_sets_meeting_s(P, data):
    S = data.draw(st.sets(st.integers(1, P.n)))
    B = enumerate_bases(P)
    assert rank_of(B, S) == sum(1 for C in P.sets if C & S)


@given(presentations())
def test_transversal_sets_satisfy_exchange(P):
    assert check_base_exchange(enumerate_bases(P)) is None


@given(presentations(min_n=3))
def test_recognition_recovers_the_presentation(P):
    result = recognize_transversal(enumerate_bases(P))
    assert result.transversal
    # the rank function pins down the multiset of sets
    assert result.witness.canonical() == P.canonical()


@given(presentations(max_n=4))
def test_exhaustive_recognition_agrees(P):
    result = exhaustive_recognize(enumerate_bases(P))
    assert result.transversal
    assert enumerate_bases(result.witness) == enumerate_bases(P)


def test_family_counts():
    assert len(enumerate_bases(family_presentation(FamilyParams(4, 1, 0)))) == 31
    assert len(enumerate_bases(family_presentation(FamilyParams(3, 1, 0)))) == 9


def test_simplex_count():
    # every set equal to [n] gives every composition of n
    P = Presentation.from_lists([[1, 2, 3, 4]] * 4)
    assert len(enumerate_bases(P)) == 35


def test_exchange_violation_example():
    B = BaseSet(2, frozenset({(2, 0), (0, 2)}))
    assert check_base_exchange(B) == ExchangeViolation((2, 0), (0, 2), 1)


def test_exchange_on_intersection_that_is_not_a_polymatroid():
    B = intersection_base_set(PairParams(4, 2, 2, 1))
    v = check_base_exchange(B)
    assert v is not None
    a = v.index - 1
    assert v.u[a] > v.v[a]
    for b in range(4):
        if v.u[b] < v.v[b]:
            w = list(v.u)
            w[a] -= 1
            w[b] += 1
            assert tuple(w) not in B


@pytest.mark.parametrize("p", [p for p in pair_params(5)], ids=lambda p: str(p.as_tuple()))
def test_recognizers_agree_on_pair_intersections(p):
    B = intersection_base_set(p)
    fast, slow = recognize_transversal(B), exhaustive_recognize(B)
    assert fast.transversal == slow.transversal


def test_non_transversal_carries_a_certificate():
    result = recognize_transversal(intersection_base_set(PairParams(4, 2, 2, 1)))
    assert not result.transversal
    assert result.negative or result.missing or result.extra
    assert result.to_dict()["transversal"] is False


def test_example_witness_is_recognized():
    B = enumerate_bases(witness(PairParams(4, 1, 1, 1)))
    result = recognize_transversal(B)
    assert result.witness.canonical() == ((1, 3, 4), (1, 3, 4), (2, 3, 4), (2, 3, 4))


def test_base_set_validation():
    with pytest.raises(InvalidInputError):
        BaseSet(2, frozenset({(1, 1), (3, 0)}))
    with pytest.raises(InvalidInputError):
        BaseSet(2, frozenset({(1, -1)}))
    with pytest.raises(InvalidInputError):
        BaseSet(3, frozenset({(1, 1)}))
    with pytest.raises(InvalidInputError):
        check_base_exchange(BaseSet(2, frozenset()))


def test_base_set_round_trip():
    B = enumerate_bases(family_presentation(FamilyParams(3, 1, 2)))
    assert BaseSet.from_dict(B.to_dict()) == B
    assert B.sorted_points() == sorted(B.points)


def test_recognition_needs_modulus_n():
    with pytest.raises(InvalidInputError):
        recognize_transversal(BaseSet(3, frozenset({(1, 1, 0)})))


def test_exhaustive_capacity():
    P = family_presentation(FamilyParams(6, 1, 0))
    with pytest.raises(CapacityError):
        exhaustive_recognize(enumerate_bases(P))


@pytest.mark.parametrize("p", single_families(5), ids=str)
def test_families_are_recognized(p):
    P = family_presentation(p)
    assert recognize_transversal(enumerate_bases(P)).witness.canonical() == P.canonical()
