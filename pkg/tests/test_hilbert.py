from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from corpus import brute_sums
from polymat.cone import ConeDescription, build_cone
from polymat.core import FacetNormal, FamilyParams, InvalidInputError, InvalidParameterError, family_presentation
from polymat.hilbert import (
    InconsistentHilbertError,
    a_invariant,
    check_canonical_shift,
    check_canonical_shift_sets,
    check_gorenstein_symmetry,
    check_normality,
    h_vector,
    hilbert_data,
    hilbert_function,
    hilbert_values,
    predicted_value,
    semigroup_section,
    semigroup_sections,
)
from polymat.intersect import PairParams, intersection_base_set
from polymat.polymatroid import enumerate_bases


def family_gens(n, i, t):
    return enumerate_bases(family_presentation(FamilyParams(n, i, t)))


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=5), st.integers(0, 3))
def test_sumsets_match_brute_force(gens, d):
    assert semigroup_section(gens, d) == brute_sums(gens, d)


def test_sections_share_the_chain():
    gens = family_gens(4, 2, 1)
    sections = semigroup_sections(gens, 3)
    assert [len(s) for s in sections] == hilbert_values(gens, 3)
    assert sections[2] == semigroup_section(gens, 2)


def test_small_family_hilbert_data():
    data = hilbert_data(family_gens(3, 1, 0), 3, max_degree=3)
    assert data.values == (1, 9, 25, 49)
    assert data.h == (1, 6, 1)
    assert data.a_invariant == -1 and data.gorenstein_symmetric
    assert data.to_dict() == {"n": 3, "H": [1, 9, 25, 49], "h": [1, 6, 1], "a_invariant": -1, "gorenstein_symmetric": True}


def test_binomial_prediction_matches_enumeration():
    gens = family_gens(3, 1, 0)
    h = hilbert_data(gens, 3).h
    for d in range(6):
        assert predicted_value(h, 3, d) == hilbert_function(gens, d)


def test_pair_h_vector():
    data = hilbert_data(intersection_base_set(PairParams(4, 2, 2, 1)), 4)
    assert data.h == (1, 22, 22, 1)
    assert data.a_invariant == -1


def test_cone_route_agrees_with_sumsets():
    p = PairParams(5, 2, 1, 3)
    C = build_cone([p.first, p.second], 5)
    B = intersection_base_set(p)
    assert hilbert_values(None, 5, cone=C) == hilbert_values(B, 5)


def test_h_vector_of_polynomial_ring():
    # K[x, y]: H(d) = d + 1
    hv = h_vector([1, 2, 3], 2)
    assert hv.h == (1, 0) and hv.consistent
    assert a_invariant(hv.h, 2) == -2


def test_h_vector_reports_inconsistency():
    hv = h_vector([1, 5, 7], 2)
    assert not hv.consistent
    with pytest.raises(InvalidInputError):
        h_vector([1, 2], 2)
    with pytest.raises(InvalidInputError):
        h_vector([2, 2, 2], 2)


def test_inconsistent_data_raises():
    # three free variables grow too fast for a denominator (1 - t)^2
    with pytest.raises(InconsistentHilbertError):
        hilbert_data([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 2)


@given(st.lists(st.integers(0, 9), min_size=1, max_size=6))
def test_symmetry_of_mirrored_vectors(half):
    if half[0] == 0:
        half[0] = 1
    assert check_gorenstein_symmetry(half + half[::-1])
    assert check_gorenstein_symmetry(half + half[::-1] + [0, 0])


def test_asymmetric_vector():
    assert not check_gorenstein_symmetry([1, 3, 2])
    assert not check_gorenstein_symmetry([0, 0])


@given(st.lists(st.integers(0, 5), min_size=2, max_size=5).filter(lambda h: h[0] == 1), st.integers(2, 4))
def test_h_vector_inverts_prediction(h, n):
    h = h[:n]
    values = [predicted_value(h, n, d) for d in range(n + 1)]
    assert list(h_vector(values, n).h[: len(h)]) == h


def test_prediction_is_binomial_for_h_one():
    assert [predicted_value([1], 3, d) for d in range(5)] == [comb(d + 2, 2) for d in range(5)]


def test_family_is_normal():
    p = FamilyParams(4, 1, 2)
    assert check_normality(family_gens(4, 1, 2), build_cone([p], 4), 3) is None


def test_non_normal_semigroup_is_caught():
    gens = [(2, 0), (0, 2)]
    C = ConeDescription(2, (FacetNormal.from_vector((1, 0)), FacetNormal.from_vector((0, 1))))
    assert check_normality(gens, C, 3) == 1  # (1,1) lies in the cone but is not a generator
    with pytest.raises(InvalidParameterError):
        check_normality(gens, C, 0)


@pytest.mark.parametrize("p", [PairParams(4, 2, 2, 1), PairParams(5, 1, 1, 2), PairParams(5, 3, 3, 4)], ids=str)
def test_canonical_shift_forms_agree(p):
    C = build_cone([p.first, p.second], p.n)
    assert check_canonical_shift(C, 3) is None
    assert check_canonical_shift_sets(C, 3) is None


def test_canonical_shift_fails_off_the_gorenstein_cone():
    normals = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-2, 1, 3)]
    C = ConeDescription(3, tuple(FacetNormal.from_vector(v) for v in normals))
    assert check_canonical_shift(C, 3) == 2
    assert check_canonical_shift_sets(C, 3) == check_canonical_shift(C, 3)


def test_degree_guards():
    with pytest.raises(InvalidParameterError):
        semigroup_section([(1, 0)], -1)
    with pytest.raises(InvalidInputError):
        semigroup_section([], 1)
    assert semigroup_section([(1, 0)], 0) == {(0, 0)}
