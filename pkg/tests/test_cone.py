import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from corpus import brute_compositions, single_families
from polymat.cone import (
    ConeDescription,
    build_cone,
    cone_section,
    count_interior,
    count_section,
    evaluate,
    rank_exact,
    relaxed_witness,
    verify_facets,
)
from polymat.core import (
    FacetNormal,
    FamilyParams,
    InvalidInputError,
    InvalidParameterError,
    family_presentation,
    nu_vector,
)
from polymat.hilbert import interior_section
from polymat.intersect import PairParams, intersection_base_set
from polymat.polymatroid import enumerate_bases


def brute_section(C, d):
    return {a for a in brute_compositions(d * C.n, C.n) if all(evaluate(nu, a) >= 0 for nu in C.normals)}


@given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=1, max_size=6))
def test_rank_matches_sympy(rows):
    assert rank_exact(rows) == sympy.Matrix(rows).rank()


def test_rank_edge_cases():
    assert rank_exact([]) == 0
    assert rank_exact([[0, 0, 0]]) == 0
    assert rank_exact([[1, 2], [2, 4], [3, 6]]) == 1
    with pytest.raises(InvalidInputError):
        rank_exact([[1, 2], [1]])


@given(st.integers(3, 7), st.data())
def test_window_normal_takes_n_over_d_on_ones(n, data):
    i = data.draw(st.integers(1, n - 2))
    t = data.draw(st.integers(0, n - 1))
    nu = nu_vector(n, t, i)
    assert evaluate(nu, (1,) * n) == n // nu.d


def test_build_cone_counts_and_dedup():
    C = build_cone([FamilyParams(4, 1, 0)], 4)
    assert len(C.normals) == 5
    assert len(C.window_normals) == 1
    # the same family twice adds nothing
    assert build_cone([FamilyParams(4, 1, 0)] * 2, 4) == C
    with pytest.raises(InvalidParameterError):
        build_cone([FamilyParams(4, 1, 0)], 5)
    with pytest.raises(InvalidParameterError):
        build_cone([], 4)


def test_evaluate_dimension_mismatch():
    with pytest.raises(InvalidInputError):
        evaluate(nu_vector(4, 0, 1), (1, 2, 3))


@pytest.mark.parametrize("p", [f for f in single_families(5) if f.n <= 4], ids=str)
@pytest.mark.parametrize("d", [0, 1, 2])
def test_section_matches_brute_force(p, d):
    C = build_cone([p], p.n)
    got = cone_section(C, d)
    assert got == brute_section(C, d)
    assert count_section(C, d) == len(got)


def test_known_section_sizes():
    assert len(cone_section(build_cone([FamilyParams(4, 1, 0)], 4), 1)) == 31
    C3 = build_cone([FamilyParams(3, 1, 0)], 3)
    assert [count_section(C3, d) for d in range(4)] == [1, 9, 25, 49]


def test_degree_one_section_is_the_base_set():
    p = FamilyParams(5, 2, 3)
    assert cone_section(build_cone([p], 5), 1) == enumerate_bases(family_presentation(p)).points


@pytest.mark.parametrize("p", [PairParams(4, 2, 2, 1), PairParams(5, 1, 3, 2), PairParams(5, 3, 2, 4)], ids=str)
def test_interior_count_matches_sets(p):
    C = build_cone([p.first, p.second], p.n)
    for d in range(4):
        assert count_interior(C, d) == len(interior_section(C, d))


def test_cone_round_trip():
    C = build_cone([FamilyParams(4, 2, 0), FamilyParams(4, 2, 1)], 4)
    D = ConeDescription.from_dict(C.to_dict())
    assert sorted(D.primitives) == sorted(C.primitives)
    with pytest.raises(InvalidInputError):
        ConeDescription.from_dict({"n": 3, "normals": [[1, 0]]})
    with pytest.raises(InvalidInputError):
        ConeDescription.from_dict({"normals": []})


def test_family_facets_pass():
    p = FamilyParams(4, 1, 0)
    C = build_cone([p], 4)
    report = verify_facets(C, enumerate_bases(family_presentation(p)))
    assert report.passed
    assert all(c.facet_rank == 3 and c.enlarges_at == 1 for c in report.checks)


def test_pair_facets_pass():
    p = PairParams(4, 2, 2, 1)
    C = build_cone([p.first, p.second], 4)
    assert verify_facets(C, intersection_base_set(p)).passed


def test_redundant_normal_is_flagged():
    p = FamilyParams(4, 2, 0)
    gens = enumerate_bases(family_presentation(p))
    C = build_cone([p], 4).with_normal(FacetNormal.from_vector((1, 1, 0, 0)))
    report = verify_facets(C, gens)
    assert not report.passed
    bad = report.checks[-1]
    assert bad.normal == (1, 1, 0, 0)
    assert bad.nonnegative and not bad.full_rank and bad.enlarges_at is None
    assert all(c.passed for c in report.checks[:-1])


def test_negative_generator_is_flagged():
    C = build_cone([FamilyParams(3, 1, 0)], 3)
    report = verify_facets(C, [(3, 0, 0), (0, 3, 0), (0, 0, 3)])
    assert not report.checks[0].nonnegative


def test_relaxed_witness_leaves_the_dropped_halfspace():
    C = build_cone([FamilyParams(4, 1, 0)], 4)
    for idx, nu in enumerate(C.normals):
        alpha = relaxed_witness(C, idx, 1)
        assert alpha is not None and sum(alpha) == 4
        assert evaluate(nu, alpha) < 0
        assert C.without(idx).contains(alpha)
