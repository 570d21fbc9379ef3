"""Exact computations on base rings of transversal polymatroids and their intersections."""

from .core import (
    CapacityError,
    CyclicWindow,
    FacetNormal,
    FamilyParams,
    InvalidInputError,
    InvalidParameterError,
    InvalidPresentationError,
    PolymatError,
    Presentation,
    family_presentation,
    membership_window,
    nu_vector,
    rotate_presentation,
    sigma_window,
)
from .polymatroid import (
    BaseSet,
    check_base_exchange,
    enumerate_bases,
    exhaustive_recognize,
    rank_of,
    recognize_transversal,
)
from .cone import build_cone, cone_section, count_interior, count_section, evaluate, rank_exact, verify_facets
from .hilbert import (
    a_invariant,
    check_canonical_shift,
    check_gorenstein_symmetry,
    check_normality,
    h_vector,
    hilbert_data,
    hilbert_function,
    semigroup_section,
)
from .intersect import (
    PairParams,
    decide,
    expand_monomial_family,
    intersection_base_set,
    sweep_theorem,
    verify_witness,
    witness,
)
from .diagram import render

__version__ = "0.1.0"
