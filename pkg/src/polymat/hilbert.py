"""Hilbert functions, h-vectors and Gorenstein checks for the semigroup rings K[A_1 ∩ ... ∩ A_r]."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .cone import ConeDescription, cone_section, count_interior, count_section, evaluate
from .core import InvalidInputError, InvalidParameterError, Vector


def _encode_levels(gens: Sequence[Vector], max_degree: int) -> tuple[list[set[int]], int]:
    """Degree-d sumsets for d <= max_degree, with vectors packed into single ints.

    The radix exceeds every coordinate reachable at max_degree, so integer
    addition of codes never carries and matches vector addition.
    """
    n = len(gens[0])
    radix = max_degree * max(max(g) for g in gens) + 1
    codes = {sum(c * radix**j for j, c in enumerate(g)) for g in gens}
    levels = [{0}]
    for _ in range(max_degree):
        prev = levels[-1]
        levels.append({s + g for s in prev for g in codes})
    return levels, radix


def _decode(code: int, radix: int, n: int) -> Vector:
    out = []
    for _ in range(n):
        code, c = divmod(code, radix)
        out.append(c)
    return tuple(out)


def _as_points(gens: Iterable[Sequence[int]]) -> list[Vector]:
    pts = sorted({tuple(g) for g in gens})
    if not pts:
        raise InvalidInputError("empty generator set")
    return pts


def semigroup_section(gens: Iterable[Sequence[int]], d: int) -> set[Vector]:
    """All sums of exactly d generators."""
    if d < 0:
        raise InvalidParameterError("degree must be nonnegative")
    pts = _as_points(gens)
    n = len(pts[0])
    if d == 0:
        return {(0,) * n}
    levels, radix = _encode_levels(pts, d)
    return {_decode(c, radix, n) for c in levels[d]}


def semigroup_sections(gens: Iterable[Sequence[int]], max_degree: int) -> list[set[Vector]]:
    """semigroup_section for every d in 0..max_degree, sharing the sumset chain."""
    pts = _as_points(gens)
    n = len(pts[0])
    if max_degree == 0:
        return [{(0,) * n}]
    levels, radix = _encode_levels(pts, max_degree)
    return [{_decode(c, radix, n) for c in level} for level in levels]


def hilbert_function(gens: Iterable[Sequence[int]], d: int) -> int:
    return len(semigroup_section(gens, d))


def hilbert_values(
    gens: Iterable[Sequence[int]] | None, max_degree: int, cone: ConeDescription | None = None
) -> list[int]:
    """H(0), ..., H(max_degree).

    Counts generator sums by default. With ``cone`` given, counts lattice points
    of the cone sections instead, which is the same function once the semigroup
    is normal and is much cheaper at high degree.
    """
    if cone is not None:
        return [count_section(cone, d) for d in range(max_degree + 1)]
    pts = _as_points(gens or [])
    if max_degree == 0:
        return [1]
    levels, _ = _encode_levels(pts, max_degree)
    return [len(level) for level in levels]


@dataclass(frozen=True)
class HVector:
    n: int
    h: tuple[int, ...]  # h_0 .. h_{n-1}
    excess: int  # the h_n term; nonzero means the values do not fit P(t)/(1-t)^n with deg P < n

    @property
    def consistent(self) -> bool:
        return self.excess == 0


def h_vector(values: Sequence[int], n: int) -> HVector:
    """Numerator coefficients of sum H(d) t^d = P(t)/(1-t)^n from H(0..n)."""
    if len(values) < n + 1:
        raise InvalidInputError(f"need H(0..{n}), got {len(values)} values")
    if values[0] != 1:
        raise InvalidInputError(f"H(0) must be 1, got {values[0]}")
    coeffs = [
        sum((-1) ** (k - j) * comb(n, k - j) * values[j] for j in range(k + 1)) for k in range(n + 1)
    ]
    return HVector(n, tuple(coeffs[:n]), coeffs[n])


def predicted_value(h: Sequence[int], n: int, d: int) -> int:
    """H(d) = sum_k h_k * C(n - 1 + d - k, n - 1)."""
    return sum(hk * comb(n - 1 + d - k, n - 1) for k, hk in enumerate(h) if d >= k)


def a_invariant(h: Sequence[int], n: int) -> int:
    """Degree of the Hilbert series: (last nonzero index of h) - n."""
    nonzero = [k for k, hk in enumerate(h) if hk != 0]
    if not nonzero:
        raise InvalidInputError("zero h-vector")
    return nonzero[-1] - n


def check_gorenstein_symmetry(h: Sequence[int]) -> bool:
    nonzero = [k for k, hk in enumerate(h) if hk != 0]
    if not nonzero:
        return False
    s = nonzero[-1]
    return all(h[k] == h[s - k] for k in range(s + 1))


def check_normality(gens: Iterable[Sequence[int]], C: ConeDescription, max_degree: int = 3) -> int | None:
    """First degree d <= max_degree where generator sums miss cone points, or None."""
    if max_degree < 1:
        raise InvalidParameterError("degree bound must be >= 1")
    sections = semigroup_sections(gens, max_degree)
    for d in range(1, max_degree + 1):
        if sections[d] != cone_section(C, d):
            return d
    return None


def _interior(C: ConeDescription, points: Iterable[Vector]) -> set[Vector]:
    return {a for a in points if all(evaluate(nu, a) >= 1 for nu in C.normals)}


def interior_section(C: ConeDescription, d: int) -> set[Vector]:
    """Points of cone_section(C, d) that are >= 1 on every normal."""
    return _interior(C, cone_section(C, d))


def check_canonical_shift(C: ConeDescription, max_degree: int = 4) -> int | None:
    """First d where interior points at level d differ from (1,...,1) + level d-1, or None.

    Shifting by (1,...,1) raises every coordinate by 1 and every primitive
    window value by a positive amount, so the shifted section always lies in
    the interior; equality therefore reduces to equal counts.
    """
    if max_degree < 1:
        raise InvalidParameterError("degree bound must be >= 1")
    if any(sum(nu.primitive) <= 0 for nu in C.normals):
        return check_canonical_shift_sets(C, max_degree)
    for d in range(1, max_degree + 1):
        if count_interior(C, d) != count_section(C, d - 1):
            return d
    return None


def check_canonical_shift_sets(C: ConeDescription, max_degree: int = 4) -> int | None:
    """Set-level form of check_canonical_shift, materializing both sides."""
    if max_degree < 1:
        raise InvalidParameterError("degree bound must be >= 1")
    below = cone_section(C, 0)
    for d in range(1, max_degree + 1):
        here = cone_section(C, d)
        if _interior(C, here) != {tuple(c + 1 for c in b) for b in below}:
            return d
        below = here
    return None


@dataclass(frozen=True)
class HilbertData:
    n: int
    values: tuple[int, ...]
    h: tuple[int, ...]
    a_invariant: int
    gorenstein_symmetric: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "H": list(self.values),
            "h": list(self.h),
            "a_invariant": self.a_invariant,
            "gorenstein_symmetric": self.gorenstein_symmetric,
        }


class InconsistentHilbertError(InvalidInputError):
    pass


def hilbert_data(
    gens: Iterable[Sequence[int]] | None,
    n: int,
    max_degree: int | None = None,
    cone: ConeDescription | None = None,
) -> HilbertData:
    """H-values up to max(max_degree, n), h-vector, a-invariant and symmetry.

    Raises InconsistentHilbertError when the h_n term does not vanish.
    """
    top = n if max_degree is None else max(max_degree, n)
    values = hilbert_values(gens, top, cone=cone)
    hv = h_vector(values, n)
    if not hv.consistent:
        raise InconsistentHilbertError(f"Hilbert values {values[: n + 1]} leave h_{n} = {hv.excess}")
    shown = values if max_degree is None else values[: max_degree + 1]
    return HilbertData(n, tuple(shown), hv.h, a_invariant(hv.h, n), check_gorenstein_symmetry(hv.h))
