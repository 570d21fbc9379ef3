"""H-descriptions of intersection cones and exact checks on their facets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .core import (
    FacetNormal,
    FamilyParams,
    InvalidInputError,
    InvalidParameterError,
    Vector,
    coordinate_normal,
    nu_vector,
)


@dataclass(frozen=True)
class ConeDescription:
    n: int
    normals: tuple[FacetNormal, ...]

    @property
    def primitives(self) -> list[Vector]:
        return [nu.primitive for nu in self.normals]

    @property
    def window_normals(self) -> tuple[FacetNormal, ...]:
        return tuple(nu for nu in self.normals if not nu.is_coordinate())

    def without(self, index: int) -> "ConeDescription":
        return ConeDescription(self.n, self.normals[:index] + self.normals[index + 1 :])

    def with_normal(self, normal: FacetNormal) -> "ConeDescription":
        return ConeDescription(self.n, self.normals + (normal,))

    def contains(self, alpha: Sequence[int]) -> bool:
        return all(evaluate(nu, alpha) >= 0 for nu in self.normals)

    def to_dict(self) -> dict:
        return {"n": self.n, "normals": [list(v) for v in sorted(self.primitives)]}

    @classmethod
    def from_dict(cls, data: dict) -> "ConeDescription":
        try:
            n = data["n"]
            normals = tuple(FacetNormal.from_vector(v) for v in data["normals"])
        except (KeyError, TypeError):
            raise InvalidInputError("cone JSON needs keys 'n' and 'normals'") from None
        if any(nu.n != n for nu in normals):
            raise InvalidInputError("normal length does not match n")
        return cls(n, normals)


def build_cone(families: Sequence[FamilyParams], n: int) -> ConeDescription:
    """Window normals of each family plus the n coordinate normals, deduplicated by primitive form."""
    if not families:
        raise InvalidParameterError("at least one family is required")
    for p in families:
        if p.n != n:
            raise InvalidParameterError(f"family {p} does not live in dimension {n}")
    seen: set[Vector] = set()
    normals = []
    candidates = [nu_vector(p.n, p.t, p.i) for p in families]
    candidates += [coordinate_normal(n, j) for j in range(1, n + 1)]
    for nu in candidates:
        if nu.primitive not in seen:
            seen.add(nu.primitive)
            normals.append(nu)
    return ConeDescription(n, tuple(normals))


def evaluate(normal: FacetNormal, v: Sequence[int]) -> int:
    """Dot product of the primitive normal with v."""
    prim = normal.primitive
    if len(prim) != len(v):
        raise InvalidInputError(f"dimension mismatch: normal has {len(prim)} coordinates, vector {len(v)}")
    return sum(a * b for a, b in zip(prim, v))


def _pruned_compositions(
    total: int, normals: list[Vector], offsets: Sequence[int] | None = None
) -> Iterator[Vector]:
    """Weak compositions of total on which every normal (plus its offset) is >= 0.

    Branches are cut when even the best use of the remaining mass, remaining
    times the largest trailing coefficient, cannot lift a normal back to 0.
    """
    if total < 0:
        return
    n = len(normals[0]) if normals else 0
    r = len(normals)
    start = list(offsets) if offsets is not None else [0] * r
    tail_max = [[max(nu[k:]) for k in range(n)] + [0] for nu in normals]
    prefix: list[int] = []

    def rec(k: int, remaining: int, partial: list[int]) -> Iterator[Vector]:
        if k == n - 1:
            if all(partial[s] + normals[s][k] * remaining >= 0 for s in range(r)):
                yield (*prefix, remaining)
            return
        for x in range(remaining, -1, -1):
            rest = remaining - x
            new = [partial[s] + normals[s][k] * x for s in range(r)]
            if any(new[s] + rest * tail_max[s][k + 1] < 0 for s in range(r)):
                continue
            prefix.append(x)
            yield from rec(k + 1, rest, new)
            prefix.pop()

    if n == 1:
        if all(start[s] + normals[s][0] * total >= 0 for s in range(r)):
            yield (total,)
        return
    yield from rec(0, total, start)


def cone_section(C: ConeDescription, d: int) -> set[Vector]:
    """Points alpha of N^n in the cone with |alpha| = d * n."""
    if d < 0:
        raise InvalidParameterError("degree must be nonnegative")
    return set(_pruned_compositions(d * C.n, C.primitives))


def count_section(C: ConeDescription, d: int) -> int:
    """Size of cone_section(C, d) without materializing it."""
    return _count_points(C, d, 0)


def count_interior(C: ConeDescription, d: int) -> int:
    """Number of level-d points that are >= 1 on every normal, coordinates included."""
    return _count_points(C, d, 1)


def _count_points(C: ConeDescription, d: int, floor: int) -> int:
    """Points of N^n at level d*n with every coordinate and every primitive window value >= floor.

    Coordinates are swept one at a time; the partial window values are the
    memo key, so equal states reached by different prefixes are counted once.
    """
    if d < 0:
        raise InvalidParameterError("degree must be nonnegative")
    n = C.n
    normals = [nu.primitive for nu in C.normals if not nu.is_coordinate()]
    tail_max = [[max(nu[k:]) for k in range(n)] + [0] for nu in normals]
    r = len(normals)
    target = d * n - floor * n
    if target < 0:
        return 0
    # shift alpha = floor + gamma, gamma in N^n; normals then need nu(gamma) >= floor - nu(floor*1)
    start = tuple(floor * sum(nu) - floor for nu in normals)

    @lru_cache(maxsize=None)
    def rec(k: int, remaining: int, partial: tuple[int, ...]) -> int:
        if k == n - 1:
            return int(all(partial[s] + normals[s][k] * remaining >= 0 for s in range(r)))
        total = 0
        for x in range(remaining + 1):
            rest = remaining - x
            new = tuple(partial[s] + normals[s][k] * x for s in range(r))
            if any(new[s] + rest * tail_max[s][k + 1] < 0 for s in range(r)):
                continue
            total += rec(k + 1, rest, new)
        return total

    if n == 1:
        return int(all(start[s] + nu[0] * target >= 0 for s, nu in enumerate(normals)))
    return rec(0, target, start)


def rank_exact(vectors: Iterable[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    rows = [list(map(int, v)) for v in vectors]
    if not rows:
        return 0
    m, ncols = len(rows), len(rows[0])
    if any(len(row) != ncols for row in rows):
        raise InvalidInputError("vectors have unequal dimension")
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, m) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for r in range(rank + 1, m):
            a = rows[r][col]
            rows[r] = [(p * rows[r][c] - a * rows[rank][c]) // prev for c in range(ncols)]
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


@dataclass(frozen=True)
class FacetCheck:
    normal: Vector
    nonnegative: bool
    facet_rank: int
    full_rank: bool
    enlarges_at: int | None  # lowest degree whose section grows when the normal is dropped

    @property
    def passed(self) -> bool:
        return self.nonnegative and self.full_rank and self.enlarges_at is not None

    def to_dict(self) -> dict:
        return {
            "normal": list(self.normal),
            "nonnegative": self.nonnegative,
            "facet_rank": self.facet_rank,
            "enlarges_at": self.enlarges_at,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class FacetReport:
    checks: tuple[FacetCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "normals": [c.to_dict() for c in self.checks]}


def relaxed_witness(C: ConeDescription, index: int, d: int) -> Vector | None:
    """An integer point at level d allowed by every normal except ``index`` but cut off by it.

    Coordinates whose coordinate normal is absent from the relaxed cone range
    over [-d*n, d*n]; all others are nonnegative.
    """
    n, total = C.n, d * C.n
    dropped = C.normals[index]
    relaxed = C.without(index)
    bound = {j for j in range(n) for nu in relaxed.normals if nu.primitive == tuple(int(k == j) for k in range(n))}
    free = [j for j in range(n) if j not in bound]
    fixed = [j for j in range(n) if j in bound]
    prims = relaxed.primitives
    reduced = [tuple(nu[j] for j in fixed) for nu in prims]

    def assignments(k: int) -> Iterator[list[int]]:
        if k == len(free):
            yield []
            return
        # nearest-to-zero first, negatives before positives
        for v in sorted(range(-total, total + 1), key=lambda x: (abs(x), x > 0)):
            for rest in assignments(k + 1):
                yield [v, *rest]

    for values in assignments(0):
        offsets = [sum(nu[j] * v for j, v in zip(free, values)) for nu in prims]
        remaining = total - sum(values)
        if not fixed:
            if remaining == 0 and all(o >= 0 for o in offsets):
                alpha = tuple(values)
                if evaluate(dropped, alpha) < 0:
                    return alpha
            continue
        for part in _pruned_compositions(remaining, reduced, offsets):
            alpha = [0] * n
            for j, v in zip(free, values):
                alpha[j] = v
            for j, v in zip(fixed, part):
                alpha[j] = v
            if evaluate(dropped, alpha) < 0:
                return tuple(alpha)
    return None


def verify_facets(C: ConeDescription, gens: Iterable[Sequence[int]], max_degree: int = 2) -> FacetReport:
    """Check that every normal of C is an irredundant facet.

    Per normal: (a) gens lie on its nonnegative side, (b) the gens on its
    hyperplane span rank n - 1, (c) dropping it admits a new integer point at
    some level <= max_degree, escalating once to max_degree + 1 before failing.
    """
    gens = [tuple(g) for g in gens]
    checks = []
    for idx, nu in enumerate(C.normals):
        values = [evaluate(nu, g) for g in gens]
        nonneg = all(v >= 0 for v in values)
        on_plane = [g for g, v in zip(gens, values) if v == 0]
        r = rank_exact(on_plane) if on_plane else 0
        enlarges = None
        for d in range(1, max_degree + 2):
            if relaxed_witness(C, idx, d) is not None:
                enlarges = d
                break
        checks.append(FacetCheck(nu.primitive, nonneg, r, r == C.n - 1, enlarges))
    return FacetReport(tuple(checks))
