"""Base sets of transversal polymatroids and recognition of transversal base sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .core import (
    CapacityError,
    IndexSet,
    InvalidInputError,
    InvalidPresentationError,
    Presentation,
    Vector,
)

RECOGNITION_MAX_N = 20
EXHAUSTIVE_MAX_N = 5


@dataclass(frozen=True)
class BaseSet:
    """A finite set of equal-modulus lattice points in N^n."""

    n: int
    points: frozenset[Vector]

    def __post_init__(self) -> None:
        points = frozenset(tuple(int(c) for c in p) for p in self.points)
        object.__setattr__(self, "points", points)
        moduli = set()
        for p in points:
            if len(p) != self.n:
                raise InvalidInputError(f"point {p} does not have length {self.n}")
            if min(p) < 0:
                raise InvalidInputError(f"point {p} has a negative coordinate")
            moduli.add(sum(p))
        if len(moduli) > 1:
            raise InvalidInputError(f"points have mixed moduli {sorted(moduli)}")

    @property
    def modulus(self) -> int | None:
        return sum(next(iter(self.points))) if self.points else None

    def sorted_points(self) -> list[Vector]:
        return sorted(self.points)

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.sorted_points())

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, alpha: object) -> bool:
        return alpha in self.points

    def to_dict(self) -> dict:
        return {"n": self.n, "points": [list(p) for p in self.sorted_points()]}

    @classmethod
    def from_dict(cls, data: dict) -> "BaseSet":
        try:
            return cls(data["n"], frozenset(tuple(p) for p in data["points"]))
        except (KeyError, TypeError):
            raise InvalidInputError("base set JSON needs keys 'n' and 'points'") from None


def enumerate_bases(P: Presentation) -> BaseSet:
    """All vectors e_{j_1} + ... + e_{j_n} with j_k drawn from the k-th set.

    The product is traversed one set at a time and deduplicated per level, so
    the work is bounded by the number of distinct partial sums.
    """
    for k, s in enumerate(P.sets, start=1):
        if not s:
            raise InvalidPresentationError(f"set {k} is empty")
    n = P.n
    frontier: set[Vector] = {(0,) * n}
    for members in P.sets:
        idx = sorted(j - 1 for j in members)
        nxt = set()
        for v in frontier:
            for j in idx:
                w = list(v)
                w[j] += 1
                nxt.add(tuple(w))
        frontier = nxt
    return BaseSet(n, frozenset(frontier))


@dataclass(frozen=True)
class ExchangeViolation:
    u: Vector
    v: Vector
    index: int  # 1-indexed coordinate a with u_a > v_a that admits no exchange


def check_base_exchange(B: BaseSet) -> ExchangeViolation | None:
    """Symmetric-exchange check; returns None when the axiom holds.

    Points are scanned in descending lexicographic (monomial lex) order and
    indices ascending, so the reported violation is deterministic.
    """
    if not B.points:
        raise InvalidInputError("empty base set")
    pts = sorted(B.points, reverse=True)
    n = B.n
    for u in pts:
        for v in pts:
            if u == v:
                continue
            raising = [b for b in range(n) if u[b] < v[b]]
            for a in range(n):
                if u[a] <= v[a]:
                    continue
                ok = False
                for b in raising:
                    w = list(u)
                    w[a] -= 1
                    w[b] += 1
                    if tuple(w) in B.points:
                        ok = True
                        break
                if not ok:
                    return ExchangeViolation(u, v, a + 1)
    return None


def rank_of(B: BaseSet, S: Iterable[int]) -> int:
    idx = [j - 1 for j in S]
    if not B.points:
        raise InvalidInputError("empty base set")
    return max(sum(p[j] for j in idx) for p in B.points)


@dataclass(frozen=True)
class RecognitionResult:
    transversal: bool
    witness: Presentation | None = None
    # when not transversal: either negative multiplicities keyed by subset, or the point mismatch
    negative: dict[IndexSet, int] = field(default_factory=dict)
    missing: frozenset[Vector] = frozenset()
    extra: frozenset[Vector] = frozenset()
    reason: str = ""

    def to_dict(self) -> dict:
        out: dict = {"transversal": self.transversal}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if not self.transversal:
            out["reason"] = self.reason
            if self.negative:
                out["negative_multiplicities"] = [
                    {"set": sorted(T), "m": m} for T, m in sorted(self.negative.items(), key=lambda kv: sorted(kv[0]))
                ]
            if self.missing:
                out["missing"] = [list(p) for p in sorted(self.missing)]
            if self.extra:
                out["extra"] = [list(p) for p in sorted(self.extra)]
        return out


def _mask_to_set(mask: int) -> IndexSet:
    return frozenset(j + 1 for j in range(mask.bit_length()) if mask >> j & 1)


def _check_recognizable(B: BaseSet) -> None:
    if not B.points:
        raise InvalidInputError("empty base set")
    if B.modulus != B.n:
        raise InvalidInputError(f"recognition needs modulus n = {B.n}, got {B.modulus}")


def _compare(B: BaseSet, candidate: Presentation) -> RecognitionResult:
    got = enumerate_bases(candidate).points
    if got == B.points:
        return RecognitionResult(True, witness=candidate)
    return RecognitionResult(
        False,
        missing=B.points - got,
        extra=got - B.points,
        reason="rank-determined candidate does not re-enumerate to the input",
    )


def recognize_transversal(B: BaseSet) -> RecognitionResult:
    """Decide whether B is the base set of a transversal presentation with n sets.

    For a presentation (C_1, ..., C_n), rank(S) = #{k : C_k meets S}, so
    f(T) = n - rank([n] \\ T) counts the sets contained in T. Moebius inversion
    over the subset lattice recovers the multiplicity of each T as a set of
    the presentation; the candidate is then re-enumerated against B.
    """
    _check_recognizable(B)
    n = B.n
    if n > RECOGNITION_MAX_N:
        raise CapacityError(f"recognition sweeps 2^n subsets; n = {n} exceeds {RECOGNITION_MAX_N}")
    full = (1 << n) - 1
    pts = list(B.points)
    masks = range(1 << n)
    # rank of the complement of T, by a single pass over points per subset
    f = [0] * (1 << n)
    for T in masks:
        comp = [j for j in range(n) if (full ^ T) >> j & 1]
        r = max(sum(p[j] for j in comp) for p in pts) if comp else 0
        f[T] = n - r
    m = f[:]
    for j in range(n):
        bit = 1 << j
        for T in masks:
            if T & bit:
                m[T] -= m[T ^ bit]
    negative = {_mask_to_set(T): m[T] for T in masks if m[T] < 0}
    if negative:
        return RecognitionResult(False, negative=negative, reason="negative multiplicity")
    if m[0] != 0:
        return RecognitionResult(False, reason=f"empty set has multiplicity {m[0]}")
    if sum(m) != n:
        return RecognitionResult(False, reason=f"multiplicities sum to {sum(m)}, expected {n}")
    sets = [_mask_to_set(T) for T in masks for _ in range(m[T])]
    return _compare(B, Presentation(n, tuple(sets)))


def exhaustive_recognize(B: BaseSet) -> RecognitionResult:
    """Brute-force search over multisets of n nonempty subsets of [n].

    Independent of the Moebius reconstruction; the only pruning is that each
    element j lies in exactly rank({j}) of the chosen sets.
    """
    _check_recognizable(B)
    n = B.n
    if n > EXHAUSTIVE_MAX_N:
        raise CapacityError(f"exhaustive recognition is limited to n <= {EXHAUSTIVE_MAX_N}, got {n}")
    need = [rank_of(B, [j + 1]) for j in range(n)]
    subsets = list(range(1, 1 << n))

    def search(start: int, chosen: list[int], remaining: list[int]) -> Presentation | None:
        slots = n - len(chosen)
        if slots == 0:
            if any(remaining):
                return None
            candidate = Presentation(n, tuple(_mask_to_set(T) for T in chosen))
            return candidate if enumerate_bases(candidate).points == B.points else None
        if any(r > slots for r in remaining):
            return None
        for pos in range(start, len(subsets)):
            T = subsets[pos]
            if any(T >> j & 1 and remaining[j] == 0 for j in range(n)):
                continue
            for j in range(n):
                if T >> j & 1:
                    remaining[j] -= 1
            chosen.append(T)
            found = search(pos, chosen, remaining)
            chosen.pop()
            for j in range(n):
                if T >> j & 1:
                    remaining[j] += 1
            if found is not None:
                return found
        return None

    witness = search(0, [], need)
    if witness is None:
        return RecognitionResult(False, reason="no presentation with n sets reproduces the input")
    return RecognitionResult(True, witness=witness)
