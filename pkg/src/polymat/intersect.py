"""When is A ∩ B again the base set of a transversal polymatroid?

A is the family presentation with window [i1] (offset 0), B the one with
window sigma^t2[i2]. ``decide`` evaluates the five criteria a-e in order and
attaches an explicit presentation C with enumerate_bases(C) = A ∩ B.

Case labels name the criterion and the sub-construction used:

    a1..a5   i1 = 1; t2 = 0 / generic / i2 = n-2 / i2 = n-3 / wrapping window
    a1-family  i1 = i2 = 1, t2 = 0 (A = B)
    b1, b2   t2 = 0; i2 <= i1 / i2 > i1
    c1..c3   t2 = i1; i2 + t2 < n-1 / = n-1 / >= n
    d1, d2   0 < t2 < i1; i2 + t2 <= i1 / otherwise
    e1..e3   t2 > i1; non-wrapping with i1+1+i2 != n / = n / wrapping
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .core import (
    CapacityError,
    FamilyParams,
    IndexSet,
    InvalidParameterError,
    PolymatError,
    Presentation,
    Vector,
    compositions,
    family_presentation,
    membership_window,
    rotate_presentation,
    sigma_window,
)
from .polymatroid import BaseSet, enumerate_bases, recognize_transversal

SWEEP_MAX_N = 5


class NotABaseRingError(PolymatError):
    """A witness was requested for an instance that fails every criterion."""


@dataclass(frozen=True)
class PairParams:
    n: int
    i1: int
    i2: int
    t2: int

    def __post_init__(self) -> None:
        n = self.n
        if not isinstance(n, int) or n < 3:
            raise InvalidParameterError(f"n must be >= 3, got {n!r}")
        for name in ("i1", "i2"):
            v = getattr(self, name)
            if not 1 <= v <= n - 2:
                raise InvalidParameterError(f"{name} must satisfy 1 <= {name} <= {n - 2}, got {v}")
        if not 0 <= self.t2 <= n - 1:
            raise InvalidParameterError(f"t2 must satisfy 0 <= t2 <= {n - 1}, got {self.t2}")

    @classmethod
    def parse(cls, text: str) -> "PairParams":
        try:
            n, i1, i2, t2 = (int(part) for part in text.split(","))
        except ValueError:
            raise InvalidParameterError(f"expected 'n,i1,i2,t2', got {text!r}") from None
        return cls(n, i1, i2, t2)

    @property
    def first(self) -> FamilyParams:
        return FamilyParams(self.n, self.i1, 0)

    @property
    def second(self) -> FamilyParams:
        return FamilyParams(self.n, self.i2, self.t2)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.i1, self.i2, self.t2)


def normalize_pair(n: int, i1: int, t1: int, i2: int, t2: int) -> PairParams:
    """Rotate a general pair so the first window starts at 1."""
    return PairParams(n, i1, i2, (t2 - t1) % n)


def intersection_base_set(p: PairParams) -> BaseSet:
    wa, wb = membership_window(p.first), membership_window(p.second)
    pts = frozenset(a for a in compositions(p.n, p.n) if wa.admits(a) and wb.admits(a))
    return BaseSet(p.n, pts)


def _in_range(x: int, lo: int, hi: int) -> bool:
    return lo <= x <= hi


def criterion(p: PairParams) -> str:
    """The first of a-e that holds, or 'none'."""
    n, i1, i2, t2 = p.as_tuple()
    if i1 == 1:
        return "a"
    if t2 == 0:
        return "b"
    if t2 == i1:
        return "c"
    if 1 <= t2 <= i1 - 1:
        return "d" if _in_range(i2, 1, i1 - t2) or _in_range(i2, n - t2, n - 2) else "none"
    if i1 + 1 <= t2 <= n - 1:
        return "e" if _in_range(i2, 1, n - t2) or _in_range(i2, n - t2 + i1, n - 2) else "none"
    return "none"


def case_label(p: PairParams) -> str | None:
    n, i1, i2, t2 = p.as_tuple()
    cond = criterion(p)
    if cond == "a":
        if t2 == 0:
            return "a1-family" if i2 == i1 else "a1"
        if i2 + t2 > n:
            return "a5"
        if i2 == n - 2:
            return "a3"
        if i2 == n - 3:
            return "a4"
        return "a2"
    if cond == "b":
        return "b1" if i2 <= i1 else "b2"
    if cond == "c":
        if i2 + t2 < n - 1:
            return "c1"
        return "c2" if i2 + t2 == n - 1 else "c3"
    if cond == "d":
        return "d1" if i2 + t2 <= i1 else "d2"
    if cond == "e":
        if i2 + t2 > n:
            return "e3"
        return "e2" if i1 + 1 + i2 == n else "e1"
    return None


def _blocks(n: int, rows: Sequence[tuple[int, int, IndexSet]]) -> Presentation:
    """Build C from (first, last, set) row ranges, 1-indexed and inclusive."""
    sets: list[IndexSet | None] = [None] * n
    for first, last, s in rows:
        for k in range(first, last + 1):
            sets[k - 1] = s
    missing = [k + 1 for k, s in enumerate(sets) if s is None]
    if missing:
        raise AssertionError(f"rows {missing} left unassigned")
    return Presentation(n, tuple(sets))  # type: ignore[arg-type]


def witness(p: PairParams) -> Presentation:
    """An explicit presentation whose base set is A ∩ B."""
    label = case_label(p)
    if label is None:
        raise NotABaseRingError(f"{p.as_tuple()} satisfies none of the criteria")
    n, i1, i2, t2 = p.as_tuple()
    full = frozenset(range(1, n + 1))
    win = sigma_window(n, t2, i2)
    not_b = full - win
    not_a = full - frozenset(range(1, i1 + 1))

    def minus_prefix(k: int) -> IndexSet:
        return full - frozenset(range(1, k + 1))

    if label == "a1-family":
        return family_presentation(p.first)
    if label in ("a1", "b2"):
        return _blocks(n, [(1, i1, full), (n, n, full), (i1 + 1, i2, not_a), (i2 + 1, n - 1, minus_prefix(i2))])
    if label == "b1":
        return _blocks(n, [(1, i2, full), (n, n, full), (i2 + 1, i1, minus_prefix(i2)), (i1 + 1, n - 1, not_a)])
    if label == "a2":
        return _blocks(
            n, [(1, 1, not_b), (n, n, not_b), (2, i2 + 2, minus_prefix(1)), (i2 + 3, n - 1, not_b - {1})]
        )
    if label == "a3":
        return _blocks(n, [(1, 1, not_b), (n, n, full), (2, n - 1, minus_prefix(1))])
    if label == "a4":
        return _blocks(n, [(1, 1, not_b), (n, n, not_b), (2, n - 1, minus_prefix(1))])
    if label == "a5":
        return _blocks(n, [(1, 1, full), (n, n, full), (2, n - i2, not_b), (n - i2 + 1, n - 1, minus_prefix(1))])
    if label == "c1":
        return _blocks(
            n,
            [(1, i1, not_b), (n, n, not_b), (i1 + 1, i1 + i2 + 1, not_a), (i1 + i2 + 2, n - 1, minus_prefix(i1 + i2))],
        )
    if label in ("c2", "e2"):
        return _blocks(n, [(1, i1, not_b), (i1 + 1, n - 1, not_a), (n, n, full)])
    if label in ("c3", "d2"):
        return _blocks(n, [(1, n - i2 - 1, not_b), (n - i2, i1, full), (n, n, full), (i1 + 1, n - 1, not_a)])
    if label == "d1":
        return _blocks(n, [(1, i2, full), (n, n, full), (i2 + 1, i1, not_b), (i1 + 1, n - 1, not_a)])
    if label == "e1":
        return _blocks(
            n, [(1, i1, not_b), (n, n, not_b), (i1 + 1, i1 + i2 + 1, not_a), (i1 + i2 + 2, n - 1, not_a & not_b)]
        )
    if label == "e3":
        return _blocks(
            n, [(1, i1, full), (n, n, full), (i1 + 1, i1 + n - i2 - 1, not_b), (i1 + n - i2, n - 1, not_a)]
        )
    raise AssertionError(f"unhandled case {label}")


@dataclass(frozen=True)
class DecisionOutcome:
    params: PairParams
    is_base_ring: bool
    condition: str
    witness: Presentation | None = None
    lemma_case: str | None = None

    def to_dict(self) -> dict:
        n, i1, i2, t2 = self.params.as_tuple()
        out: dict = {"n": n, "i1": i1, "i2": i2, "t2": t2, "is_base_ring": self.is_base_ring, "condition": self.condition}
        if self.is_base_ring:
            out["lemma_case"] = self.lemma_case
            out["witness"] = self.witness.to_dict()  # type: ignore[union-attr]
        return out


def decide(p: PairParams) -> DecisionOutcome:
    cond = criterion(p)
    if cond == "none":
        return DecisionOutcome(p, False, "none")
    return DecisionOutcome(p, True, cond, witness(p), case_label(p))


def decide_general(n: int, i1: int, t1: int, i2: int, t2: int) -> DecisionOutcome:
    """decide for windows at arbitrary offsets; the witness is rotated back to the input frame."""
    p = normalize_pair(n, i1, t1, i2, t2)
    out = decide(p)
    if out.witness is not None and t1 % n:
        return DecisionOutcome(p, True, out.condition, rotate_presentation(out.witness, t1), out.lemma_case)
    return out


def verify_witness(p: PairParams) -> bool:
    return enumerate_bases(witness(p)).points == intersection_base_set(p).points


def expand_monomial_family(blocks: Iterable[tuple[Iterable[int], int]], n: int) -> set[Vector]:
    """Exponent vectors of products of all monomials of each block's degree in its variables.

    A block with negative degree contributes nothing; an empty variable set
    admits only degree 0.
    """
    acc: set[Vector] = {(0,) * n}
    for members, degree in blocks:
        idx = sorted(j - 1 for j in members)
        if degree < 0 or (not idx and degree > 0):
            return set()
        if degree == 0:
            continue
        parts = list(compositions(degree, len(idx)))
        nxt = set()
        for v in acc:
            for c in parts:
                w = list(v)
                for j, x in zip(idx, c):
                    w[j] += x
                nxt.add(tuple(w))
        acc = nxt
    return acc


def _rng(lo: int, hi: int) -> list[int]:
    return list(range(lo, hi + 1))


def monomial_family(p: PairParams) -> set[Vector] | None:
    """The generating monomials written as unions of block products, where a closed form is known.

    Returns None for case labels without a block description.
    """
    label = case_label(p)
    n, i1, i2, t2 = p.as_tuple()
    pts: set[Vector] = set()
    if label in ("d1", "b1", "a1-family"):
        middle = _rng(1, t2) + _rng(t2 + i2 + 1, i1)
        for k in range(i2 + 2):
            for s in range(i1 - i2 + k + 1):
                pts |= expand_monomial_family(
                    [(_rng(t2 + 1, t2 + i2), i2 + 1 - k), (middle, i1 - i2 + k - s), (_rng(i1 + 1, n), n - 1 - i1 + s)], n
                )
        return pts
    if label in ("d2", "c3"):
        core = _rng(i2 + t2 - n + 1, t2)
        side = _rng(1, i2 + t2 - n) + _rng(t2 + 1, i1)
        for k in range(i1 + i2 - n + 3):
            for s in range(k + 1):
                pts |= expand_monomial_family(
                    [(core, i1 + 1 - k), (side, k - s), (_rng(i1 + 1, n), n - 1 - i1 + s)], n
                )
        return pts
    if label in ("e1", "c1", "a2", "a4"):
        rest = _rng(i1 + 1, t2) + _rng(t2 + i2 + 1, n)
        for k in range(i1 + 2):
            for s in range(i2 + 2):
                pts |= expand_monomial_family(
                    [(_rng(1, i1), i1 + 1 - k), (_rng(t2 + 1, t2 + i2), i2 + 1 - s), (rest, n - i1 - i2 - 2 + k + s)], n
                )
        return pts
    if label in ("e2", "c2", "a3"):
        # i1 + i2 = n - 1 leaves exactly one variable outside both windows
        window = sorted(sigma_window(n, t2, i2))
        (free,) = set(_rng(1, n)) - set(_rng(1, i1)) - set(window)
        for k in range(i1 + 2):
            for s in range(i2 + 2):
                pts |= expand_monomial_family(
                    [(_rng(1, i1), i1 + 1 - k), ([free], n - i1 - 1 + k - s), (window, s)], n
                )
        return pts
    if label in ("e3", "a5"):
        for k in range(i1 + 2):
            for s in range(i2 - i1 + k + 1):
                pts |= expand_monomial_family(
                    [
                        (_rng(1, i1), i1 + 1 - k),
                        (_rng(i1 + 1, i2 + t2 - n) + _rng(t2 + 1, n), i2 - i1 + k - s),
                        (_rng(i2 + t2 - n + 1, t2), n - i2 - 1 + s),
                    ],
                    n,
                )
        return pts
    if label in ("b2", "a1"):
        for k in range(i1 + 2):
            for s in range(i2 - i1 + k + 1):
                pts |= expand_monomial_family(
                    [(_rng(1, i1), i1 + 1 - k), (_rng(i1 + 1, i2), i2 - i1 + k - s), (_rng(i2 + 1, n), n - i2 + s - 1)], n
                )
        return pts
    return None


@dataclass(frozen=True)
class TripleResult:
    params: tuple[int, int, int, int]
    decided: bool
    recognized: bool
    witness_ok: bool | None
    lemma_case: str | None

    @property
    def agrees(self) -> bool:
        return self.decided == self.recognized and self.witness_ok is not False


def check_triple(p: PairParams) -> TripleResult:
    outcome = decide(p)
    recognized = recognize_transversal(intersection_base_set(p)).transversal
    ok = verify_witness(p) if outcome.is_base_ring else None
    return TripleResult(p.as_tuple(), outcome.is_base_ring, recognized, ok, outcome.lemma_case)


@dataclass(frozen=True)
class SweepReport:
    n: int
    results: tuple[TripleResult, ...] = field(default_factory=tuple)

    @property
    def disagreements(self) -> list[TripleResult]:
        return [r for r in self.results if not r.agrees]

    @property
    def passed(self) -> bool:
        return not self.disagreements

    def summary(self) -> str:
        return f"{len(self.results)} triples, {len(self.disagreements)} disagreements"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "triples": len(self.results),
            "yes_instances": sum(r.decided for r in self.results),
            "disagreements": [
                {"i1": r.params[1], "i2": r.params[2], "t2": r.params[3], "decided": r.decided, "recognized": r.recognized, "witness_ok": r.witness_ok}
                for r in self.disagreements
            ],
            "summary": self.summary(),
        }


def sweep_triples(n: int) -> list[PairParams]:
    return [PairParams(n, i1, i2, t2) for i1, i2, t2 in product(range(1, n - 1), range(1, n - 1), range(n))]


def sweep_capacity() -> int:
    raw = os.environ.get("POLYMAT_MAX_N")
    return int(raw) if raw else SWEEP_MAX_N


def sweep_theorem(n: int, jobs: int = 1) -> SweepReport:
    """Cross-check decide against recognition and witnesses for every (i1, i2, t2)."""
    cap = sweep_capacity()
    if n > cap:
        raise CapacityError(f"sweep is limited to n <= {cap}, got {n}")
    if n < 3:
        raise InvalidParameterError("sweep needs n >= 3")
    triples = sweep_triples(n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check_triple, triples))
    else:
        results = [check_triple(p) for p in triples]
    results.sort(key=lambda r: r.params)
    return SweepReport(n, tuple(results))
