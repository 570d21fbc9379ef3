"""Ground types: cyclic windows, the Gorenstein presentation family, facet normals.

Ground elements are 1-indexed everywhere. The cyclic shift is fixed as
sigma(k) = k + 1 for k < n and sigma(n) = 1, so sigma^t(k) = ((k + t - 1) mod n) + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Sequence

MAX_GROUND_SIZE = 62

Vector = tuple[int, ...]
IndexSet = frozenset[int]


class PolymatError(Exception):
    """Base class for errors raised by this package."""


class InvalidParameterError(PolymatError, ValueError):
    pass


class InvalidPresentationError(PolymatError, ValueError):
    pass


class InvalidInputError(PolymatError, ValueError):
    pass


class CapacityError(PolymatError):
    """Raised when an exhaustive computation would exceed its size guard."""


def _check_n(n: int, minimum: int = 2) -> None:
    if not isinstance(n, int) or n < minimum:
        raise InvalidParameterError(f"n must be an integer >= {minimum}, got {n!r}")
    if n > MAX_GROUND_SIZE:
        raise InvalidParameterError(f"n = {n} exceeds the supported maximum {MAX_GROUND_SIZE}")


def _check_window(n: int, t: int, i: int) -> None:
    _check_n(n)
    if not 1 <= i <= n - 1:
        raise InvalidParameterError(f"window length i must satisfy 1 <= i <= {n - 1}, got {i}")
    if not 0 <= t <= n - 1:
        raise InvalidParameterError(f"offset t must satisfy 0 <= t <= {n - 1}, got {t}")


def sigma_power(n: int, t: int, k: int) -> int:
    """Image of k under the t-th power of the cycle (1, 2, ..., n)."""
    return (k + t - 1) % n + 1


def sigma_window(n: int, t: int, i: int) -> IndexSet:
    """The cyclic interval {t+1, ..., t+i} taken mod n."""
    _check_window(n, t, i)
    return frozenset(sigma_power(n, t, k) for k in range(1, i + 1))


@dataclass(frozen=True)
class FamilyParams:
    n: int
    i: int
    t: int

    def __post_init__(self) -> None:
        _check_window(self.n, self.t, self.i)

    @classmethod
    def parse(cls, text: str) -> "FamilyParams":
        """Parse the ``n,i,t`` shorthand."""
        try:
            n, i, t = (int(part) for part in text.split(","))
        except ValueError:
            raise InvalidParameterError(f"expected 'n,i,t', got {text!r}") from None
        return cls(n, i, t)


@dataclass(frozen=True)
class Presentation:
    """An ordered list of n nonempty subsets of [n]."""

    n: int
    sets: tuple[IndexSet, ...]

    def __post_init__(self) -> None:
        _check_n(self.n)
        sets = tuple(frozenset(s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        if len(sets) != self.n:
            raise InvalidPresentationError(
                f"a presentation over [{self.n}] needs exactly {self.n} sets, got {len(sets)}"
            )
        for k, s in enumerate(sets, start=1):
            if not s:
                raise InvalidPresentationError(f"set {k} is empty")
            if not all(isinstance(j, int) and 1 <= j <= self.n for j in s):
                raise InvalidPresentationError(f"set {k} = {sorted(s)} is not a subset of [{self.n}]")

    @classmethod
    def from_lists(cls, sets: Sequence[Iterable[int]], n: int | None = None) -> "Presentation":
        sets = [frozenset(s) for s in sets]
        return cls(len(sets) if n is None else n, tuple(sets))

    def canonical(self) -> tuple[tuple[int, ...], ...]:
        """Sorted multiset form; two presentations with equal canonical forms have equal base sets."""
        return tuple(sorted(tuple(sorted(s)) for s in self.sets))

    def to_dict(self) -> dict:
        return {"n": self.n, "sets": [sorted(s) for s in self.sets]}

    @classmethod
    def from_dict(cls, data: dict) -> "Presentation":
        try:
            n = data["n"]
            sets = data["sets"]
        except (KeyError, TypeError):
            raise InvalidPresentationError("presentation JSON needs keys 'n' and 'sets'") from None
        if not isinstance(sets, list) or not all(isinstance(s, list) for s in sets):
            raise InvalidPresentationError("'sets' must be a list of integer lists")
        return cls(n, tuple(frozenset(s) for s in sets))


@dataclass(frozen=True)
class CyclicWindow:
    """The constraint alpha_{t+1} + ... + alpha_{t+i} <= i + 1 (indices mod n)."""

    n: int
    t: int
    i: int

    @property
    def bound(self) -> int:
        return self.i + 1

    @property
    def wraps(self) -> bool:
        # i + t == n still uses the non-wrapping form
        return self.i + self.t > self.n

    @property
    def members(self) -> IndexSet:
        return sigma_window(self.n, self.t, self.i)

    def window_sum(self, alpha: Sequence[int]) -> int:
        if self.wraps:
            head = sum(alpha[: self.i + self.t - self.n])
            return head + sum(alpha[self.t :])
        return sum(alpha[self.t : self.t + self.i])

    def admits(self, alpha: Sequence[int], degree: int = 1) -> bool:
        return self.window_sum(alpha) <= degree * self.bound


def membership_window(p: FamilyParams) -> CyclicWindow:
    return CyclicWindow(p.n, p.t, p.i)


@dataclass(frozen=True)
class FacetNormal:
    """An integer normal vector together with its primitive divisor."""

    nu: Vector
    d: int

    @property
    def n(self) -> int:
        return len(self.nu)

    @property
    def primitive(self) -> Vector:
        return tuple(c // self.d for c in self.nu)

    @classmethod
    def from_vector(cls, nu: Sequence[int]) -> "FacetNormal":
        nu = tuple(int(c) for c in nu)
        d = 0
        for c in nu:
            d = gcd(d, c)
        if d == 0:
            raise InvalidParameterError("zero vector is not a facet normal")
        return cls(nu, d)

    def is_coordinate(self) -> bool:
        prim = self.primitive
        return sorted(prim) == [0] * (len(prim) - 1) + [1]


def nu_vector(n: int, t: int, i: int) -> FacetNormal:
    """-(n-i-1) on the window sigma^t[i], i+1 off it; divisor gcd(n, i+1)."""
    _check_window(n, t, i)
    window = sigma_window(n, t, i)
    nu = tuple(-(n - i - 1) if j in window else i + 1 for j in range(1, n + 1))
    return FacetNormal(nu, gcd(n, i + 1))


def coordinate_normal(n: int, j: int) -> FacetNormal:
    """The normal of sigma^k[n-1] with sigma^k(n) = j, i.e. n * e_j."""
    if not 1 <= j <= n:
        raise InvalidParameterError(f"coordinate {j} outside [{n}]")
    return FacetNormal(tuple(n if k == j else 0 for k in range(1, n + 1)), n)


def family_presentation(p: FamilyParams) -> Presentation:
    if p.n < 3:
        raise InvalidParameterError("the presentation family needs n >= 3")
    full = frozenset(range(1, p.n + 1))
    rest = full - sigma_window(p.n, p.t, p.i)
    sets: list[IndexSet] = [full] * p.n
    for k in range(p.i + 1, p.n):
        sets[sigma_power(p.n, p.t, k) - 1] = rest
    return Presentation(p.n, tuple(sets))


def rotate_vector(alpha: Sequence[int], s: int) -> Vector:
    """Move coordinate j to position sigma^s(j)."""
    n = len(alpha)
    out = [0] * n
    for j in range(1, n + 1):
        out[sigma_power(n, s, j) - 1] = alpha[j - 1]
    return tuple(out)


def rotate_presentation(P: Presentation, s: int) -> Presentation:
    s %= P.n
    sets: list[IndexSet] = [frozenset()] * P.n
    for k, members in enumerate(P.sets, start=1):
        sets[sigma_power(P.n, s, k) - 1] = frozenset(sigma_power(P.n, s, j) for j in members)
    return Presentation(P.n, tuple(sets))


def compositions(total: int, parts: int) -> Iterator[Vector]:
    """Weak compositions of ``total`` into ``parts`` parts, lexicographically descending."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first, *rest)


def modulus(alpha: Sequence[int]) -> int:
    return sum(alpha)
