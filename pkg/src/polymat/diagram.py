"""Polymatroidal diagrams: an n x n grid, cell (k, j) white iff j is in the k-th set."""

from __future__ import annotations

from dataclasses import dataclass

from .core import InvalidInputError, Presentation

WHITE = "."
BLACK = "#"
CELL = 20


@dataclass(frozen=True)
class Diagram:
    n: int
    cells: tuple[tuple[bool, ...], ...]

    @classmethod
    def of(cls, P: Presentation) -> "Diagram":
        return cls(P.n, tuple(tuple(j in s for j in range(1, P.n + 1)) for s in P.sets))

    def presentation(self) -> Presentation:
        return Presentation(self.n, tuple(frozenset(j + 1 for j, w in enumerate(row) if w) for row in self.cells))

    def white_count(self) -> int:
        return sum(sum(row) for row in self.cells)


def to_ascii(P: Presentation) -> str:
    rows = Diagram.of(P).cells
    return "\n".join("".join(WHITE if w else BLACK for w in row) for row in rows) + "\n"


def from_ascii(text: str) -> Presentation:
    rows = [line.strip() for line in text.splitlines() if line.strip()]
    n = len(rows)
    if any(len(r) != n or set(r) - {WHITE, BLACK} for r in rows):
        raise InvalidInputError(f"expected {n} rows of {n} characters from {WHITE!r}/{BLACK!r}")
    return Diagram(n, tuple(tuple(c == WHITE for c in r) for r in rows)).presentation()


def to_svg(P: Presentation) -> str:
    n = P.n
    size = n * CELL + 1
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="#888888"/>',
    ]
    for k, row in enumerate(Diagram.of(P).cells):
        for j, white in enumerate(row):
            fill = "#ffffff" if white else "#000000"
            parts.append(
                f'<rect x="{j * CELL + 1}" y="{k * CELL + 1}" width="{CELL - 1}" height="{CELL - 1}" fill="{fill}"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render(P: Presentation, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return to_ascii(P)
    if fmt == "svg":
        return to_svg(P)
    raise InvalidInputError(f"unknown diagram format {fmt!r}; use 'ascii' or 'svg'")
