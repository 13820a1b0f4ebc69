"""Triangular cascade grids and their sum constraints.

Row 0 is the top row. A grid with ``R`` rows has ``R - r`` cells in row ``r``
and every cell below the top row must equal the sum of its two parents::

    (r-1, i)   (r-1, i+1)
          \\     /
          (r, i)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence, Union

from .errors import CellError


class CellPos(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class Given:
    value: int


@dataclass(frozen=True)
class Filled:
    value: int
    seq: int


@dataclass(frozen=True)
class Blank:
    value = None


BLANK = Blank()

Cell = Union[Given, Filled, Blank]


class GridStatus(enum.Enum):
    SOLVED = "solved"
    INCOMPLETE = "incomplete"
    INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class Grid:
    cells: tuple[tuple[Cell, ...], ...]

    def __post_init__(self):
        n = len(self.cells)
        if n < 1:
            raise ValueError("a grid needs at least one row")
        for r, row in enumerate(self.cells):
            if len(row) != n - r:
                raise ValueError(f"row {r} has {len(row)} cells, expected {n - r}")

    @classmethod
    def from_values(cls, rows: Sequence[Sequence[int | None]]) -> Grid:
        """Build a grid of Given cells; ``None`` marks a Blank."""
        return cls(
            tuple(
                tuple(BLANK if v is None else Given(int(v)) for v in row)
                for row in rows
            )
        )

    @property
    def rows(self) -> int:
        return len(self.cells)

    def __getitem__(self, pos: tuple[int, int]) -> Cell:
        r, c = pos
        return self.cells[r][c]

    def in_range(self, pos: tuple[int, int]) -> bool:
        r, c = pos
        return 0 <= r < self.rows and 0 <= c < self.rows - r

    def value(self, pos: tuple[int, int]) -> int | None:
        return self[pos].value

    def positions(self) -> Iterator[CellPos]:
        """All positions in row-major order."""
        for r in range(self.rows):
            for c in range(self.rows - r):
                yield CellPos(r, c)

    def blanks(self) -> list[CellPos]:
        return [p for p in self.positions() if isinstance(self[p], Blank)]

    def values(self) -> list[list[int | None]]:
        return [[cell.value for cell in row] for row in self.cells]

    def max_seq(self) -> int:
        return max(
            (cell.seq for row in self.cells for cell in row if isinstance(cell, Filled)),
            default=-1,
        )

    def replace(self, pos: tuple[int, int], cell: Cell) -> Grid:
        r, c = pos
        row = self.cells[r][:c] + (cell,) + self.cells[r][c + 1 :]
        return Grid(self.cells[:r] + (row,) + self.cells[r + 1 :])

    def __str__(self) -> str:
        width = max(
            [len(str(v)) for row in self.values() for v in row if v is not None] + [1]
        )
        lines = []
        for r, row in enumerate(self.values()):
            text = " ".join("_".rjust(width) if v is None else str(v).rjust(width) for v in row)
            lines.append(" " * ((width + 1) * r // 2) + text)
        return "\n".join(lines)


def from_top_row(values: Sequence[int]) -> Grid:
    """The complete grid whose top row is `values`."""
    if len(values) == 0:
        raise ValueError("top row must be non-empty")
    rows = [[int(v) for v in values]]
    while len(rows[-1]) > 1:
        above = rows[-1]
        rows.append([a + b for a, b in zip(above, above[1:])])
    return Grid.from_values(rows)


def set_cell(grid: Grid, pos: tuple[int, int], value: int, seq: int) -> Grid:
    if not grid.in_range(pos):
        raise CellError(f"position {tuple(pos)} out of range for {grid.rows}-row grid")
    cell = grid[pos]
    if isinstance(cell, Given):
        raise CellError(f"cell {tuple(pos)} is Given and cannot be overwritten")
    if isinstance(cell, Filled):
        raise CellError(f"cell {tuple(pos)} is already filled")
    return grid.replace(pos, Filled(int(value), seq))


def clear_cell(grid: Grid, pos: tuple[int, int]) -> Grid:
    if not grid.in_range(pos):
        raise CellError(f"position {tuple(pos)} out of range for {grid.rows}-row grid")
    if not isinstance(grid[pos], Filled):
        raise CellError(f"cell {tuple(pos)} is not an agent-filled cell")
    return grid.replace(pos, BLANK)


def triples(rows: int) -> Iterator[tuple[CellPos, CellPos, CellPos]]:
    """(child, left parent, right parent) for every constraint, child row-major."""
    for r in range(1, rows):
        for i in range(rows - r):
            yield CellPos(r, i), CellPos(r - 1, i), CellPos(r - 1, i + 1)


def violated_constraints(grid: Grid) -> list[CellPos]:
    bad = []
    for child, left, right in triples(grid.rows):
        c, a, b = grid.value(child), grid.value(left), grid.value(right)
        if c is not None and a is not None and b is not None and c != a + b:
            bad.append(child)
    return bad


def status(grid: Grid) -> GridStatus:
    if violated_constraints(grid):
        return GridStatus.INCONSISTENT
    if grid.blanks():
        return GridStatus.INCOMPLETE
    return GridStatus.SOLVED
