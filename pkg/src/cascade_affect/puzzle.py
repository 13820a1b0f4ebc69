"""Cascade puzzles: the brute-force completion oracle and a seeded generator."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GenerationError
from .grid import BLANK, Filled, Grid, GridStatus, from_top_row, status
from .plans import ALL_RULES, Rule, closure
from .rng import SplitMix64

MAX_REMOVAL_ATTEMPTS = 100


@dataclass(frozen=True)
class Puzzle:
    grid: Grid
    vmax: int = 9
    requires_subtraction: bool = False

    def __post_init__(self):
        if any(isinstance(cell, Filled) for row in self.grid.cells for cell in row):
            raise ValueError("a puzzle holds only Given and Blank cells")

    @property
    def rows(self) -> int:
        return self.grid.rows


def brute_force_completions(puzzle: Puzzle | Grid, vmax: int) -> list[Grid]:
    """All solved grids with top row in ``[0, vmax]**R`` agreeing with the known cells.

    Lower rows are forced by the sums, so only the top row is enumerated.
    Results come back in lexicographic top-row order.
    """
    grid = puzzle.grid if isinstance(puzzle, Puzzle) else puzzle
    if vmax < 0:
        raise ValueError("vmax must be non-negative")
    n = grid.rows
    axes = []
    for c in range(n):
        v = grid.value((0, c))
        if v is None:
            axes.append(np.arange(vmax + 1, dtype=np.int64))
        elif 0 <= v <= vmax:
            axes.append(np.array([v], dtype=np.int64))
        else:
            return []
    # ij indexing keeps the last column fastest-varying: lexicographic order
    tops = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n)
    keep = np.ones(len(tops), dtype=bool)
    row = tops
    for r in range(n):
        if r > 0:
            row = row[:, :-1] + row[:, 1:]
        for c in range(n - r):
            v = grid.value((r, c))
            if v is not None:
                keep &= row[:, c] == v
    return [from_top_row(t) for t in tops[keep].tolist()]


def is_closure_solvable(grid: Grid, rules=ALL_RULES) -> bool:
    return status(closure(grid, rules)) is GridStatus.SOLVED


def generate_puzzle(
    rows: int,
    vmax: int = 9,
    require_subtraction: bool = False,
    rng: SplitMix64 | int = 0,
    max_attempts: int = MAX_REMOVAL_ATTEMPTS,
) -> Puzzle:
    """Draw a top row, complete it, then greedily blank cells in random order.

    A removal is kept only if the full rule set still completes the grid.
    With `require_subtraction`, removal orders are redrawn (up to
    `max_attempts`) until additive rules alone no longer suffice.
    The returned ``requires_subtraction`` reports the measured property.
    """
    if rows < 2:
        raise ValueError(f"rows must be >= 2, got {rows}")
    if vmax < 1:
        raise ValueError(f"vmax must be >= 1, got {vmax}")
    if not isinstance(rng, SplitMix64):
        rng = SplitMix64(rng)

    solution = from_top_row([rng.randint(0, vmax) for _ in range(rows)])
    for _ in range(max_attempts):
        order = list(solution.positions())
        rng.shuffle(order)
        grid = solution
        for pos in order:
            trial = grid.replace(pos, BLANK)
            if is_closure_solvable(trial):
                grid = trial
        needs_sub = not is_closure_solvable(grid, {Rule.R1})
        if needs_sub or not require_subtraction:
            return Puzzle(grid, vmax, needs_sub)
    raise GenerationError(
        f"no removal order needing subtraction found in {max_attempts} attempts"
    )
