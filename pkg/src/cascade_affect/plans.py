"""Plans: readings of the task instructions as sets of local inference rules.

Each constraint triple ``child = left + right`` licenses three rules:

* ``R1``  child  <- left + right   (the literal, additive reading)
* ``R2``  left   <- child - right
* ``R3``  right  <- child - left

A rule fires only when its target is Blank and both sources are known.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .grid import CellPos, Grid, set_cell, triples


class Rule(str, enum.Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"


ALL_RULES = frozenset(Rule)


@dataclass(frozen=True)
class Plan:
    name: str
    allowed_rules: frozenset[Rule]

    def __post_init__(self):
        if not self.allowed_rules:
            raise ValueError(f"plan {self.name!r} allows no rules")
        object.__setattr__(self, "allowed_rules", frozenset(Rule(r) for r in self.allowed_rules))


@dataclass(frozen=True)
class Repertoire:
    plans: tuple[Plan, ...]
    cycling: bool = True

    def __post_init__(self):
        object.__setattr__(self, "plans", tuple(self.plans))
        if not self.plans:
            raise ValueError("repertoire must contain at least one plan")
        names = [p.name for p in self.plans]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate plan names in repertoire: {names}")

    def __len__(self) -> int:
        return len(self.plans)

    def __getitem__(self, index: int) -> Plan:
        return self.plans[index]


@dataclass(frozen=True)
class Move:
    target: CellPos
    value: int
    rule: Rule | None  # None only on erase records in traces
    child: CellPos


def builtin_plans() -> dict[str, Plan]:
    return {
        "add_only": Plan("add_only", frozenset({Rule.R1})),
        "sub_only": Plan("sub_only", frozenset({Rule.R2, Rule.R3})),
        "full": Plan("full", ALL_RULES),
    }


def make_repertoire(names: Iterable[str], cycling: bool = True) -> Repertoire:
    """Repertoire from builtin plan names; raises KeyError on an unknown name."""
    table = builtin_plans()
    return Repertoire(tuple(table[n] for n in names), cycling)


def default_repertoire() -> Repertoire:
    return make_repertoire(["add_only", "full"])


def _fire(grid: Grid, rule: Rule, child, left, right) -> Move | None:
    c, a, b = grid.value(child), grid.value(left), grid.value(right)
    if rule is Rule.R1 and c is None and a is not None and b is not None:
        return Move(child, a + b, rule, child)
    if rule is Rule.R2 and a is None and c is not None and b is not None:
        return Move(left, c - b, rule, child)
    if rule is Rule.R3 and b is None and c is not None and a is not None:
        return Move(right, c - a, rule, child)
    return None


def applicable_moves(grid: Grid, plan: Plan | Iterable[Rule]) -> list[Move]:
    """Every move the plan licenses, triples row-major by child, rules R1<R2<R3."""
    rules = plan.allowed_rules if isinstance(plan, Plan) else frozenset(plan)
    moves = []
    for child, left, right in triples(grid.rows):
        for rule in (Rule.R1, Rule.R2, Rule.R3):
            if rule in rules:
                move = _fire(grid, rule, child, left, right)
                if move is not None:
                    moves.append(move)
    return moves


def apply_move(grid: Grid, move: Move, seq: int) -> Grid:
    return set_cell(grid, move.target, move.value, seq)


def closure(grid: Grid, rules: Iterable[Rule]) -> Grid:
    """Fixpoint of repeatedly applying the first applicable move."""
    rules = frozenset(Rule(r) for r in rules)
    seq = grid.max_seq() + 1
    while True:
        moves = applicable_moves(grid, rules)
        if not moves:
            return grid
        grid = apply_move(grid, moves[0], seq)
        seq += 1


def next_plan(repertoire: Repertoire, current_index: int) -> int | None:
    if not 0 <= current_index < len(repertoire):
        raise IndexError(f"plan index {current_index} out of range")
    if current_index + 1 < len(repertoire):
        return current_index + 1
    if repertoire.cycling and len(repertoire) > 1:
        return 0
    return None
