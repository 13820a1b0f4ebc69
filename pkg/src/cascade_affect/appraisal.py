"""Appraisal: classify the grid against the active plan.

Precedence is error > solved > progress > impasse. Relevance and congruence
are the two appraisal dimensions kept from the Smith & Lazarus set.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .grid import CellPos, Grid, GridStatus, status, violated_constraints
from .plans import Move, Plan, applicable_moves


class AppraisalKind(str, enum.Enum):
    SOLVED = "solved"
    PROGRESS = "progress"
    ERROR = "error"
    IMPASSE = "impasse"


@dataclass(frozen=True)
class Appraisal:
    kind: AppraisalKind
    move: Move | None = None
    cells: tuple[CellPos, ...] = ()

    @property
    def relevance(self) -> bool:
        return self.kind is not AppraisalKind.SOLVED

    @property
    def congruence(self) -> bool:
        return self.kind in (AppraisalKind.SOLVED, AppraisalKind.PROGRESS)


def appraise(grid: Grid, plan: Plan) -> Appraisal:
    bad = violated_constraints(grid)
    if bad:
        return Appraisal(AppraisalKind.ERROR, cells=tuple(bad))
    if status(grid) is GridStatus.SOLVED:
        return Appraisal(AppraisalKind.SOLVED)
    moves = applicable_moves(grid, plan)
    if moves:
        return Appraisal(AppraisalKind.PROGRESS, move=moves[0])
    return Appraisal(AppraisalKind.IMPASSE)
