"""Coping policy: turn an appraisal plus the current emotion into one action."""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Sequence, Union

from .appraisal import Appraisal, AppraisalKind
from .emotion import EmotionState
from .errors import UnsatisfiablePuzzleError
from .grid import CellPos
from .plans import Move, Repertoire, next_plan


@dataclass(frozen=True)
class FillCell:
    move: Move
    name: ClassVar[str] = "fill"


@dataclass(frozen=True)
class CorrectCell:
    pos: CellPos
    name: ClassVar[str] = "correct"


@dataclass(frozen=True)
class ChangePlan:
    to_index: int
    name: ClassVar[str] = "change_plan"


@dataclass(frozen=True)
class Abandon:
    name: ClassVar[str] = "abandon"


@dataclass(frozen=True)
class StopSuccess:
    name: ClassVar[str] = "stop_success"


CopingAction = Union[FillCell, CorrectCell, ChangePlan, Abandon, StopSuccess]


@dataclass(frozen=True)
class PlanContext:
    repertoire: Repertoire
    current_index: int = 0
    changes_used: int = 0
    max_changes: int = 3

    def __post_init__(self):
        if not 0 <= self.current_index < len(self.repertoire):
            raise ValueError(f"plan index {self.current_index} out of range")
        if not 0 <= self.changes_used <= self.max_changes:
            raise ValueError("changes_used must lie in [0, max_changes]")

    @property
    def plan(self):
        return self.repertoire[self.current_index]


@dataclass(frozen=True)
class CopingParams:
    theta_abandon: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.theta_abandon <= 1.0:
            raise ValueError(f"theta_abandon must lie in (0, 1], got {self.theta_abandon}")


def _culprit(cells: Sequence[CellPos], fill_history: Sequence[tuple[CellPos, int]]) -> CellPos:
    involved = set()
    for r, i in cells:
        involved.update({(r, i), (r - 1, i), (r - 1, i + 1)})
    latest = None
    for pos, seq in fill_history:
        if tuple(pos) in involved and (latest is None or seq > latest[1]):
            latest = (pos, seq)
    if latest is None:
        raise UnsatisfiablePuzzleError(
            f"violated constraints at {list(cells)} involve only given cells"
        )
    return CellPos(*latest[0])


def decide(
    appraisal: Appraisal,
    emotion: EmotionState,
    ctx: PlanContext,
    params: CopingParams,
    fill_history: Sequence[tuple[CellPos, int]],
) -> CopingAction:
    kind = appraisal.kind
    if kind is AppraisalKind.SOLVED:
        return StopSuccess()
    if emotion.frustration >= params.theta_abandon:
        return Abandon()
    if kind is AppraisalKind.PROGRESS:
        return FillCell(appraisal.move)
    if kind is AppraisalKind.ERROR:
        return CorrectCell(_culprit(appraisal.cells, fill_history))
    # impasse: re-read the instructions if the budget allows, else give up
    target = next_plan(ctx.repertoire, ctx.current_index)
    if ctx.changes_used < ctx.max_changes and target is not None:
        return ChangePlan(target)
    return Abandon()
