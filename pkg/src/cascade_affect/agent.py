"""The appraise -> feel -> cope -> act loop, run one step at a time."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field, replace
from typing import Any

from .appraisal import Appraisal, AppraisalKind, appraise
from .coping import (
    Abandon,
    ChangePlan,
    CopingAction,
    CopingParams,
    CorrectCell,
    FillCell,
    PlanContext,
    StopSuccess,
    decide,
)
from .emotion import EmotionEvent, EmotionParams, EmotionState, update
from .grid import CellPos, Grid, clear_cell, set_cell
from .plans import Move, Repertoire, default_repertoire
from .puzzle import Puzzle
from .rng import SplitMix64

EVENT_OF = {
    AppraisalKind.SOLVED: EmotionEvent.TASK_SOLVED,
    AppraisalKind.PROGRESS: EmotionEvent.PROGRESS_MADE,
    AppraisalKind.ERROR: EmotionEvent.ERROR_DETECTED,
    AppraisalKind.IMPASSE: EmotionEvent.IMPASSE_HIT,
}


class Outcome(str, enum.Enum):
    SOLVED = "solved"
    ABANDONED = "abandoned"
    STEP_CAP = "step_cap_reached"


@dataclass(frozen=True)
class EpisodeConfig:
    puzzle: Puzzle
    repertoire: Repertoire = field(default_factory=default_repertoire)
    emotion_params: EmotionParams = EmotionParams()
    coping_params: CopingParams = CopingParams()
    max_changes: int = 3
    p_slip: float = 0.0
    step_cap: int = 200

    def __post_init__(self):
        if not 0.0 <= self.p_slip <= 1.0:
            raise ValueError(f"p_slip must lie in [0, 1], got {self.p_slip}")
        if self.step_cap < 1:
            raise ValueError("step_cap must be >= 1")
        if self.max_changes < 0:
            raise ValueError("max_changes must be >= 0")


@dataclass(frozen=True)
class AgentState:
    grid: Grid
    ctx: PlanContext
    emotion: EmotionState = EmotionState()
    fill_history: tuple[tuple[CellPos, int], ...] = ()
    next_seq: int = 0
    step: int = 0

    @classmethod
    def initial(cls, config: EpisodeConfig) -> AgentState:
        ctx = PlanContext(config.repertoire, max_changes=config.max_changes)
        return cls(config.puzzle.grid, ctx)


@dataclass(frozen=True)
class TraceEvent:
    """One completed step.

    `move` is the fill as written (slip included) for ``fill`` actions and
    the erased cell with ``rule=None`` for ``correct`` actions; otherwise None.
    Emotion values are read after every update of the step.
    """

    t: int
    plan: str
    appraisal: str
    move: Move | None
    action: str
    valence: float
    frustration: float
    slipped: bool = False

    def to_dict(self) -> dict[str, Any]:
        move = None
        if self.move is not None:
            move = {
                "row": self.move.target.row,
                "col": self.move.target.col,
                "value": self.move.value,
                "rule": None if self.move.rule is None else self.move.rule.value,
            }
        return {
            "t": self.t,
            "plan": self.plan,
            "appraisal": self.appraisal,
            "move": move,
            "action": self.action,
            "valence": self.valence,
            "frustration": self.frustration,
            "slipped": self.slipped,
        }

    def to_json(self, **extra: Any) -> str:
        record = {**extra, **self.to_dict()}
        return json.dumps(record, separators=(",", ":"))


@dataclass(frozen=True)
class EpisodeResult:
    outcome: Outcome
    steps: int
    plan_changes: int
    fills: int
    corrections: int
    slips: int
    final_emotion: EmotionState
    final_grid: Grid


def _execute(state: AgentState, action: CopingAction, config: EpisodeConfig, rng: SplitMix64):
    """Apply a coping action; returns (state, trace move, slipped, outcome)."""
    if isinstance(action, FillCell):
        offset = 0
        if rng.random() < config.p_slip:
            offset = 1 if rng.coin() else -1
        written = replace(action.move, value=action.move.value + offset)
        grid = set_cell(state.grid, written.target, written.value, state.next_seq)
        history = state.fill_history + ((written.target, state.next_seq),)
        state = replace(state, grid=grid, fill_history=history, next_seq=state.next_seq + 1)
        return state, written, offset != 0, None
    if isinstance(action, CorrectCell):
        pos = action.pos
        erased = Move(pos, state.grid.value(pos), None, pos)
        history = tuple(h for h in state.fill_history if tuple(h[0]) != tuple(pos))
        state = replace(state, grid=clear_cell(state.grid, pos), fill_history=history)
        return state, erased, False, None
    if isinstance(action, ChangePlan):
        ctx = replace(
            state.ctx, current_index=action.to_index, changes_used=state.ctx.changes_used + 1
        )
        emotion = update(state.emotion, EmotionEvent.PLAN_CHANGED, config.emotion_params)
        return replace(state, ctx=ctx, emotion=emotion), None, False, None
    if isinstance(action, Abandon):
        return state, None, False, Outcome.ABANDONED
    if isinstance(action, StopSuccess):
        return state, None, False, Outcome.SOLVED
    raise TypeError(f"unknown coping action {action!r}")


def step(
    state: AgentState, config: EpisodeConfig, rng: SplitMix64
) -> tuple[AgentState, TraceEvent, Outcome | None]:
    plan = state.ctx.plan
    appraisal: Appraisal = appraise(state.grid, plan)
    emotion = update(state.emotion, EVENT_OF[appraisal.kind], config.emotion_params)
    action = decide(appraisal, emotion, state.ctx, config.coping_params, state.fill_history)

    state = replace(state, emotion=emotion)
    state, move, slipped, outcome = _execute(state, action, config, rng)
    event = TraceEvent(
        t=state.step,
        plan=plan.name,
        appraisal=appraisal.kind.value,
        move=move,
        action=action.name,
        valence=state.emotion.valence,
        frustration=state.emotion.frustration,
        slipped=slipped,
    )
    return replace(state, step=state.step + 1), event, outcome


def run_episode(config: EpisodeConfig, seed: int) -> tuple[EpisodeResult, list[TraceEvent]]:
    rng = SplitMix64(seed)
    state = AgentState.initial(config)
    trace: list[TraceEvent] = []
    outcome = None
    while outcome is None and len(trace) < config.step_cap:
        state, event, outcome = step(state, config, rng)
        trace.append(event)

    result = EpisodeResult(
        outcome=outcome or Outcome.STEP_CAP,
        steps=len(trace),
        plan_changes=sum(e.action == "change_plan" for e in trace),
        fills=sum(e.action == "fill" for e in trace),
        corrections=sum(e.action == "correct" for e in trace),
        slips=sum(e.slipped for e in trace),
        final_emotion=state.emotion,
        final_grid=state.grid,
    )
    return result, trace
