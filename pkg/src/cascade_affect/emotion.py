"""Valence/frustration state with decay-plus-impulse updates."""

from __future__ import annotations

import enum
from dataclasses import dataclass, fields
from typing import Any, Mapping


class EmotionEvent(enum.Enum):
    PROGRESS_MADE = "progress_made"
    ERROR_DETECTED = "error_detected"
    IMPASSE_HIT = "impasse_hit"
    PLAN_CHANGED = "plan_changed"
    TASK_SOLVED = "task_solved"


@dataclass(frozen=True)
class EmotionState:
    valence: float = 0.0
    frustration: float = 0.0


@dataclass(frozen=True)
class EmotionParams:
    lambda_: float = 0.9
    delta_pos: float = 0.2
    delta_err: float = 0.3
    delta_imp: float = 0.4
    delta_solve: float = 0.5
    phi_err: float = 0.1
    phi_imp: float = 0.25
    phi_change: float = 0.3

    def __post_init__(self):
        if not 0.0 < self.lambda_ <= 1.0:
            raise ValueError(f"lambda must lie in (0, 1], got {self.lambda_}")
        for f in fields(self)[1:]:
            if getattr(self, f.name) < 0:
                raise ValueError(f"{f.name} must be >= 0")

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> EmotionParams:
        """Build from config keys; ``lambda`` maps onto ``lambda_``."""
        known = {f.name for f in fields(cls)}
        kwargs = {}
        for key, value in data.items():
            name = "lambda_" if key == "lambda" else key
            if name not in known:
                raise KeyError(key)
            kwargs[name] = float(value)
        return cls(**kwargs)


def _clamp(x: float, lo: float, hi: float) -> float:
    return min(hi, max(lo, x))


def update(state: EmotionState, event: EmotionEvent, params: EmotionParams) -> EmotionState:
    p = params
    impulse = {
        EmotionEvent.PROGRESS_MADE: p.delta_pos,
        EmotionEvent.ERROR_DETECTED: -p.delta_err,
        EmotionEvent.IMPASSE_HIT: -p.delta_imp,
        EmotionEvent.PLAN_CHANGED: 0.0,
        EmotionEvent.TASK_SOLVED: p.delta_solve,
    }[event]
    pressure = {
        EmotionEvent.ERROR_DETECTED: p.phi_err,
        EmotionEvent.IMPASSE_HIT: p.phi_imp,
        EmotionEvent.PLAN_CHANGED: p.phi_change,
    }.get(event, 0.0)
    return EmotionState(
        valence=_clamp(p.lambda_ * state.valence + impulse, -1.0, 1.0),
        frustration=_clamp(state.frustration + pressure, 0.0, 1.0),
    )
