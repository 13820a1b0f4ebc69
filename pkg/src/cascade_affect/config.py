"""Simulation config files and the puzzle JSON format."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

from .agent import EpisodeConfig
from .coping import CopingParams
from .emotion import EmotionParams
from .errors import ConfigError
from .grid import Grid
from .plans import builtin_plans, make_repertoire
from .puzzle import Puzzle

TOP_LEVEL_KEYS = {
    "generate", "puzzle", "repertoire", "cycling", "p_slip", "emotion",
    "coping", "step_cap", "episodes", "master_seed",
}


@dataclass(frozen=True)
class GenerateSpec:
    rows: int
    vmax: int = 9
    require_subtraction: bool = False


@dataclass(frozen=True)
class SimConfig:
    puzzle: Puzzle | None = None
    generate: GenerateSpec | None = None
    repertoire: tuple[str, ...] = ("add_only", "full")
    cycling: bool = True
    p_slip: float = 0.0
    emotion: EmotionParams = EmotionParams()
    coping: CopingParams = CopingParams()
    max_changes: int = 3
    step_cap: int = 200
    episodes: int = 1
    master_seed: int = 0

    def __post_init__(self):
        if (self.puzzle is None) == (self.generate is None):
            raise ConfigError("puzzle", "exactly one of 'puzzle' or 'generate' is required")

    def episode_config(self, puzzle: Puzzle) -> EpisodeConfig:
        return EpisodeConfig(
            puzzle=puzzle,
            repertoire=make_repertoire(self.repertoire, self.cycling),
            emotion_params=self.emotion,
            coping_params=self.coping,
            max_changes=self.max_changes,
            p_slip=self.p_slip,
            step_cap=self.step_cap,
        )


# -- puzzle files ------------------------------------------------------------

def puzzle_to_dict(puzzle: Puzzle) -> dict[str, Any]:
    return {
        "rows": puzzle.rows,
        "cells": puzzle.grid.values(),
        "vmax": puzzle.vmax,
        "requires_subtraction": puzzle.requires_subtraction,
    }


def puzzle_from_dict(data: Any, where: str = "puzzle") -> Puzzle:
    if not isinstance(data, Mapping):
        raise ConfigError(where, "expected a JSON object")
    cells = data.get("cells")
    if not isinstance(cells, list) or not cells:
        raise ConfigError(f"{where}.cells", "expected a non-empty list of rows")
    rows = data.get("rows", len(cells))
    if not _is_int(rows) or rows != len(cells):
        raise ConfigError(f"{where}.rows", f"must equal the number of rows in cells ({len(cells)})")
    for r, row in enumerate(cells):
        if not isinstance(row, list) or len(row) != rows - r:
            raise ConfigError(f"{where}.cells", f"row {r} must hold {rows - r} entries")
        if any(v is not None and not _is_int(v) for v in row):
            raise ConfigError(f"{where}.cells", f"row {r} entries must be integers or null")
    vmax = data.get("vmax", 9)
    if not _is_int(vmax) or vmax < 0:
        raise ConfigError(f"{where}.vmax", "must be a non-negative integer")
    flag = data.get("requires_subtraction", False)
    if not isinstance(flag, bool):
        raise ConfigError(f"{where}.requires_subtraction", "must be true or false")
    return Puzzle(Grid.from_values(cells), vmax, flag)


def load_puzzle(path: str | Path) -> Puzzle:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError("puzzle", f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("puzzle", f"malformed JSON in {path}: {exc}") from exc
    return puzzle_from_dict(data)


def dump_puzzle(puzzle: Puzzle, path: str | Path) -> None:
    Path(path).write_text(json.dumps(puzzle_to_dict(puzzle)) + "\n", encoding="utf-8")


# -- config files ------------------------------------------------------------

def _is_int(v: Any) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def _is_number(v: Any) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def _int(data: Mapping, key: str, default: int, lo: int, hi: int | None = None, where: str = "") -> int:
    name = f"{where}{key}"
    v = data.get(key, default)
    if not _is_int(v):
        raise ConfigError(name, f"expected an integer, got {v!r}")
    if v < lo or (hi is not None and v > hi):
        raise ConfigError(name, f"{v} out of range [{lo}, {hi if hi is not None else 'inf'}]")
    return v


def _object(data: Mapping, key: str) -> Mapping:
    v = data.get(key, {})
    if not isinstance(v, Mapping):
        raise ConfigError(key, "expected a JSON object")
    return v


def config_from_dict(data: Any, base_dir: str | Path = ".") -> SimConfig:
    if not isinstance(data, Mapping):
        raise ConfigError("config", "top level must be a JSON object")
    unknown = sorted(set(data) - TOP_LEVEL_KEYS)
    if unknown:
        raise ConfigError(unknown[0], "unknown config key")
    if ("generate" in data) == ("puzzle" in data):
        raise ConfigError("generate|puzzle", "exactly one puzzle source is required")

    puzzle = generate = None
    if "generate" in data:
        g = _object(data, "generate")
        extra = sorted(set(g) - {"rows", "vmax", "require_subtraction"})
        if extra:
            raise ConfigError(f"generate.{extra[0]}", "unknown key")
        if "rows" not in g:
            raise ConfigError("generate.rows", "required")
        flag = g.get("require_subtraction", False)
        if not isinstance(flag, bool):
            raise ConfigError("generate.require_subtraction", "must be true or false")
        generate = GenerateSpec(
            rows=_int(g, "rows", 0, 2, where="generate."),
            vmax=_int(g, "vmax", 9, 1, where="generate."),
            require_subtraction=flag,
        )
    else:
        source = data["puzzle"]
        if isinstance(source, str):
            puzzle = load_puzzle(Path(base_dir) / source)
        else:
            puzzle = puzzle_from_dict(source)

    repertoire = data.get("repertoire", ["add_only", "full"])
    if not isinstance(repertoire, list) or not repertoire:
        raise ConfigError("repertoire", "expected a non-empty list of plan names")
    known = builtin_plans()
    for name in repertoire:
        if name not in known:
            raise ConfigError("repertoire", f"unknown plan {name!r}; choose from {sorted(known)}")
    if len(set(repertoire)) != len(repertoire):
        raise ConfigError("repertoire", "plan names must be distinct")

    cycling = data.get("cycling", True)
    if not isinstance(cycling, bool):
        raise ConfigError("cycling", "must be true or false")

    p_slip = data.get("p_slip", 0.0)
    if not _is_number(p_slip) or not 0.0 <= p_slip <= 1.0:
        raise ConfigError("p_slip", f"must be a probability in [0, 1], got {p_slip!r}")

    emo = _object(data, "emotion")
    if any(not _is_number(v) for v in emo.values()):
        raise ConfigError("emotion", "parameters must be numbers")
    try:
        emotion = EmotionParams.from_dict(emo)
    except KeyError as exc:
        raise ConfigError(f"emotion.{exc.args[0]}", "unknown parameter") from exc
    except ValueError as exc:
        raise ConfigError("emotion", str(exc)) from exc

    cop = _object(data, "coping")
    extra = sorted(set(cop) - {"theta_abandon", "max_changes"})
    if extra:
        raise ConfigError(f"coping.{extra[0]}", "unknown parameter")
    theta = cop.get("theta_abandon", 1.0)
    if not _is_number(theta) or not 0.0 < theta <= 1.0:
        raise ConfigError("coping.theta_abandon", f"must lie in (0, 1], got {theta!r}")

    return SimConfig(
        puzzle=puzzle,
        generate=generate,
        repertoire=tuple(repertoire),
        cycling=cycling,
        p_slip=float(p_slip),
        emotion=emotion,
        coping=CopingParams(float(theta)),
        max_changes=_int(cop, "max_changes", 3, 0, where="coping."),
        step_cap=_int(data, "step_cap", 200, 1),
        episodes=_int(data, "episodes", 1, 1),
        master_seed=_int(data, "master_seed", 0, 0, (1 << 64) - 1),
    )


def parse_config(path: str | Path) -> SimConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError("config", f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("config", f"malformed JSON in {path}: {exc}") from exc
    return config_from_dict(data, path.parent)
