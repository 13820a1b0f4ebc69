"""Seeded Monte-Carlo batches of episodes and their file outputs."""

from __future__ import annotations

import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from itertools import repeat
from pathlib import Path
from typing import Sequence

from .agent import EpisodeResult, Outcome, TraceEvent, run_episode
from .config import SimConfig
from .errors import GenerationError
from .puzzle import Puzzle, generate_puzzle
from .rng import SplitMix64, splitmix64

SUMMARY_HEADER = [
    "episodes", "solve_rate", "abandon_rate", "stepcap_rate", "mean_steps",
    "mean_plan_changes", "mean_corrections", "mean_final_valence", "mean_final_frustration",
]
TRAJECTORY_HEADER = ["step", "mean_valence", "mean_frustration", "n_active"]
EPISODE_HEADER = [
    "episode", "seed", "outcome", "steps", "plan_changes", "fills", "corrections",
    "slips", "final_valence", "final_frustration",
]


@dataclass(frozen=True)
class BatchSummary:
    episodes: int
    solve_rate: float
    abandon_rate: float
    stepcap_rate: float
    mean_steps: float
    mean_plan_changes: float
    mean_corrections: float
    mean_final_valence: float
    mean_final_frustration: float


def episode_seed(master_seed: int, index: int) -> int:
    return splitmix64(master_seed ^ index)


def episode_puzzle(config: SimConfig, index: int) -> Puzzle:
    if config.puzzle is not None:
        return config.puzzle
    g = config.generate
    try:
        return generate_puzzle(
            g.rows, g.vmax, g.require_subtraction, SplitMix64(episode_seed(config.master_seed, index))
        )
    except GenerationError as exc:
        raise GenerationError(f"episode {index}: {exc}") from None


def run_one(config: SimConfig, index: int) -> tuple[EpisodeResult, list[TraceEvent]]:
    puzzle = episode_puzzle(config, index)
    return run_episode(config.episode_config(puzzle), episode_seed(config.master_seed, index))


def summarize(results: Sequence[EpisodeResult]) -> BatchSummary:
    n = len(results)

    def mean(values) -> float:
        return sum(values) / n

    return BatchSummary(
        episodes=n,
        solve_rate=mean(r.outcome is Outcome.SOLVED for r in results),
        abandon_rate=mean(r.outcome is Outcome.ABANDONED for r in results),
        stepcap_rate=mean(r.outcome is Outcome.STEP_CAP for r in results),
        mean_steps=mean(r.steps for r in results),
        mean_plan_changes=mean(r.plan_changes for r in results),
        mean_corrections=mean(r.corrections for r in results),
        mean_final_valence=mean(r.final_emotion.valence for r in results),
        mean_final_frustration=mean(r.final_emotion.frustration for r in results),
    )


def run_batch(
    config: SimConfig, jobs: int = 1
) -> tuple[BatchSummary, list[EpisodeResult], list[list[TraceEvent]]]:
    """Run every episode; output is in episode order whatever `jobs` is."""
    indices = range(config.episodes)
    if jobs <= 1:
        pairs = [run_one(config, i) for i in indices]
    else:
        chunk = max(1, config.episodes // (4 * jobs))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            pairs = list(pool.map(run_one, repeat(config), indices, chunksize=chunk))
    results = [r for r, _ in pairs]
    traces = [t for _, t in pairs]
    return summarize(results), results, traces


def trajectory(traces: Sequence[Sequence[TraceEvent]]) -> list[tuple[int, float, float, int]]:
    """Per-step emotion means over the episodes still running at that step."""
    rows = []
    for k in range(max((len(t) for t in traces), default=0)):
        active = [t[k] for t in traces if len(t) > k]
        n = len(active)
        rows.append((
            k,
            sum(e.valence for e in active) / n,
            sum(e.frustration for e in active) / n,
            n,
        ))
    return rows


def _write_csv(path, header, rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def write_traces(traces: Sequence[Sequence[TraceEvent]], path: str | Path, split: bool = False) -> list[Path]:
    """JSONL traces: one file per episode, or one file tagged by ``episode``."""
    path = Path(path)
    if split:
        width = max(4, len(str(len(traces) - 1)))
        written = []
        for i, trace in enumerate(traces):
            p = path.with_name(f"{path.stem}_{i:0{width}d}{path.suffix}")
            p.write_text("".join(e.to_json() + "\n" for e in trace), encoding="utf-8")
            written.append(p)
        return written
    with open(path, "w", encoding="utf-8") as fh:
        for i, trace in enumerate(traces):
            for e in trace:
                fh.write(e.to_json(episode=i) + "\n")
    return [path]


def write_outputs(
    summary: BatchSummary,
    results: Sequence[EpisodeResult],
    traces: Sequence[Sequence[TraceEvent]],
    *,
    summary_path=None,
    traces_path=None,
    trajectories_path=None,
    episodes_path=None,
    split_traces: bool = False,
    seeds: Sequence[int] | None = None,
) -> None:
    if traces_path is not None:
        write_traces(traces, traces_path, split_traces)
    if summary_path is not None:
        assert [f.name for f in fields(summary)] == SUMMARY_HEADER
        _write_csv(summary_path, SUMMARY_HEADER, [astuple(summary)])
    if trajectories_path is not None:
        _write_csv(trajectories_path, TRAJECTORY_HEADER, trajectory(traces))
    if episodes_path is not None:
        seeds = seeds if seeds is not None else [None] * len(results)
        _write_csv(
            episodes_path,
            EPISODE_HEADER,
            [
                (i, seeds[i], r.outcome.value, r.steps, r.plan_changes, r.fills,
                 r.corrections, r.slips, r.final_emotion.valence, r.final_emotion.frustration)
                for i, r in enumerate(results)
            ],
        )
