"""``cascade-affect`` command line.

Exit codes: 0 success, 1 I/O error, 2 config error, 3 domain failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .agent import run_episode
from .batch import episode_seed, run_batch, write_outputs
from .config import dump_puzzle, load_puzzle, parse_config
from .errors import ConfigError, GenerationError, UnsatisfiablePuzzleError
from .grid import GridStatus, status
from .plans import ALL_RULES, closure
from .puzzle import generate_puzzle
from .rng import SplitMix64

EXIT_IO, EXIT_CONFIG, EXIT_DOMAIN = 1, 2, 3


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def cmd_generate(args) -> int:
    try:
        puzzle = generate_puzzle(args.rows, args.vmax, args.require_subtraction, SplitMix64(args.seed))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    dump_puzzle(puzzle, args.out)
    print(puzzle.grid)
    return 0


def cmd_solve(args) -> int:
    puzzle = load_puzzle(args.puzzle)
    solved = closure(puzzle.grid, ALL_RULES)
    if status(solved) is not GridStatus.SOLVED:
        print("UNDETERMINED")
        return EXIT_DOMAIN
    print(solved)
    return 0


def cmd_run(args) -> int:
    config = parse_config(args.config)
    if args.puzzle is not None:
        puzzle = load_puzzle(args.puzzle)
    elif config.puzzle is not None:
        puzzle = config.puzzle
    else:
        g = config.generate
        puzzle = generate_puzzle(g.rows, g.vmax, g.require_subtraction, SplitMix64(args.seed))
    result, trace = run_episode(config.episode_config(puzzle), args.seed)
    Path(args.trace).write_text("".join(e.to_json() + "\n" for e in trace), encoding="utf-8")
    e = result.final_emotion
    print(
        f"outcome={result.outcome.value} steps={result.steps} plan_changes={result.plan_changes} "
        f"fills={result.fills} corrections={result.corrections} slips={result.slips} "
        f"valence={e.valence!r} frustration={e.frustration!r}"
    )
    return 0


def cmd_batch(args) -> int:
    config = parse_config(args.config)
    summary, results, traces = run_batch(config, args.jobs)
    seeds = [episode_seed(config.master_seed, i) for i in range(config.episodes)]
    write_outputs(
        summary, results, traces,
        summary_path=args.out,
        traces_path=args.traces,
        trajectories_path=args.trajectories,
        episodes_path=args.episodes,
        split_traces=args.split_traces,
        seeds=seeds,
    )
    print(
        f"episodes={summary.episodes} solve_rate={summary.solve_rate!r} "
        f"abandon_rate={summary.abandon_rate!r} stepcap_rate={summary.stepcap_rate!r}"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cascade-affect",
        description="Appraisal-coping agent simulations on cascade sum puzzles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a closure-solvable puzzle")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--vmax", type=int, default=9)
    p.add_argument("--require-subtraction", action="store_true")
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("solve", help="complete a puzzle with local rules")
    p.add_argument("puzzle")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("run", help="run one episode and write its trace")
    p.add_argument("--config", required=True)
    p.add_argument("--puzzle")
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--trace", required=True)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("batch", help="run a seeded batch of episodes")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True, help="summary CSV")
    p.add_argument("--traces", required=True, help="JSONL traces")
    p.add_argument("--trajectories", required=True, help="per-step trajectory CSV")
    p.add_argument("--episodes", help="optional per-episode CSV")
    p.add_argument("--split-traces", action="store_true",
                   help="one JSONL file per episode instead of one tagged file")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (GenerationError, UnsatisfiablePuzzleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
