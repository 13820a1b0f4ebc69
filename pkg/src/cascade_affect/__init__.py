"""Appraisal-coping agent simulations on cascade sum puzzles."""

from .agent import (
    AgentState,
    EpisodeConfig,
    EpisodeResult,
    Outcome,
    TraceEvent,
    run_episode,
    step,
)
from .appraisal import Appraisal, AppraisalKind, appraise
from .batch import BatchSummary, run_batch, write_outputs
from .config import SimConfig, load_puzzle, parse_config
from .coping import CopingParams, PlanContext, decide
from .emotion import EmotionEvent, EmotionParams, EmotionState, update
from .errors import (
    CascadeError,
    CellError,
    ConfigError,
    GenerationError,
    UnsatisfiablePuzzleError,
)
from .grid import (
    BLANK,
    CellPos,
    Filled,
    Given,
    Grid,
    GridStatus,
    clear_cell,
    from_top_row,
    set_cell,
    status,
    violated_constraints,
)
from .plans import (
    Move,
    Plan,
    Repertoire,
    Rule,
    applicable_moves,
    builtin_plans,
    closure,
    make_repertoire,
    next_plan,
)
from .puzzle import Puzzle, brute_force_completions, generate_puzzle
from .rng import SplitMix64, splitmix64

__version__ = "0.1.0"
