import json

import pytest

from cascade_affect import (
    AgentState,
    EmotionParams,
    EpisodeConfig,
    GridStatus,
    Outcome,
    Puzzle,
    SplitMix64,
    from_top_row,
    generate_puzzle,
    make_repertoire,
    run_episode,
    set_cell,
    status,
    step,
    violated_constraints,
)
from cascade_affect.grid import BLANK

from .conftest import G

LAM, POS, IMP, SOLVE, PHI_IMP, PHI_CHANGE = 0.9, 0.2, 0.4, 0.5, 0.25, 0.3


def golden_hand_trace():
    """Scalar recomputation: impasse+change, three fills, solved."""
    v, f = 0.0, 0.0
    v, f = LAM * v - IMP, f + PHI_IMP
    v, f = LAM * v, f + PHI_CHANGE
    for _ in range(3):
        v = LAM * v + POS
    v = LAM * v + SOLVE
    return v, f


def replay(puzzle, trace):
    grid = puzzle.grid
    for e in trace:
        pos = e.move.target if e.move else None
        if e.action == "fill":
            grid = set_cell(grid, pos, e.move.value, e.t)
        elif e.action == "correct":
            grid = grid.replace(pos, BLANK)
    return grid


def test_step_on_solved_grid():
    cfg = EpisodeConfig(Puzzle(from_top_row([1, 2, 3])))
    _, event, outcome = step(AgentState.initial(cfg), cfg, SplitMix64(0))
    assert (event.appraisal, event.action, outcome) == ("solved", "stop_success", Outcome.SOLVED)


def test_step_impasse_changes_plan():
    cfg = EpisodeConfig(Puzzle(G([[4, None], [9]])))
    state, event, outcome = step(AgentState.initial(cfg), cfg, SplitMix64(0))
    assert outcome is None
    assert (event.t, event.plan, event.appraisal, event.action) == (0, "add_only", "impasse", "change_plan")
    # first update -0.4/0.25, then plan change decays valence and adds 0.3
    assert event.valence == pytest.approx(-0.36, abs=1e-12)
    assert event.frustration == pytest.approx(0.55, abs=1e-12)
    assert state.ctx.current_index == 1 and state.ctx.changes_used == 1


def test_step_progress_fill_without_slip():
    cfg = EpisodeConfig(Puzzle(G([[4, None], [9]])), repertoire=make_repertoire(["full"]))
    state, event, _ = step(AgentState.initial(cfg), cfg, SplitMix64(0))
    assert event.action == "fill" and not event.slipped
    assert (event.move.target, event.move.value) == ((0, 1), 5)
    assert state.grid.value((0, 1)) == 5
    assert state.fill_history == (((0, 1), 0),)


@pytest.mark.parametrize("seed", range(8))
def test_step_forced_slip(seed):
    cfg = EpisodeConfig(Puzzle(G([[4, None], [9]])), repertoire=make_repertoire(["full"]), p_slip=1.0)
    state, event, _ = step(AgentState.initial(cfg), cfg, SplitMix64(seed))
    assert event.slipped
    assert event.move.value in (4, 6)
    assert state.grid.value((0, 1)) == event.move.value


def test_slip_signs_both_occur():
    cfg = EpisodeConfig(Puzzle(G([[4, None], [9]])), repertoire=make_repertoire(["full"]), p_slip=1.0)
    values = {step(AgentState.initial(cfg), cfg, SplitMix64(s))[1].move.value for s in range(32)}
    assert values == {4, 6}


def test_golden_episode(golden_puzzle):
    result, trace = run_episode(EpisodeConfig(golden_puzzle), 0)
    v, f = golden_hand_trace()
    assert (result.outcome, result.steps, result.plan_changes, result.fills, result.corrections) == (
        Outcome.SOLVED, 5, 1, 3, 0,
    )
    assert result.final_emotion.valence == pytest.approx(v, abs=1e-9)
    assert result.final_emotion.valence == pytest.approx(0.751604, abs=1e-9)
    assert result.final_emotion.frustration == pytest.approx(f, abs=1e-9)
    assert [e.action for e in trace] == ["change_plan", "fill", "fill", "fill", "stop_success"]
    assert [e.t for e in trace] == list(range(5))


def test_fully_given_puzzle():
    result, trace = run_episode(EpisodeConfig(Puzzle(from_top_row([3, 1, 4]))), 9)
    assert (result.outcome, result.steps, result.fills) == (Outcome.SOLVED, 1, 0)


def test_all_blank_abandons(blank2_puzzle):
    result, trace = run_episode(EpisodeConfig(blank2_puzzle), 0)
    assert (result.outcome, result.steps, result.plan_changes) == (Outcome.ABANDONED, 3, 2)
    assert [e.frustration for e in trace] == pytest.approx([0.55, 1.0, 1.0])
    assert [e.action for e in trace] == ["change_plan", "change_plan", "abandon"]


def test_step_cap():
    # errors cost no frustration, so the slip/correct loop never abandons
    cfg = EpisodeConfig(
        Puzzle(G([[4, None], [9]])),
        repertoire=make_repertoire(["full"]),
        emotion_params=EmotionParams(phi_err=0.0),
        p_slip=1.0,
        step_cap=7,
    )
    result, trace = run_episode(cfg, 1)
    assert result.outcome is Outcome.STEP_CAP
    assert result.steps == len(trace) == 7


def test_trace_json_schema(golden_puzzle):
    _, trace = run_episode(EpisodeConfig(golden_puzzle), 0)
    first = json.loads(trace[0].to_json())
    assert list(first) == ["t", "plan", "appraisal", "move", "action", "valence", "frustration", "slipped"]
    assert first["move"] is None
    fill = json.loads(trace[1].to_json())
    assert fill["move"] == {"row": 0, "col": 1, "value": 2, "rule": "R2"}
    assert json.loads(trace[1].to_json(episode=3))["episode"] == 3
    # shortest round-trip decimals
    assert json.loads(trace[-1].to_json())["valence"] == trace[-1].valence


@pytest.mark.parametrize("p_slip", [0.0, 0.3, 1.0])
@pytest.mark.parametrize("require_subtraction", [False, True])
def test_episode_invariants(p_slip, require_subtraction):
    for seed in range(25):
        puzzle = generate_puzzle(4, 9, require_subtraction, SplitMix64(seed))
        cfg = EpisodeConfig(puzzle, p_slip=p_slip)
        result, trace = run_episode(cfg, seed)
        assert result.steps == len(trace) <= cfg.step_cap
        assert result.plan_changes <= cfg.max_changes
        assert result.corrections <= result.fills
        assert replay(puzzle, trace).values() == result.final_grid.values()
        for prev, nxt in zip(trace, trace[1:]):
            if prev.slipped:
                assert nxt.appraisal == "error"
        if result.outcome is Outcome.SOLVED:
            assert status(result.final_grid) is GridStatus.SOLVED
            assert violated_constraints(result.final_grid) == []
        if p_slip == 0.0:
            assert result.corrections == 0 and result.slips == 0
        assert run_episode(cfg, seed) == (result, trace)
