import pytest
from hypothesis import given, strategies as st

from cascade_affect import (
    Appraisal,
    AppraisalKind,
    CellPos,
    CopingParams,
    EmotionState,
    Move,
    PlanContext,
    Rule,
    UnsatisfiablePuzzleError,
    decide,
    make_repertoire,
)
from cascade_affect.coping import Abandon, ChangePlan, CorrectCell, FillCell, StopSuccess

REP = make_repertoire(["add_only", "full"])
CTX = PlanContext(REP)
P = CopingParams()
MOVE = Move(CellPos(0, 1), 5, Rule.R3, CellPos(1, 0))

SOLVED = Appraisal(AppraisalKind.SOLVED)
PROGRESS = Appraisal(AppraisalKind.PROGRESS, move=MOVE)
IMPASSE = Appraisal(AppraisalKind.IMPASSE)
ERROR = Appraisal(AppraisalKind.ERROR, cells=(CellPos(1, 0),))


def feel(f):
    return EmotionState(0.0, f)


def test_solved_stops_even_when_frustrated():
    assert decide(SOLVED, feel(1.0), CTX, P, ()) == StopSuccess()


def test_progress_fills():
    assert decide(PROGRESS, feel(0.4), CTX, P, ()) == FillCell(MOVE)


def test_impasse_changes_plan():
    assert decide(IMPASSE, feel(0.55), CTX, P, ()) == ChangePlan(1)
    assert decide(IMPASSE, feel(0.0), PlanContext(REP, 1, 1), P, ()) == ChangePlan(0)


def test_impasse_abandons_when_frustrated_or_out_of_options():
    assert decide(IMPASSE, feel(1.0), CTX, P, ()) == Abandon()
    assert decide(IMPASSE, feel(0.0), PlanContext(REP, 0, 3), P, ()) == Abandon()
    lone = PlanContext(make_repertoire(["full"]))
    assert decide(IMPASSE, feel(0.0), lone, P, ()) == Abandon()


def test_error_corrects_latest_culprit():
    history = ((CellPos(0, 0), 0), (CellPos(0, 1), 1))
    assert decide(ERROR, feel(0.1), CTX, P, history) == CorrectCell(CellPos(0, 1))
    # cells outside the violated triple are ignored even if more recent
    history = ((CellPos(0, 1), 0), (CellPos(2, 0), 5))
    assert decide(ERROR, feel(0.1), CTX, P, history) == CorrectCell(CellPos(0, 1))


def test_error_with_only_given_cells_is_unsatisfiable():
    with pytest.raises(UnsatisfiablePuzzleError):
        decide(ERROR, feel(0.0), CTX, P, ((CellPos(2, 2), 0),))


def test_params_range():
    with pytest.raises(ValueError):
        CopingParams(0.0)
    with pytest.raises(ValueError):
        CopingParams(1.5)


def test_action_names():
    names = [FillCell(MOVE), CorrectCell(CellPos(0, 0)), ChangePlan(0), Abandon(), StopSuccess()]
    assert [a.name for a in names] == ["fill", "correct", "change_plan", "abandon", "stop_success"]


@given(
    st.sampled_from([PROGRESS, IMPASSE, ERROR]),
    st.floats(0, 1),
    st.floats(0, 1),
    st.floats(0.01, 1),
)
def test_threshold_monotone(appraisal, f, g, theta):
    params = CopingParams(theta)
    hist = ((CellPos(0, 1), 0),)
    lo, hi = sorted((f, g))
    if decide(appraisal, feel(lo), CTX, params, hist) == Abandon() and lo >= theta:
        assert decide(appraisal, feel(hi), CTX, params, hist) == Abandon()
    if hi < theta and appraisal is not IMPASSE:
        assert decide(appraisal, feel(hi), CTX, params, hist) != Abandon()
