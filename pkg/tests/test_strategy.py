import pytest

from hogames.backtrack import level_report
from hogames.core import STAR, Arena, Polarity
from hogames.fixtures import DUEL_ENDING, DUEL_PREFIX, duel_arena, duel_strategies
from hogames.strategy import (
    FALLBACK_STEP_LIMIT,
    CorruptStrategyError,
    InnocentStrategy,
    Status,
    default_step_limit,
    format_view,
    interact,
    summarize,
    validate_strategy,
)
from hogames.trim import complexities
from hogames.views import is_visible

P, O = Polarity.P, Polarity.O


def tiny_arena():
    labels = {STAR: "O", "a": "P", "b": "O", "c": "P"}
    return Arena(labels, [(STAR, "a"), ("a", "b"), ("b", "c")], labels, {STAR}, name="tiny")


def opener(arena):
    return InnocentStrategy(arena, O, {(): (STAR, None), ((STAR, None), ("a", 0)): ("b", 1)})


def test_duel_strategies_are_well_formed():
    sigma, tau = duel_strategies()
    assert (sigma.bound, tau.bound) == (8, 7)
    assert validate_strategy(sigma) == [] and validate_strategy(tau) == []
    assert (sigma.level(), tau.level()) == (2, 1)


def test_full_sigma_view_has_complexity_eight():
    sigma, _ = duel_strategies()
    longest = max(sigma.view_plays(), key=len)
    assert len(longest) == 8
    assert complexities(longest)[-1] == 8


def test_duel_transcript():
    sigma, tau = duel_strategies()
    run = interact(sigma, tau)
    s = run.transcript
    assert run.status is Status.COMPLETE
    assert len(s) == 20
    assert tuple(zip(s.moves, s.pointers))[: len(DUEL_PREFIX)] == DUEL_PREFIX
    assert s.moves[-len(DUEL_ENDING):] == DUEL_ENDING
    assert is_visible(s)[0]
    r = level_report(s)
    assert r.player_levels[P] <= sigma.level() and r.player_levels[O] <= tau.level()


def test_duel_summary_and_step_limit():
    sigma, tau = duel_strategies()
    # 8 ** 8 is above the fallback, so the fallback applies
    assert default_step_limit(sigma, tau) == FALLBACK_STEP_LIMIT
    summ = summarize(interact(sigma, tau), depth=4)
    assert summ.maxmin_ok and summ.bound_ok
    assert summ.bound == 8**8 and summ.refined_bound == 16**16


def test_empty_player_strategy_stops_after_the_opening():
    a = tiny_arena()
    run = interact(InnocentStrategy(a, P, {}), InnocentStrategy(a, O, {(): (STAR, None)}))
    assert len(run.transcript) == 1 and run.status is Status.COMPLETE


def test_empty_opponent_strategy_gives_an_empty_match():
    a = tiny_arena()
    run = interact(InnocentStrategy(a, P, {}), InnocentStrategy(a, O, {}))
    assert len(run.transcript) == 0


def test_player_declining_a_known_branch_is_stuck():
    a = tiny_arena()
    # sigma knows what to do after b, but has no answer to the opening itself
    sigma = InnocentStrategy(a, P, {((STAR, None), ("a", 0), ("b", 1)): ("c", 2)}, bound=4)
    run = interact(sigma, opener(a))
    assert run.status is Status.STUCK_P and len(run.transcript) == 1


def test_step_limit_cuts_the_run():
    a = tiny_arena()
    sigma = InnocentStrategy(a, P, {((STAR, None),): ("a", 0), ((STAR, None), ("a", 0), ("b", 1)): ("c", 2)})
    run = interact(sigma, opener(a), step_limit=2)
    assert run.status is Status.STEP_LIMIT and len(run.transcript) == 2
    assert interact(sigma, opener(a)).transcript.moves == (STAR, "a", "b", "c")


def test_corrupt_answers_are_rejected():
    a = tiny_arena()
    wrong_owner = InnocentStrategy(a, P, {((STAR, None),): ("b", 0)})
    with pytest.raises(CorruptStrategyError):
        interact(wrong_owner, opener(a))
    outside = InnocentStrategy(a, P, {((STAR, None),): ("a", 5)})
    with pytest.raises(CorruptStrategyError):
        interact(outside, opener(a))


def test_interact_checks_owners_and_arenas():
    sigma, tau = duel_strategies()
    with pytest.raises(ValueError):
        interact(tau, sigma)
    with pytest.raises(ValueError):
        interact(InnocentStrategy(tiny_arena(), P, {}), tau)


def test_validation_reports_defects():
    a = tiny_arena()
    sigma = InnocentStrategy(
        a,
        P,
        {
            ((STAR, None), ("a", 0), ("b", 1)): ("c", 2),  # its stem answer is missing
            ((STAR, None),): ("b", 0),  # not enabled by *, and an O-move
        },
        bound=3,
    )
    kinds = {v.kind for v in validate_strategy(sigma)}
    assert {"bound", "invalid-play", "not-prefix-closed"} <= kinds


def test_two_answers_for_one_view_are_refused():
    a = tiny_arena()
    with pytest.raises(ValueError):
        InnocentStrategy(a, P, [(((STAR, None),), ("a", 0)), (((STAR, None),), ("c", 0))])


def test_format_view():
    assert format_view(()) == "<empty>"
    assert format_view(((STAR, None), ("a", 0))) == "*@- a@0"


def test_strategy_equality_and_length():
    sigma, _ = duel_strategies()
    again, _ = duel_strategies()
    assert sigma == again and len(sigma) == 400
    assert sigma.arena == duel_arena()
