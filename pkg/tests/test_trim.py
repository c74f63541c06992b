import pytest
from hypothesis import given

from conftest import visible_plays
from hogames.backtrack import level_report, move_levels
from hogames.core import STAR, Arena, InvalidPlayError, NotVisibleError, Play, Polarity
from hogames.fixtures import crossing_play, duel_strategies
from hogames.strategy import interact
from hogames.trim import (
    TrimSpec,
    answer_cost_violations,
    complexities,
    lex_less,
    move_complexity,
    player_level,
    survivors,
    trim,
    trimmed_complexity,
    verify_spring,
)
from hogames.views import is_visible

P, O = Polarity.P, Polarity.O


def test_trim_spec_rejects_level_zero():
    with pytest.raises(ValueError):
        TrimSpec(0, P)
    assert TrimSpec(2, "O").player is O


def test_unmatched_spec_is_identity():
    s = crossing_play()
    assert trim(s, TrimSpec(5, P)) == s


def test_crossing_prefix_trim_by_hand():
    # the edge from c4 (index 7) runs 4 -> 7, so indices 5 and 6 go
    s = crossing_play().prefix(7)
    mu = TrimSpec(3, P)
    assert survivors(s, mu) == [0, 1, 2, 3, 4, 7]
    t = trim(s, mu)
    assert t.moves == ("b1", "c1", "b2", "c2", "b3", "c4")
    assert t.pointers == (None, 0, 1, 0, 3, 4)


def test_complexities_of_crossing_play():
    # P-moves count P-view length, O-moves O-view length
    assert complexities(crossing_play()) == [1, 2, 3, 4, 3, 6, 5, 8, 5]
    assert move_complexity(crossing_play(), 0) == 1


def test_trimmed_complexity_is_measured_in_the_original_play():
    s = crossing_play().prefix(7)
    assert trimmed_complexity(s, TrimSpec(3, P)) == (1, 2, 3, 4, 3, 8)


def test_immediate_play_complexity_counts_every_move():
    labels = {STAR: "O", "a": "P", "b": "O", "c": "P"}
    a = Arena(labels, [(STAR, "a"), ("a", "b"), ("b", "c")], labels, {STAR})
    assert complexities(Play(a, [STAR, "a", "b", "c"], [None, 0, 1, 2])) == [1, 2, 3, 4]


def test_lex_order_cases():
    assert lex_less((1, 2), (1, 2, 3))
    assert lex_less((1, 2, 5), (1, 3))
    assert not lex_less((1, 2), (1, 2))
    assert not lex_less((1, 3), (1, 2, 5))


def test_trim_needs_a_visible_play():
    labels = {STAR: "O", "a": "P", "b": "O"}
    a = Arena(labels, [(STAR, "a"), ("a", "b")], labels, {STAR})
    s = Play(a, [STAR, "a", "b", "a", "b"], [None, 0, 1, 0, 1])
    with pytest.raises(NotVisibleError):
        trim(s, TrimSpec(1, P))


def test_spring_on_crossing_play():
    assert verify_spring(crossing_play(), TrimSpec(3, P))
    assert verify_spring(crossing_play(), TrimSpec(1, O))


def test_spring_precondition_is_enforced():
    with pytest.raises(InvalidPlayError):
        verify_spring(crossing_play(), TrimSpec(2, P))


def test_spring_on_the_duel_transcript():
    sigma, tau = duel_strategies()
    s = interact(sigma, tau).transcript
    r = level_report(s)
    assert verify_spring(s, TrimSpec(r.real_level, r.principal))


def test_trim_prefix_ending_at_a_trimmed_move():
    # trimming the prefix that ends at c4 equals trimming up to its justifier b3 then adding c4
    s = crossing_play().prefix(7)
    mu = TrimSpec(3, P)
    whole = trim(s, mu)
    head = trim(s.prefix(4), mu)
    assert whole.moves == head.moves + ("c4",)


def test_answer_cost_holds_on_crossing_play():
    assert answer_cost_violations(crossing_play()) == []


@given(visible_plays())
def test_trim_is_visible_and_lowers_the_level(s):
    levels = move_levels(s)
    for p in (P, O):
        n = player_level(s, p, levels)
        if n == 0:
            continue
        t = trim(s, TrimSpec(n, p))
        assert is_visible(t)[0]
        assert player_level(t, p) <= n - 1


@given(visible_plays())
def test_spring_property_holds(s):
    levels = move_levels(s)
    for p in (P, O):
        n = player_level(s, p, levels)
        if n:
            assert verify_spring(s, TrimSpec(n, p))


@given(visible_plays())
def test_answer_cost_holds(s):
    assert answer_cost_violations(s) == []
