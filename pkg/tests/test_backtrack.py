from hypothesis import given

from conftest import visible_plays
from hogames.backtrack import (
    activity,
    brute_activity,
    brute_inactivation_pairs,
    brute_move_levels,
    crosses,
    inactivates,
    inactivators,
    level_report,
    move_level,
    move_levels,
)
from hogames.core import STAR, Arena, Play, Polarity
from hogames.fixtures import crossing_play, crossing_play_repointed, ladder_play, ladder_play_shifted
from oracles import literal_active, literal_levels


def test_crossing_relation():
    s = crossing_play()
    # edge (2, 5) is crossed by (4, 7): 2 < 4 < 5 < 7
    assert crosses(s, 5, 7)
    assert not crosses(s, 7, 5)
    # (0, 3) and (3, 8) share an endpoint, so they do not cross
    assert not crosses(s, 3, 8)


def test_crossing_play_levels():
    assert move_levels(crossing_play()) == [0, 0, 0, 1, 0, 2, 0, 3, 1]


def test_repointed_play_lowers_the_last_p_move():
    assert move_level(crossing_play_repointed(), 7) == 1


def test_crossing_play_activity_in_the_whole_play():
    t = activity(crossing_play())
    assert t.inactive_edges() == [5]
    assert t.active_edges() == [1, 2, 3, 4, 6, 7, 8]
    assert t.is_active(3) and not t.is_active(5)


def test_crossing_play_inactivation_pairs():
    s = crossing_play()
    assert inactivates(s, 5, 7)
    assert not inactivates(s, 5, 8)


def test_crossing_play_report():
    r = level_report(crossing_play())
    assert (r.play_level, r.player_levels[Polarity.P], r.player_levels[Polarity.O]) == (3, 3, 1)
    assert (r.real_level, r.principal) == (1, Polarity.O)
    assert r.summary().startswith("levels: 0 0 0 1 0 2 0 3 1; play level 3")


def test_ladder_reaches_level_six():
    s = ladder_play()
    assert move_level(s, len(s) - 1) == 6
    assert level_report(s).player_levels[Polarity.P] == 6
    assert level_report(ladder_play_shifted()).player_levels[Polarity.O] == 6


def test_immediate_answers_have_level_zero():
    labels = {STAR: "O", "a": "P", "b": "O"}
    a = Arena(labels, [(STAR, "a"), ("a", "b")], labels, {STAR})
    s = Play(a, [STAR, "a", "b"], [None, 0, 1])
    r = level_report(s)
    assert r.levels == (0, 0, 0) and r.real_level == 0


def test_ties_make_player_principal():
    labels = {STAR: "O", "a": "P"}
    a = Arena(labels, [(STAR, "a")], labels, {STAR})
    r = level_report(Play(a, [STAR, "a"], [None, 0]))
    assert r.principal is Polarity.P


def test_activity_of_prefix_zero_is_empty():
    assert activity(crossing_play(), 0).verdicts == {}


@given(visible_plays(max_length=24))
def test_fast_activity_matches_literal_definition(s):
    ptrs = list(s.pointers)
    for e in range(len(s)):
        assert activity(s, e).verdicts == literal_active(ptrs, e)
        assert brute_activity(s, e) == literal_active(ptrs, e)


@given(visible_plays(max_length=24))
def test_fast_levels_match_literal_chains(s):
    want = literal_levels(list(s.pointers))
    assert move_levels(s) == want
    assert brute_move_levels(s) == want


@given(visible_plays(max_length=24))
def test_inactivator_masks_match_pairs(s):
    got = {(j, i) for i, m in enumerate(inactivators(s)) for j in range(i) if m >> j & 1}
    assert got == brute_inactivation_pairs(s)


@given(visible_plays())
def test_levels_of_a_prefix_agree_with_the_whole_play(s):
    full = move_levels(s)
    for i in range(len(s)):
        assert move_levels(s.prefix(i)) == full[: i + 1]


@given(visible_plays())
def test_inactivation_links_share_polarity(s):
    for i, mask in enumerate(inactivators(s)):
        for j in range(i):
            if mask >> j & 1:
                assert s.polarity(j) is s.polarity(i)
