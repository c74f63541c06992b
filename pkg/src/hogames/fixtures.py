"""Worked examples shared by the tests and the ``demo`` command."""

from __future__ import annotations

from .core import STAR, Arena, Play, Polarity
from .expansion import ExpansionTree, expansion_to_strategy, prenex_arena
from .strategy import InnocentStrategy

# -- nine-move crossing example ---------------------------------------------

CROSSING_MOVES = ("b1", "c1", "b2", "c2", "b3", "c3", "b4", "c4", "b5")
CROSSING_POINTERS = (None, 0, 1, 0, 3, 2, 5, 4, 3)
# b are Opponent moves, c are Player moves; c_k is at index 2k - 1


def crossing_arena() -> Arena:
    enabling = [
        ("b1", "c1"), ("c1", "b2"), ("b1", "c2"), ("c2", "b3"),
        ("b2", "c3"), ("c3", "b4"), ("b3", "c4"), ("c2", "b5"),
        ("b2", "c4"),  # lets c4 point at b2 in the repointed variant
    ]
    labels = {STAR: "O"}
    labels.update({f"b{i}": "O" for i in range(1, 6)})
    labels.update({f"c{i}": "P" for i in range(1, 5)})
    return Arena(labels, enabling, labels, {STAR, "b1"}, name="crossing")


def crossing_play() -> Play:
    return Play(crossing_arena(), CROSSING_MOVES, CROSSING_POINTERS)


def crossing_play_repointed() -> Play:
    """The first eight moves with c4 pointing at b2 instead of b4."""
    ptrs = list(CROSSING_POINTERS[:8])
    ptrs[7] = 2
    return Play(crossing_arena(), CROSSING_MOVES[:8], tuple(ptrs))


# -- level above depth -----------------------------------------------------


def _ladder_moves_pointers(n: int = 5):
    """``* b1 c1 … b_{2n-1} c_{2n-1} b_{2n}``: the first ``n`` b's point to ``*``,
    every later b to the c that sits ``2(n - 1)`` moves before it, every c to its b."""
    moves = [STAR]
    ptrs: list[int | None] = [None]
    for i in range(1, 2 * n + 1):
        moves.append(f"b{i}")
        ptrs.append(0 if i <= n else 2 * (i - n))  # c_j sits at index 2j
        if i < 2 * n:
            moves.append(f"c{i}")
            ptrs.append(2 * i - 1)
    return moves, ptrs


def _shifted(moves, ptrs):
    """A fresh opening ``*`` in front; the old root becomes ``root``."""
    renamed = ["root" if m == STAR else m for m in moves]
    return [STAR] + renamed, [None, 0] + [p + 1 for p in ptrs[1:]]


def ladder_arena(n: int = 5, shifted: bool = False) -> Arena:
    moves, ptrs = _ladder_moves_pointers(n)
    if shifted:
        moves, ptrs = _shifted(moves, ptrs)
    enabling = {(moves[t], m) for m, t in zip(moves, ptrs) if t is not None}
    b_pol, c_pol = ("P", "O") if not shifted else ("O", "P")
    labels = {STAR: "O"}
    if shifted:
        labels["root"] = "P"
    labels.update({m: b_pol for m in moves if m.startswith("b")})
    labels.update({m: c_pol for m in moves if m.startswith("c")})
    return Arena(set(labels), enabling, labels, {STAR}, name="ladder" + ("-shifted" if shifted else ""))


def ladder_play(n: int = 5) -> Play:
    """Taken literally: ``*`` is Opponent's, so the b moves belong to Player.

    With ``n = 5`` the last move has level 6 in an arena of depth 5.
    """
    moves, ptrs = _ladder_moves_pointers(n)
    return Play(ladder_arena(n), moves, ptrs)


def ladder_play_shifted(n: int = 5) -> Play:
    """The same pointer pattern behind an extra opening move, so the b moves are Opponent's."""
    moves, ptrs = _shifted(*_ladder_moves_pointers(n))
    return Play(ladder_arena(n, shifted=True), moves, ptrs)


# -- the prenex duel -------------------------------------------------------

DUEL_VARIABLES = ("x", "y", "z")
DUEL_UNIVERSE = ("t1", "t2", "t3", "t4", "u1", "u2", "u3")


def duel_arena() -> Arena:
    return prenex_arena(DUEL_VARIABLES, DUEL_UNIVERSE, name="duel")


def player_tree() -> ExpansionTree:
    """Witnesses t1, t2, t3 for x, eigenvariables a1, a2, a3 for y, witness t4 for z under a1."""
    return ExpansionTree.build(
        DUEL_VARIABLES,
        Polarity.P,
        [("t1", None), ("a1", "t1"), ("t4", "a1"), ("t2", None), ("a2", "t2"), ("t3", None), ("a3", "t3")],
        ["t1", "a1", "t2", "a2", "t3", "a3", "t4"],
    )


def opponent_tree() -> ExpansionTree:
    """Eigenvariable b for x, witnesses u1, u2, u3 for y, eigenvariables b1, b2, b3 for z."""
    return ExpansionTree.build(
        DUEL_VARIABLES,
        Polarity.O,
        [("b", None), ("u1", "b"), ("b1", "u1"), ("u2", "b"), ("b2", "u2"), ("u3", "b"), ("b3", "u3")],
        ["b", "u1", "b1", "u2", "b2", "u3", "b3"],
    )


def duel_strategies() -> tuple[InnocentStrategy, InnocentStrategy]:
    arena = duel_arena()
    sigma = expansion_to_strategy(player_tree(), DUEL_UNIVERSE, arena, name="sigma")
    tau = expansion_to_strategy(opponent_tree(), DUEL_UNIVERSE, arena, name="tau")
    return sigma, tau


DUEL_PREFIX = (
    ("*", None),
    ("x:=t1", 0),
    ("y:=u1", 1),
    ("x:=t2", 0),
    ("y:=u1", 3),
    ("x:=t3", 0),
    ("y:=u1", 5),
    ("z:=t4", 2),
    ("y:=u2", 1),
    ("x:=t2", 0),
    ("y:=u1", 9),
    ("x:=t3", 0),
    ("y:=u1", 11),
    ("z:=t4", 8),
    ("y:=u3", 1),
)
DUEL_ENDING = ("x:=t2", "y:=u1", "x:=t3", "y:=u1", "z:=t4")
