"""Trimming, move complexity, the lexicographic order on complexity sequences,
and checks of the properties that tie them together."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .backtrack import move_levels
from .core import InvalidPlayError, Play, Polarity
from .views import prefix_views, require_visible


@dataclass(frozen=True)
class TrimSpec:
    """``μ = (level, player)``: cut the interior of edges from ``player``'s moves of this level."""

    level: int
    player: Polarity

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("trim level must be at least 1")
        object.__setattr__(self, "player", Polarity(self.player))


def survivors(s: Play, mu: TrimSpec, levels: Sequence[int] | None = None) -> list[int]:
    """Indices of ``s`` kept by trimming (levels are read in ``s`` itself)."""
    if levels is None:
        levels = move_levels(s)
    removed = bytearray(len(s))
    for i in range(1, len(s)):
        if levels[i] == mu.level and s.polarity(i) is mu.player:
            for l in range(s.target(i) + 1, i):
                removed[l] = 1
    return [i for i in range(len(s)) if not removed[i]]


def trim(s: Play, mu: TrimSpec) -> Play:
    require_visible(s)
    return s.subsequence(survivors(s, mu))


def complexities(s: Play) -> list[int]:
    """``χ(s, i)`` for every ``i``: length of the mover's view of ``s_0 … s_i``."""
    require_visible(s)
    pol = s.polarities
    has_p = Polarity.P in pol
    pv = prefix_views(s, Polarity.P) if has_p else None
    ov = prefix_views(s, Polarity.O)
    return [len(pv[i]) if pol[i] is Polarity.P else len(ov[i]) for i in range(len(s))]


def move_complexity(s: Play, i: int) -> int:
    return complexities(s.prefix(i))[i]


def trimmed_complexity(s: Play, mu: TrimSpec) -> tuple[int, ...]:
    chi = complexities(s)
    return tuple(chi[i] for i in survivors(s, mu))


def lex_less(x: Sequence[int], y: Sequence[int]) -> bool:
    """Strict order: ``x`` is a proper prefix of ``y`` or smaller at the first difference."""
    for a, b in zip(x, y):
        if a != b:
            return a < b
    return len(x) < len(y)


@dataclass(frozen=True)
class SpringResult:
    ok: bool
    first_failure: int | None = None  # i such that prefix i+1 is not above prefix i

    def __bool__(self) -> bool:
        return self.ok


def player_level(s: Play, p: Polarity, levels: Sequence[int] | None = None) -> int:
    if levels is None:
        levels = move_levels(s)
    return max((lv for i, lv in enumerate(levels) if s.polarity(i) is p), default=0)


def verify_spring(s: Play, mu: TrimSpec) -> SpringResult:
    """Check ``χ^μ(s_0…s_i) ≺ χ^μ(s_0…s_{i+1})`` for every consecutive pair of prefixes.

    Requires ``mu.player`` to have level exactly ``mu.level`` in ``s``.
    """
    require_visible(s)
    levels = move_levels(s)
    actual = player_level(s, mu.player, levels)
    if actual != mu.level:
        raise InvalidPlayError(
            f"player {mu.player} has level {actual} in the play, not {mu.level}"
        )
    chi = complexities(s)
    prev = None
    for i in range(len(s)):
        # move levels of a prefix coincide with those in s
        cur = tuple(chi[j] for j in survivors(s.prefix(i), mu, levels[: i + 1]))
        if prev is not None and not lex_less(prev, cur):
            return SpringResult(False, i - 1)
        prev = cur
    return SpringResult(True)


def answer_cost_violations(s: Play) -> list[tuple[int, int]]:
    """Edges ``(j, i)`` with ``i ≠ j + 1`` where ``χ(s, j+1) < χ(s, i)`` fails.

    Also checks the variant for an uncrossed earlier answer ``(j, l)``:
    ``χ(s, l) < χ(s, i)``.
    """
    from .backtrack import _Masks

    chi = complexities(s)
    masks = _Masks(s)
    bad = []
    for i in range(1, len(s)):
        j = s.target(i)
        if i == j + 1:
            continue
        if not chi[j + 1] < chi[i]:
            bad.append((j, i))
            continue
        for l in range(j + 1, i):
            # (j, l) is an edge crossed by nothing in s
            if s.pointers[l] == j and not masks.crossed_by[l] and not chi[l] < chi[i]:
                bad.append((j, i))
                break
    return bad
