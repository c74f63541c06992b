"""Which edges cross or inactivate each other, and the backtracking level of each move.

An edge is named by its later endpoint ``i`` (the edge from ``s_i``).
The fast path keeps per-edge sets as Python int bitmasks; the ``brute_*``
functions evaluate the definitions literally and serve as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import Play, Polarity


def crosses(s: Play, e1: int, e2: int) -> bool:
    """True iff the edge from ``s_e2`` crosses the edge from ``s_e1``."""
    m2, n2 = s.pointers[e1], e1
    m1, n1 = s.pointers[e2], e2
    if m1 is None or m2 is None:
        return False
    return m2 < m1 < n2 < n1


class _Masks:
    """Crossing structure of a play, computed once."""

    def __init__(self, s: Play):
        n = len(s)
        f = s.pointers
        crossed_by = [0] * n  # bit j set: edge j crosses edge i
        crosses_into = [0] * n  # bit j set: edge i crosses edge j
        for i in range(1, n):
            fi = f[i]
            for j in range(i + 1, n):
                if fi < f[j] < i:
                    crossed_by[i] |= 1 << j
                    crosses_into[j] |= 1 << i
        self.n = n
        self.crossed_by = crossed_by
        self.crosses_into = crosses_into

    def active(self, prefix_end: int) -> int:
        """Bitmask of active edges in ``s_0 ... s_prefix_end``."""
        if prefix_end < 1:
            return 0
        act = 1 << prefix_end
        crossed_by = self.crossed_by
        for i in range(prefix_end - 1, 0, -1):
            if not crossed_by[i] & act:
                act |= 1 << i
        return act


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class ActivityTable:
    play: Play
    prefix_end: int
    verdicts: dict[int, bool]

    def is_active(self, edge: int) -> bool:
        return self.verdicts[edge]

    def active_edges(self) -> list[int]:
        return [e for e, a in sorted(self.verdicts.items()) if a]

    def inactive_edges(self) -> list[int]:
        return [e for e, a in sorted(self.verdicts.items()) if not a]


def activity(s: Play, prefix_end: int | None = None) -> ActivityTable:
    if prefix_end is None:
        prefix_end = len(s) - 1
    if not 0 <= prefix_end < len(s):
        raise IndexError(f"prefix_end {prefix_end} outside play of length {len(s)}")
    act = _Masks(s).active(prefix_end)
    return ActivityTable(s, prefix_end, {i: bool(act >> i & 1) for i in range(1, prefix_end + 1)})


def inactivates(s: Play, ej: int, ei: int) -> bool:
    """``efrom(s_ej) ⊳ efrom(s_ei)`` in ``s``."""
    if not crosses(s, ej, ei):
        return False
    return activity(s, ei - 1).is_active(ej)


def inactivators(s: Play) -> list[int]:
    """For each edge ``i``, the bitmask of edges ``j`` with ``e_j ⊳ e_i``."""
    masks = _Masks(s)
    out = [0] * len(s)
    for i in range(2, len(s)):
        cand = masks.crosses_into[i]
        if cand:
            out[i] = cand & masks.active(i - 1)
    return out


def move_levels(s: Play) -> list[int]:
    preds = inactivators(s)
    chain = [0] * len(s)  # longest ⊳-chain of edges strictly before edge i
    levels = [0] * len(s)
    for i in range(1, len(s)):
        best = 0
        for j in _bits(preds[i]):
            best = max(best, chain[j] + 1)
        chain[i] = best
        levels[i] = 0 if s.is_immediate(i) else best + 1
    return levels


def move_level(s: Play, i: int) -> int:
    if not 0 <= i < len(s):
        raise IndexError(i)
    # levels of s_0 ... s_i depend only on that prefix
    return move_levels(s.prefix(i))[i]


@dataclass(frozen=True)
class LevelReport:
    levels: tuple[int, ...]
    play_level: int
    player_levels: dict[Polarity, int]
    real_level: int
    principal: Polarity

    def summary(self) -> str:
        return (
            f"levels: {' '.join(map(str, self.levels))}; play level {self.play_level}; "
            f"P level {self.player_levels[Polarity.P]}; O level {self.player_levels[Polarity.O]}; "
            f"real level {self.real_level}; principal {self.principal}"
        )


def level_report(s: Play, levels: list[int] | None = None) -> LevelReport:
    if levels is None:
        levels = move_levels(s)
    per = {Polarity.P: 0, Polarity.O: 0}
    for i, lv in enumerate(levels):
        p = s.polarity(i)
        per[p] = max(per[p], lv)
    n, m = per[Polarity.P], per[Polarity.O]
    # ties go to Player: "if min(n, m) = n then Player is principal"
    principal = Polarity.P if n <= m else Polarity.O
    return LevelReport(tuple(levels), max(levels, default=0), per, min(n, m), principal)


def strategy_level(strategy) -> int:
    """Maximum play level over the views stored in ``strategy`` (each completed by its answer)."""
    return max((level_report(v).play_level for v in strategy.view_plays()), default=0)


# -- literal oracle -------------------------------------------------------


def brute_activity(s: Play, prefix_end: int) -> dict[int, bool]:
    """Backward induction exactly as defined, recomputed from scratch for this prefix."""

    @lru_cache(maxsize=None)
    def active(i: int) -> bool:
        if i == prefix_end:
            return True
        for j in range(i + 1, prefix_end + 1):
            if crosses(s, i, j) and active(j):
                return False
        return True

    for i in range(prefix_end, 0, -1):
        active(i)
    return {i: active(i) for i in range(1, prefix_end + 1)}


def brute_inactivation_pairs(s: Play) -> set[tuple[int, int]]:
    pairs = set()
    for i in range(1, len(s)):
        table = brute_activity(s, i - 1) if i > 1 else {}
        for j in range(1, i):
            if crosses(s, j, i) and table.get(j, False):
                pairs.add((j, i))
    return pairs


def brute_move_levels(s: Play) -> list[int]:
    """Levels by growing chains one link at a time until no chain extends."""
    pairs = brute_inactivation_pairs(s)
    longest = {i: 0 for i in range(1, len(s))}
    frontier = set(longest)
    k = 0
    while frontier:
        k += 1
        frontier = {i for (j, i) in pairs if j in frontier}
        for i in frontier:
            longest[i] = k
    return [0 if s.is_immediate(i) else longest[i] + 1 for i in range(len(s))]
