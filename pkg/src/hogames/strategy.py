"""Innocent strategies as finite view trees, and the engine that plays two of them against each other."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from .backtrack import level_report, strategy_level
from .bounds import SymbolicTower, interaction_bound, within
from .core import Arena, InvalidPlayError, Play, Polarity, Violation
from .views import ViewTracker, view_of_prefix

ViewKey = tuple[tuple[str, "int | None"], ...]
Answer = tuple[str, "int | None"]

FALLBACK_STEP_LIMIT = 10**6


class CorruptStrategyError(InvalidPlayError):
    """A strategy answered with a move the rules of the arena forbid."""


class InnocentStrategy:
    """A deterministic strategy whose answer depends only on the owner's view.

    ``entries`` maps a view, written as ``(move, view-relative pointer)``
    pairs, to the answer ``(move, view-relative pointer)``. The empty view
    is the Opponent's opening.
    """

    def __init__(
        self,
        arena: Arena,
        owner: Polarity | str,
        entries: Mapping[ViewKey, Answer] | Iterable[tuple[ViewKey, Answer]],
        bound: int | None = None,
        name: str = "",
    ):
        self.arena = arena
        self.owner = Polarity(owner)
        items = entries.items() if isinstance(entries, Mapping) else entries
        table: dict[ViewKey, Answer] = {}
        for key, ans in items:
            key = tuple((m, p) for m, p in key)
            if key in table and table[key] != tuple(ans):
                raise ValueError(f"two answers for view {format_view(key)}")
            table[key] = (ans[0], ans[1])
        self.entries = table
        longest = max((len(k) + 1 for k in table), default=0)
        self.bound = longest if bound is None else bound
        self.name = name

    def answer(self, key: ViewKey) -> Answer | None:
        return self.entries.get(key)

    def has_extensions(self, key: ViewKey) -> bool:
        """True iff some stored view strictly extends ``key`` minus its last move."""
        if not key:
            return False
        stem = key[:-1]
        return any(len(k) >= len(key) and k[: len(stem)] == stem for k in self.entries)

    def view_plays(self) -> list[Play]:
        """Each stored view completed by its answer, as a play."""
        out = []
        # inside a view, view-relative pointers are ordinary play indices
        for key, ans in sorted(self.entries.items(), key=lambda kv: (len(kv[0]), repr(kv[0]))):
            out.append(Play.from_pairs(self.arena, list(key) + [ans]))
        return out

    def level(self) -> int:
        return strategy_level(self)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InnocentStrategy):
            return NotImplemented
        return (self.arena, self.owner, self.entries, self.bound) == (
            other.arena,
            other.owner,
            other.entries,
            other.bound,
        )

    def __repr__(self) -> str:
        return f"InnocentStrategy({self.owner}, {len(self.entries)} views, bound={self.bound})"


def format_view(key: ViewKey) -> str:
    return " ".join(f"{m}@{'-' if p is None else p}" for m, p in key) or "<empty>"


def validate_strategy(sigma: InnocentStrategy) -> list[Violation]:
    """Check that every stored view plus answer is one of the owner's own views,
    that the tree is closed under the owner's earlier answers, and that the bound holds."""
    from .views import is_visible

    out: list[Violation] = []
    owner = sigma.owner
    for key, (m, p) in sigma.entries.items():
        where = format_view(key)
        if len(key) + 1 > sigma.bound:
            out.append(Violation("bound", detail=f"view {where} has length {len(key) + 1} > {sigma.bound}"))
        pairs = list(key) + [(m, p)]
        s = Play.from_pairs(sigma.arena, pairs)
        if s.violations:
            out.append(Violation("invalid-play", detail=f"{where} => {m}: {s.violations[0]}"))
            continue
        if s.polarity(len(s) - 1) is not owner:
            out.append(Violation("wrong-mover", detail=f"{where} => {m} is not a {owner}-move"))
            continue
        ok, bad = is_visible(s)
        if not ok:
            out.append(Violation("not-visible", bad, where))
            continue
        if view_of_prefix(s, len(s) - 1, owner) != tuple(range(len(s))):
            out.append(Violation("not-a-view", detail=where))
        # the owner's own earlier move in this view must be its stored answer
        if len(key) >= 2:
            stem, prev = key[:-2], key[-2]
            if sigma.entries.get(stem) != prev:
                out.append(Violation("not-prefix-closed", detail=where))
    return out


class Status(str, Enum):
    COMPLETE = "COMPLETE"
    STEP_LIMIT = "STEP_LIMIT"
    STUCK_P = "STUCK_P"
    STUCK_O = "STUCK_O"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Interaction:
    sigma: InnocentStrategy = field(repr=False)
    tau: InnocentStrategy = field(repr=False)
    transcript: Play
    status: Status
    step_limit: int

    def __len__(self) -> int:
        return len(self.transcript)


def default_step_limit(sigma: InnocentStrategy, tau: InnocentStrategy) -> int:
    """Room for one move past the bound, so an overlong run is observable; else a fixed fallback.

    The bound caps the last index, so a run within it has at most ``bound + 1`` moves.
    """
    k = max(sigma.bound, tau.bound, 1)
    b = interaction_bound(sigma.level(), tau.level(), k)
    if isinstance(b, SymbolicTower) or b >= FALLBACK_STEP_LIMIT:
        return FALLBACK_STEP_LIMIT
    return b + 2


def _relative(s_moves, s_ptrs, indices) -> ViewKey:
    pos = {old: new for new, old in enumerate(indices)}
    return tuple(
        (s_moves[i], None if n == 0 or s_ptrs[i] is None else pos[s_ptrs[i]]) for n, i in enumerate(indices)
    )


def interact(sigma: InnocentStrategy, tau: InnocentStrategy, step_limit: int | None = None) -> Interaction:
    """Play ``sigma`` (Player) against ``tau`` (Opponent) until one declines or the limit is hit."""
    if sigma.owner is not Polarity.P or tau.owner is not Polarity.O:
        raise ValueError("interact takes a Player strategy and an Opponent strategy, in that order")
    if sigma.arena != tau.arena:
        raise ValueError("the two strategies live on different arenas")
    arena = sigma.arena
    if step_limit is None:
        step_limit = default_step_limit(sigma, tau)
    moves: list[str] = []
    ptrs: list[int | None] = []
    tracker = ViewTracker()
    status = Status.COMPLETE
    while True:
        n = len(moves)
        if n >= step_limit:
            status = Status.STEP_LIMIT
            break
        mover = Polarity.O if n == 0 else arena.labels[moves[-1]].other
        strat = sigma if mover is Polarity.P else tau
        idx = tracker.current(mover)
        key = _relative(moves, ptrs, idx)
        ans = strat.answer(key)
        if ans is None:
            if strat.has_extensions(key):
                status = Status.STUCK_P if mover is Polarity.P else Status.STUCK_O
            break
        m, rel = ans
        where = format_view(key)
        if m not in arena.moves or arena.labels[m] is not mover:
            raise CorruptStrategyError(f"{mover}-strategy answers view {where} with {m}, not a {mover}-move")
        if n == 0:
            if rel is not None or m not in arena.initials:
                raise CorruptStrategyError(f"opening {m} must be an initial move without pointer")
            t = None
        else:
            if rel is None or not 0 <= rel < len(idx):
                raise CorruptStrategyError(f"answer {m}@{rel} to view {where} points outside the view")
            t = idx[rel]
            if not arena.enables(moves[t], m):
                raise CorruptStrategyError(f"answer to view {where}: {moves[t]} does not justify {m}")
        moves.append(m)
        ptrs.append(t)
        tracker.push(mover, t)
    return Interaction(sigma, tau, Play(arena, tuple(moves), tuple(ptrs)), status, step_limit)


@dataclass(frozen=True)
class InteractionSummary:
    length: int
    status: Status
    sigma_level: int
    tau_level: int
    p_level: int
    o_level: int
    k: int
    bound: int | SymbolicTower
    refined_bound: int | SymbolicTower | None

    @property
    def maxmin_ok(self) -> bool:
        return self.p_level <= self.sigma_level and self.o_level <= self.tau_level

    @property
    def bound_ok(self) -> bool:
        return within(self.length, self.bound)


def summarize(run: Interaction, depth: int | float | None = None) -> InteractionSummary:
    from .core import INFINITE

    n, m = run.sigma.level(), run.tau.level()
    k = max(run.sigma.bound, run.tau.bound, 1)
    rep = level_report(run.transcript) if len(run.transcript) else None
    refined = None
    if depth is not None and depth != INFINITE and depth >= 2:
        refined = interaction_bound(n, m, k, depth)
    return InteractionSummary(
        len(run.transcript),
        run.status,
        n,
        m,
        rep.player_levels[Polarity.P] if rep else 0,
        rep.player_levels[Polarity.O] if rep else 0,
        k,
        interaction_bound(n, m, k),
        refined,
    )
