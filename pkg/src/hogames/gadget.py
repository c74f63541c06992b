"""The off/on inactivation gadget: inserting ``off on`` after every P-move so that
Opponent's backtracking edges are switched off as soon as they are answered."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .backtrack import inactivators, level_report
from .core import (
    INFINITE,
    Arena,
    InfiniteDepthError,
    InvalidPlayError,
    Play,
    Polarity,
    arena_depth,
)
from .views import prefix_views, require_visible

ON, OFF = "on", "off"
RESERVED_PREFIX = "__gadget_"

Origin = Union[int, tuple[str, int]]


@dataclass(frozen=True)
class EnlargedArena:
    base: Arena
    arena: Arena
    on: str
    off: str
    renamed: bool  # True when the plain names collided with base moves


def enlarge_arena(a: Arena) -> EnlargedArena:
    on, off = ON, OFF
    renamed = on in a.moves or off in a.moves
    if renamed:
        on, off = RESERVED_PREFIX + ON, RESERVED_PREFIX + OFF
        if on in a.moves or off in a.moves:
            raise ValueError("arena already uses the reserved gadget move names")
    enabling = set(a.enabling)
    for m in a.moves:
        if a.labels.get(m) is Polarity.O:
            enabling.add((m, on))
        elif a.labels.get(m) is Polarity.P:
            enabling.add((m, off))
    enabling.add((on, off))
    enabling.add((off, on))
    labels = dict(a.labels)
    labels[on] = Polarity.P
    labels[off] = Polarity.O
    big = Arena(a.moves | {on, off}, enabling, labels, a.initials, name=a.name + "+")
    return EnlargedArena(a, big, on, off, renamed)


@dataclass(frozen=True)
class GadgetPlay:
    """``play`` over the enlarged arena; ``origin[g]`` is the base index of
    position ``g`` or ``("off", j)`` / ``("on", i)`` using the gadget ordinals
    (``off`` after the j-th P-move, ``on`` before the i-th O-move)."""

    play: Play
    origin: tuple[Origin, ...]
    base: Play
    enlarged: EnlargedArena

    @property
    def positions(self) -> list[int]:
        """Gadget position of each base index."""
        out = [0] * len(self.base)
        for g, o in enumerate(self.origin):
            if isinstance(o, int):
                out[o] = g
        return out


def _require_o_start(s: Play) -> None:
    if len(s) == 0 or s.polarity(0) is not Polarity.O:
        raise InvalidPlayError("the gadget needs a play that starts with an O-move")


def apply_gadget(s: Play) -> GadgetPlay:
    require_visible(s)
    _require_o_start(s)
    big = enlarge_arena(s.arena)
    moves: list[str] = []
    ptrs: list[int | None] = []
    origin: list[Origin] = []
    pos: list[int] = []
    on_before: dict[int, int] = {}  # base O-move index -> gadget position of preceding on
    for b, (m, t) in enumerate(s):
        if b > 0 and s.polarity(b - 1) is Polarity.P:
            p = pos[b - 1]
            j = s.target(b - 1)
            # off after a P-move answers the on just before that move's justifier;
            # when the justifier is the opening move there is no such on and off
            # points back at the P-move itself (this is also the first off's rule)
            moves.append(big.off)
            ptrs.append(on_before.get(j, p))
            origin.append((OFF, (b - 1) // 2))
            moves.append(big.on)
            ptrs.append(len(moves) - 2)
            origin.append((ON, b // 2))
            on_before[b] = len(moves) - 1
        pos.append(len(moves))
        moves.append(m)
        ptrs.append(None if t is None else pos[t])
        origin.append(b)
    return GadgetPlay(Play(big.arena, tuple(moves), tuple(ptrs)), tuple(origin), s, big)


def strip_gadget(g: GadgetPlay) -> Play:
    keep = [i for i, o in enumerate(g.origin) if isinstance(o, int)]
    return g.play.subsequence(keep).with_arena(g.base.arena)


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_gadget_views(s: Play) -> CheckResult:
    """Compare every view of the gadget play against its description in terms of base views."""
    require_visible(s)
    _require_o_start(s)
    g = apply_gadget(s)
    G = g.play
    pos = g.positions
    base_o = prefix_views(s, Polarity.O)
    base_p = prefix_views(s, Polarity.P) if len(s) > 1 else []
    gad_o = prefix_views(G, Polarity.O)
    gad_p = prefix_views(G, Polarity.P) if len(G) > 1 else []

    def interleaved(view: tuple[int, ...]) -> list[int]:
        out: list[int] = []
        for v in view:
            if s.polarity(v) is Polarity.O and v > 0:
                out += [pos[v] - 2, pos[v] - 1]
            out.append(pos[v])
        return out

    for b in range(1, len(s), 2):  # P-moves sit at odd base indices
        ov = base_o[b]
        want = interleaved(ov)
        got = list(gad_o[pos[b]])
        if got != want:
            return CheckResult(False, f"O-view after P-move {b}: {got} != {want}")
        if b + 1 < len(s):
            want2 = want + [pos[b] + 1, pos[b] + 2, pos[b + 1]]
            got2 = list(gad_o[pos[b + 1]])
            if got2 != want2:
                return CheckResult(False, f"O-view at O-move {b + 1}: {got2} != {want2}")
            want3 = [pos[v] for v in base_p[b + 1]]
            got3 = list(gad_p[pos[b + 1]])
            if got3 != want3:
                return CheckResult(False, f"P-view at O-move {b + 1}: {got3} != {want3}")
            # P-view at the off following this P-move
            first_p = ov[1]
            want4 = [pos[v] for v in base_p[first_p]] + [pos[first_p] + 1]
            for k in range(2, len(ov), 2):
                want4 += [pos[ov[k]] - 1, pos[ov[k + 1]] + 1]
            got4 = list(gad_p[pos[b] + 1])
            if got4 != want4:
                return CheckResult(False, f"P-view at off after {b}: {got4} != {want4}")
    return CheckResult(True)


def o_level(s: Play) -> int:
    return level_report(s).player_levels[Polarity.O]


@dataclass(frozen=True)
class NormalizationReport:
    depth: int
    o_level_before: int
    o_level_after: int
    gadget: GadgetPlay

    @property
    def limit(self) -> int:
        return self.depth - 2

    @property
    def ok(self) -> bool:
        return self.o_level_after <= self.limit

    def __bool__(self) -> bool:
        return self.ok


def normalization_report(s: Play, d: int | None = None) -> NormalizationReport:
    """O-level of ``s`` and of its gadget play against the base depth ``d``.

    The enlarged arena has an ``on``/``off`` cycle, so the depth is always
    taken from the base arena.
    """
    if d is None:
        d = arena_depth(s.arena)
    if d == INFINITE:
        raise InfiniteDepthError("normalization needs an arena of finite depth")
    if d < 2:
        raise ValueError(f"normalization needs depth at least 2, got {d}")
    g = apply_gadget(s)
    return NormalizationReport(int(d), o_level(s), o_level(g.play), g)


def verify_normalization(s: Play, d: int | None = None) -> bool:
    return normalization_report(s, d).ok


def opening_inactivations(s: Play) -> list[tuple[int, int]]:
    """Pairs ``(i, j)`` of base O-moves whose edges satisfy ``e_i ⊳ e_j`` in the gadget play.

    Empty whenever ``s`` is an O-view in which every O-move is answered
    by the next move.
    """
    g = apply_gadget(s)
    preds = inactivators(g.play)
    base_o = {p for p, o in enumerate(g.origin) if isinstance(o, int) and g.play.polarity(p) is Polarity.O}
    out = []
    for j in sorted(base_o):
        for i in sorted(base_o):
            if preds[j] >> i & 1:
                out.append((g.origin[i], g.origin[j]))
    return out


def is_paired_o_view(s: Play) -> bool:
    """Every O-move except the last is immediately answered: edges ``(2i, 2i+1)``."""
    return all(s.pointers[i] == i - 1 for i in range(1, len(s), 2))
