"""Arenas and plays with justification pointers, plus their structural checks.

All indices are 0-based. A play is stored as a tuple of move identifiers
plus a parallel tuple of pointer targets; ``pointers[0]`` is ``None`` and
every later entry is an earlier index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

STAR = "*"
INFINITE = math.inf


class Polarity(str, Enum):
    P = "P"
    O = "O"

    @property
    def other(self) -> Polarity:
        return Polarity.O if self is Polarity.P else Polarity.P

    def __str__(self) -> str:
        return self.value


class InvalidPlayError(ValueError):
    """Raised when an operation needs a valid (or visible) play and gets something else."""


class NotVisibleError(InvalidPlayError):
    pass


class InfiniteDepthError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    kind: str
    index: int | None = None
    detail: str = ""

    def __str__(self) -> str:
        where = "" if self.index is None else f" at {self.index}"
        extra = f": {self.detail}" if self.detail else ""
        return f"{self.kind}{where}{extra}"


class Arena:
    """A finite arena: moves, enabling relation, polarity labels, initial moves.

    Construction never rejects; use :func:`validate_arena` to get the list
    of violated conditions.
    """

    def __init__(
        self,
        moves: Iterable[str],
        enabling: Iterable[tuple[str, str]],
        labels: Mapping[str, Polarity | str],
        initials: Iterable[str],
        name: str = "arena",
    ):
        self.name = name
        self.moves: frozenset[str] = frozenset(moves)
        self.enabling: frozenset[tuple[str, str]] = frozenset((a, b) for a, b in enabling)
        self.labels: dict[str, Polarity] = {m: Polarity(v) for m, v in labels.items()}
        self.initials: frozenset[str] = frozenset(initials)
        answers: dict[str, set[str]] = {}
        for a, b in self.enabling:
            answers.setdefault(a, set()).add(b)
        self._answers = {m: frozenset(v) for m, v in answers.items()}

    def label(self, move: str) -> Polarity:
        return self.labels[move]

    def enables(self, justifier: str, answer: str) -> bool:
        return (justifier, answer) in self.enabling

    def answers(self, move: str) -> frozenset[str]:
        """Moves justified by ``move``."""
        return self._answers.get(move, frozenset())

    def sorted_moves(self) -> list[str]:
        return sorted(self.moves)

    def _key(self):
        return (self.moves, self.enabling, frozenset(self.labels.items()), self.initials)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Arena):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"Arena({self.name!r}, {len(self.moves)} moves, {len(self.enabling)} enablings)"


def validate_arena(a: Arena) -> list[Violation]:
    out: list[Violation] = []
    for m in sorted(a.moves):
        if m not in a.labels:
            out.append(Violation("unlabeled", detail=m))
    for m, n in sorted(a.enabling):
        for x in (m, n):
            if x not in a.moves:
                out.append(Violation("unknown-move", detail=f"{x} in enabling ({m},{n})"))
        if m in a.labels and n in a.labels and a.labels[m] == a.labels[n]:
            out.append(Violation("alternation", detail=f"({m},{n})"))
    for m in sorted(a.initials):
        if m not in a.moves:
            out.append(Violation("unknown-move", detail=f"initial {m}"))
        elif a.labels.get(m) is not Polarity.O:
            out.append(Violation("initial-label", detail=f"{m} is labeled P"))
    if STAR not in a.initials:
        out.append(Violation("missing-star", detail="'*' is not an initial move"))
    return out


def arena_depth(a: Arena) -> int | float:
    """Length of the longest simple play, or ``INFINITE`` if a cycle is reachable."""
    memo: dict[str, int] = {}
    on_stack: set[str] = set()

    def longest(m: str) -> int | float:
        if m in memo:
            return memo[m]
        if m in on_stack:
            return INFINITE
        on_stack.add(m)
        best: int | float = 0
        for n in a.answers(m):
            best = max(best, longest(n))
            if best == INFINITE:
                break
        on_stack.discard(m)
        if best == INFINITE:
            return INFINITE
        memo[m] = best + 1
        return memo[m]

    depth: int | float = 0
    for m in sorted(a.initials):
        depth = max(depth, longest(m))
        if depth == INFINITE:
            return INFINITE
    return depth


@dataclass(frozen=True)
class Play:
    """A justified sequence over an arena (a play when polarities alternate).

    Occurrences have positional identity: ``moves[i]`` is the move played at
    step ``i`` and ``pointers[i]`` the index it points back to.
    """

    arena: Arena = field(repr=False)
    moves: tuple[str, ...]
    pointers: tuple[int | None, ...]

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(self.moves))
        object.__setattr__(self, "pointers", tuple(self.pointers))
        if len(self.moves) != len(self.pointers):
            raise ValueError("moves and pointers differ in length")

    @classmethod
    def from_pairs(cls, arena: Arena, pairs: Iterable[tuple[str, int | None]]) -> Play:
        pairs = list(pairs)
        return cls(arena, tuple(m for m, _ in pairs), tuple(p for _, p in pairs))

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self) -> Iterator[tuple[str, int | None]]:
        return iter(zip(self.moves, self.pointers))

    def __getitem__(self, key):
        if isinstance(key, slice):
            start, stop, step = key.indices(len(self))
            if start != 0 or step != 1:
                raise ValueError("only prefixes of a play can be sliced")
            return Play(self.arena, self.moves[:stop], self.pointers[:stop])
        return self.moves[key], self.pointers[key]

    def prefix(self, last: int) -> Play:
        """The initial segment ``s_0 ... s_last``."""
        return self[: last + 1]

    def polarity(self, i: int) -> Polarity:
        return self.arena.labels[self.moves[i]]

    @cached_property
    def polarities(self) -> tuple[Polarity, ...]:
        return tuple(self.arena.labels[m] for m in self.moves)

    def target(self, i: int) -> int:
        t = self.pointers[i]
        if t is None:
            raise InvalidPlayError(f"move {i} has no pointer")
        return t

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(justifier index, answer index)``."""
        return [(t, i) for i, t in enumerate(self.pointers) if t is not None]

    def is_immediate(self, i: int) -> bool:
        return i == 0 or self.pointers[i] == i - 1

    def subsequence(self, indices: Sequence[int]) -> Play:
        """The subsequence at ``indices`` keeping the original arrows.

        Every kept pointer target must itself be kept.
        """
        pos = {old: new for new, old in enumerate(indices)}
        ptrs: list[int | None] = []
        for new, old in enumerate(indices):
            t = self.pointers[old]
            if new == 0 or t is None:
                ptrs.append(None)
                continue
            if t not in pos:
                raise InvalidPlayError(f"move {old} points to {t}, which is not kept")
            ptrs.append(pos[t])
        return Play(self.arena, tuple(self.moves[i] for i in indices), tuple(ptrs))

    def with_arena(self, arena: Arena) -> Play:
        return Play(arena, self.moves, self.pointers)

    @cached_property
    def violations(self) -> tuple[Violation, ...]:
        return tuple(validate_play(self.arena, self))

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def require_valid(self) -> Play:
        if self.violations:
            raise InvalidPlayError("; ".join(str(v) for v in self.violations))
        return self

    def __repr__(self) -> str:
        body = " ".join(m if t is None else f"{m}->{t}" for m, t in self)
        return f"Play[{body}]"


def validate_justified_sequence(a: Arena, s: Play) -> list[Violation]:
    out: list[Violation] = []
    if len(s) == 0:
        return [Violation("empty", detail="a justified sequence starts with an initial move")]
    for i, (m, t) in enumerate(s):
        if m not in a.moves:
            out.append(Violation("unknown-move", i, m))
            continue
        if i == 0:
            if m not in a.initials:
                out.append(Violation("not-initial", 0, m))
            if t is not None:
                out.append(Violation("unexpected-pointer", 0, "the first move has no pointer"))
            continue
        if t is None:
            out.append(Violation("missing-pointer", i, m))
        elif t < 0:
            out.append(Violation("bad-pointer", i, f"target {t}"))
        elif t >= i:
            out.append(Violation("forward pointer", i, f"target {t}"))
        elif s.moves[t] in a.moves and not a.enables(s.moves[t], m):
            out.append(Violation("not-enabled", i, f"{s.moves[t]} does not justify {m}"))
    return out


def validate_play(a: Arena, s: Play) -> list[Violation]:
    out = validate_justified_sequence(a, s)
    for i in range(len(s) - 1):
        x, y = s.moves[i], s.moves[i + 1]
        if x in a.labels and y in a.labels and a.labels[x] == a.labels[y]:
            out.append(Violation("alternation", i + 1, f"{x} and {y} are both {a.labels[x]}"))
    return out
