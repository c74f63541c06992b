"""Plain-text file formats for the objects of this package.

Every format ignores blank lines and ``#`` comments, and serializes to a
canonical form that parses back to an equal object.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .core import Arena, Play, Polarity
from .strategy import InnocentStrategy


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = ""):
        self.line = line
        self.source = source
        where = f"{source}:" if source else ""
        where += f"line {line}: " if line is not None else ""
        super().__init__(where + message)


def _lines(text: str):
    for n, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield n, body.split()


# -- arenas ---------------------------------------------------------------


def parse_arena(text: str, source: str = "") -> Arena:
    name = None
    moves: dict[str, Polarity] = {}
    initials: set[str] = set()
    enabling: list[tuple[str, str]] = []
    for n, parts in _lines(text):
        head = parts[0]
        if name is None:
            if head != "arena" or len(parts) != 2:
                raise ParseError("expected header 'arena <name>'", n, source)
            name = parts[1]
        elif head == "move":
            if len(parts) not in (3, 4) or parts[2] not in ("P", "O"):
                raise ParseError("expected 'move <id> P|O [initial]'", n, source)
            if len(parts) == 4 and parts[3] != "initial":
                raise ParseError(f"unknown move flag {parts[3]!r}", n, source)
            if parts[1] in moves:
                raise ParseError(f"move {parts[1]} declared twice", n, source)
            moves[parts[1]] = Polarity(parts[2])
            if len(parts) == 4:
                initials.add(parts[1])
        elif head == "enable":
            if len(parts) != 3:
                raise ParseError("expected 'enable <id> <id>'", n, source)
            enabling.append((parts[1], parts[2]))
        else:
            raise ParseError(f"unknown directive {head!r}", n, source)
    if name is None:
        raise ParseError("empty arena file", None, source)
    return Arena(moves, enabling, moves, initials, name=name)


def serialize_arena(a: Arena) -> str:
    out = [f"arena {a.name}"]
    for m in sorted(a.moves):
        flag = " initial" if m in a.initials else ""
        out.append(f"move {m} {a.labels[m]}{flag}")
    for x, y in sorted(a.enabling):
        out.append(f"enable {x} {y}")
    return "\n".join(out) + "\n"


# -- plays ----------------------------------------------------------------


@dataclass(frozen=True)
class PlayFile:
    arena_name: str
    moves: tuple[str, ...]
    pointers: tuple[int | None, ...]
    lines: tuple[int, ...]  # source line of each move

    def bind(self, arena: Arena) -> Play:
        return Play(arena, self.moves, self.pointers)

    def line_of(self, index: int | None) -> int | None:
        if index is None or not 0 <= index < len(self.lines):
            return None
        return self.lines[index]


def parse_play(text: str, source: str = "") -> PlayFile:
    name = None
    moves: list[str] = []
    ptrs: list[int | None] = []
    lines: list[int] = []
    for n, parts in _lines(text):
        if name is None:
            if parts[0] != "play" or len(parts) != 2:
                raise ParseError("expected header 'play <arena-name>'", n, source)
            name = parts[1]
            continue
        if len(parts) not in (2, 4) or (len(parts) == 4 and parts[2] != "->"):
            raise ParseError("expected '<index> <move-id> [-> <target-index>]'", n, source)
        try:
            idx = int(parts[0])
            target = int(parts[3]) if len(parts) == 4 else None
        except ValueError:
            raise ParseError("indices must be integers", n, source) from None
        if idx != len(moves):
            raise ParseError(f"expected index {len(moves)}, found {idx}", n, source)
        moves.append(parts[1])
        ptrs.append(target)
        lines.append(n)
    if name is None:
        raise ParseError("empty play file", None, source)
    return PlayFile(name, tuple(moves), tuple(ptrs), tuple(lines))


def serialize_play(s: Play, arena_name: str | None = None) -> str:
    out = [f"play {arena_name or s.arena.name}"]
    for i, (m, t) in enumerate(s):
        out.append(f"{i} {m}" if t is None else f"{i} {m} -> {t}")
    return "\n".join(out) + "\n"


# -- strategies -----------------------------------------------------------


@dataclass(frozen=True)
class StrategyFile:
    arena_name: str
    owner: Polarity
    bound: int
    entries: tuple[tuple[tuple, tuple], ...]

    def bind(self, arena: Arena) -> InnocentStrategy:
        return InnocentStrategy(arena, self.owner, self.entries, bound=self.bound)


def _token(tok: str, n: int, source: str) -> tuple[str, int | None]:
    if "@" not in tok:
        raise ParseError(f"token {tok!r} is not '<move-id>@<pointer>'", n, source)
    move, ptr = tok.rsplit("@", 1)
    if not move:
        raise ParseError(f"token {tok!r} has no move", n, source)
    if ptr == "-":
        return move, None
    try:
        return move, int(ptr)
    except ValueError:
        raise ParseError(f"bad pointer in token {tok!r}", n, source) from None


def parse_strategy(text: str, source: str = "") -> StrategyFile:
    header = None
    entries: dict[tuple, tuple] = {}
    for n, parts in _lines(text):
        if header is None:
            if (
                len(parts) != 4
                or parts[0] != "strategy"
                or parts[2] not in ("P", "O")
                or not parts[3].startswith("bound=")
            ):
                raise ParseError("expected header 'strategy <arena-name> P|O bound=<k>'", n, source)
            try:
                bound = int(parts[3][len("bound="):])
            except ValueError:
                raise ParseError("bound must be an integer", n, source) from None
            header = (parts[1], Polarity(parts[2]), bound)
            continue
        if "=>" not in parts or parts.count("=>") != 1 or parts.index("=>") != len(parts) - 2:
            raise ParseError("expected '<view tokens> => <move-id>@<pointer>'", n, source)
        view = tuple(_token(t, n, source) for t in parts[:-2])
        ans = _token(parts[-1], n, source)
        if view in entries and entries[view] != ans:
            raise ParseError("a second, different answer for the same view", n, source)
        entries[view] = ans
    if header is None:
        raise ParseError("empty strategy file", None, source)
    return StrategyFile(header[0], header[1], header[2], tuple(entries.items()))


def _fmt(tok: tuple[str, int | None]) -> str:
    return f"{tok[0]}@{'-' if tok[1] is None else tok[1]}"


def serialize_strategy(sigma: InnocentStrategy, arena_name: str | None = None) -> str:
    out = [f"strategy {arena_name or sigma.arena.name} {sigma.owner} bound={sigma.bound}"]
    for view, ans in sorted(sigma.entries.items(), key=lambda kv: (len(kv[0]), [_fmt(t) for t in kv[0]])):
        out.append(" ".join([_fmt(t) for t in view] + ["=>", _fmt(ans)]))
    return "\n".join(out) + "\n"


# -- files ----------------------------------------------------------------


def read_text(path: str | Path) -> str:
    return Path(path).read_text(encoding="utf-8")


def load_arena(path: str | Path) -> Arena:
    return parse_arena(read_text(path), str(path))


def load_play_file(path: str | Path) -> PlayFile:
    return parse_play(read_text(path), str(path))


def load_strategy_file(path: str | Path) -> StrategyFile:
    return parse_strategy(read_text(path), str(path))


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")
