"""Pointer diagrams: Graphviz ``dot`` text and a plain ASCII picture."""

from __future__ import annotations

from typing import Sequence

from .core import Play, Polarity

_SHAPE = {Polarity.O: "circle", Polarity.P: "doublecircle"}


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_dot(s: Play, highlight: Sequence[int] = (), name: str = "play") -> str:
    """Moves left to right in sequence order, one back-arc per pointer.

    Opponent moves are filled circles, Player moves plain double circles;
    indices in ``highlight`` (for example inserted gadget moves) are dashed boxes.
    """
    marked = set(highlight)
    out = [f"digraph {_quote(name)} {{", "  rankdir=LR;", "  node [fontname=monospace];"]
    for i, m in enumerate(s.moves):
        pol = s.polarity(i)
        attrs = [f"label={_quote(f'{i}: {m}')}"]
        if i in marked:
            attrs += ["shape=box", "style=dashed"]
        else:
            attrs.append(f"shape={_SHAPE[pol]}")
            if pol is Polarity.O:
                attrs += ["style=filled", "fillcolor=lightgray"]
        out.append(f"  n{i} [{', '.join(attrs)}];")
    for i in range(1, len(s)):
        out.append(f"  n{i - 1} -> n{i} [style=invis, weight=10];")
    for i, t in enumerate(s.pointers):
        if t is not None:
            out.append(f"  n{i} -> n{t} [constraint=false, color={'blue' if s.polarity(i) is Polarity.P else 'red'}];")
    out.append("}")
    return "\n".join(out) + "\n"


def render_ascii(s: Play, highlight: Sequence[int] = ()) -> str:
    """One row per move; arcs drawn as vertical lanes to the left of the moves.

    A lane opens at the justifier (``+``) and closes at the answer (``'``);
    ``|`` marks a lane passing by. ``*`` tags inserted moves from ``highlight``.
    """
    marked = set(highlight)
    arcs = sorted(((t, i) for i, t in enumerate(s.pointers) if t is not None), key=lambda e: (e[1] - e[0], e[0]))
    lanes: list[list[tuple[int, int]]] = []
    lane_of: dict[tuple[int, int], int] = {}
    for a in arcs:
        for k, lane in enumerate(lanes):
            if all(b[1] < a[0] or a[1] < b[0] for b in lane):
                lane.append(a)
                lane_of[a] = k
                break
        else:
            lane_of[a] = len(lanes)
            lanes.append([a])
    width = len(lanes)
    rows = []
    for i, m in enumerate(s.moves):
        cells = [" "] * width
        for (t, j), k in lane_of.items():
            col = width - 1 - k  # short arcs sit next to the moves
            if i == t:
                cells[col] = "+"
            elif i == j:
                cells[col] = "'"
            elif t < i < j:
                cells[col] = "|"
        pol = s.polarity(i)
        tag = "*" if i in marked else " "
        ptr = "" if s.pointers[i] is None else f" -> {s.pointers[i]}"
        rows.append(f"{''.join(cells)} {i:>3} {pol}{tag} {m}{ptr}".rstrip())
    return "\n".join(rows) + "\n"
