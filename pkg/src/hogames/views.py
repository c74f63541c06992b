"""Player and Opponent views, with visibility checks built on them."""

from __future__ import annotations

from dataclasses import dataclass

from .core import InvalidPlayError, NotVisibleError, Play, Polarity


@dataclass(frozen=True)
class View:
    """A view as a set of indices into its source play.

    Pointers of the induced subsequence are the original ones, so a
    view-relative position maps back to the play with ``indices[pos]``.
    """

    source: Play
    indices: tuple[int, ...]
    polarity: Polarity

    def __len__(self) -> int:
        return len(self.indices)

    def as_play(self) -> Play:
        return self.source.subsequence(self.indices)

    def position(self, index: int) -> int:
        return self.indices.index(index)

    def relative(self) -> tuple[tuple[str, int | None], ...]:
        """The view as ``(move, view-relative pointer)`` pairs."""
        pos = {old: new for new, old in enumerate(self.indices)}
        out = []
        for new, old in enumerate(self.indices):
            t = self.source.pointers[old]
            out.append((self.source.moves[old], None if new == 0 or t is None else pos[t]))
        return tuple(out)


def _view_indices(s: Play, last: int, p: Polarity) -> list[int]:
    pol = s.polarities
    out: list[int] = []
    i = last
    while i >= 0:
        if pol[i] is p:
            out.append(i)
            i -= 1
        elif i == 0:
            # only reachable for the P-view: the initial move closes the recursion
            out.append(0)
            break
        else:
            j = s.pointers[i]
            if j is None:
                raise InvalidPlayError(f"move {i} has no pointer")
            out.append(i)
            out.append(j)
            i = j - 1
    if p is Polarity.P and last >= 0 and (not out or out[-1] != 0):
        raise InvalidPlayError("P-view recursion did not reach an initial move")
    out.reverse()
    return out


def view_of_prefix(s: Play, last: int, p: Polarity) -> tuple[int, ...]:
    """Indices of the ``p``-view of ``s_0 ... s_last`` (``last = -1`` is the empty prefix)."""
    if last < 0:
        if p is Polarity.P:
            raise InvalidPlayError("the P-view of the empty sequence is undefined")
        return ()
    return tuple(_view_indices(s, last, p))


def view(s: Play, p: Polarity) -> View:
    if len(s) == 0:
        if p is Polarity.P:
            raise InvalidPlayError("the P-view of the empty sequence is undefined")
        return View(s, (), p)
    s.require_valid()
    return View(s, view_of_prefix(s, len(s) - 1, p), p)


def prefix_views(s: Play, p: Polarity) -> list[tuple[int, ...]]:
    """``p``-view index tuples of every prefix; entry ``i`` is the view of ``s_0 ... s_i``."""
    pol = s.polarities
    views: list[tuple[int, ...]] = []
    for i in range(len(s)):
        if pol[i] is p:
            base = views[i - 1] if i > 0 else ()
            views.append(base + (i,))
        elif i == 0:
            views.append((0,))
        else:
            j = s.target(i)
            base = views[j - 1] if j > 0 else ()
            views.append(base + (j, i))
    return views


def first_invisible(s: Play) -> int | None:
    """Index of the first move pointing outside its mover's view, or ``None``."""
    pol = s.polarities
    pv = prefix_views(s, Polarity.P) if any(pol[i] is Polarity.P for i in range(len(s))) else []
    ov = prefix_views(s, Polarity.O)
    for i in range(1, len(s)):
        t = s.pointers[i]
        seen = pv[i - 1] if pol[i] is Polarity.P else ov[i - 1]
        if t not in seen:
            return i
    return None


def is_visible(s: Play) -> tuple[bool, int | None]:
    """``(True, None)`` for a visible play, else ``(False, first violating index)``."""
    s.require_valid()
    bad = first_invisible(s)
    return bad is None, bad


def require_visible(s: Play) -> Play:
    ok, bad = is_visible(s)
    if not ok:
        raise NotVisibleError(f"move {bad} points outside its view")
    return s


@dataclass(frozen=True)
class ViewShape:
    """``r • (∘_k … •_k) … (∘_1 … •_1) ∘`` for a play whose last move points to ``•``.

    ``blocks`` lists the ``(∘_i, •_i)`` index pairs in play order, i.e. from
    ``k`` down to ``1``.
    """

    justifier: int
    last: int
    blocks: tuple[tuple[int, int], ...]


def view_shape(s: Play) -> ViewShape:
    ok, bad = is_visible(s)
    if not ok:
        raise NotVisibleError(f"move {bad} points outside its view")
    n = len(s) - 1
    if n < 1:
        raise InvalidPlayError("view_shape needs a last move with a pointer")
    t = s.target(n)
    blocks: list[tuple[int, int]] = []
    i = n - 1
    while i != t:
        j = s.pointers[i]
        if i < t or j is None:
            raise NotVisibleError(f"the last move's target {t} is not in the view")
        blocks.append((j, i))
        i = j - 1
    blocks.reverse()
    return ViewShape(t, n, tuple(blocks))


class ViewTracker:
    """Both players' views of every prefix, maintained while a play grows."""

    def __init__(self):
        self.views: dict[Polarity, list[tuple[int, ...]]] = {Polarity.P: [], Polarity.O: []}
        self.length = 0

    def push(self, polarity: Polarity, target: int | None) -> None:
        n = self.length
        for p, vs in self.views.items():
            if polarity is p:
                vs.append((vs[-1] if n else ()) + (n,))
            elif n == 0:
                vs.append((0,))
            else:
                vs.append((vs[target - 1] if target > 0 else ()) + (target, n))
        self.length += 1

    def current(self, p: Polarity) -> tuple[int, ...]:
        """``p``-view of the whole play so far (empty before the first move)."""
        return self.views[p][-1] if self.length else ()
