"""Towers of exponentials and the interaction-length bounds built from them."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .core import INFINITE

DEFAULT_DIGIT_CAP = 10_000
DIGIT_CAP_ENV = "HOGAMES_DIGIT_CAP"


def digit_cap() -> int:
    raw = os.environ.get(DIGIT_CAP_ENV)
    if raw is None:
        return DEFAULT_DIGIT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{DIGIT_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{DIGIT_CAP_ENV} must be positive")
    return cap


@dataclass(frozen=True)
class SymbolicTower:
    """``a`` stacked ``height`` times on top of ``top``, too large to write out.

    Only ever produced when the exact value has more digits than the cap,
    so it compares greater than any integer with at most ``cap`` digits.
    """

    base: int
    height: int
    top: int
    cap: int

    def __str__(self) -> str:
        return f"tower(base={self.base}, height={self.height}, top={self.top}) > 10^{self.cap}"

    def _above(self, n: int) -> bool:
        if n < 0 or len(str(n)) <= self.cap:
            return True
        # n is itself enormous: compare exactly by rebuilding the tower level by level
        v = self.top
        for _ in range(self.height):
            if v > n.bit_length():
                return True
            v = self.base**v
        return v > n

    def __gt__(self, other):
        if isinstance(other, int):
            return self._above(other)
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, int):
            return self._above(other - 1) if other > 0 else True
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, int):
            return not self >= other
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, int):
            return not self > other
        return NotImplemented


def hyperexp(a: int, n: int, m: int, cap: int | None = None) -> int | SymbolicTower:
    """``a_0^m = m`` and ``a_{n+1}^m = a ** a_n^m``, exact while it fits in ``cap`` digits."""
    if min(a, n, m) < 0:
        raise ValueError("hyperexp takes natural numbers")
    if cap is None:
        cap = digit_cap()
    v = m
    for _ in range(n):
        if a >= 2 and v >= cap / math.log10(a):  # a ** v would have over cap digits
            return SymbolicTower(a, n, m, cap)
        v = a**v
    return v


def tower_height(n: int, m: int, d: int | float | None = None) -> int:
    """``b = min(n, m)``, or ``min(n, m, d - 2)`` when a depth is given."""
    b = min(n, m)
    if d is not None and d != INFINITE:
        if d < 2:
            raise ValueError(f"the refined bound needs depth at least 2, got {d}")
        b = min(b, int(d) - 2)
    return b


def interaction_bound(n: int, m: int, k: int, d: int | float | None = None) -> int | SymbolicTower:
    """Maximum interaction length for strategies of levels ``n``, ``m`` and view bound ``k``.

    With a finite depth ``d`` the refined form applies: base ``2k`` and
    height ``min(n, m, d - 2)``. An infinite depth gives no refinement.
    """
    if k < 1:
        raise ValueError("the view bound k must be at least 1")
    b = tower_height(n, m, d)
    if d is not None and d != INFINITE:
        return hyperexp(2 * k, b, 2 * k)
    return hyperexp(k, b, k)


def within(length: int, bound: int | SymbolicTower) -> bool:
    """True iff a play of ``length`` moves obeys ``bound``.

    The bound caps the index of the last move, which is one less than the length.
    """
    last = length - 1
    return last <= bound if isinstance(bound, int) else bound >= last
