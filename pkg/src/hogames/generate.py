"""Seeded random arenas, with visible plays and bounded strategies over them.

All randomness comes from ``random.Random`` (Mersenne Twister), whose
output for a given integer seed is fixed across platforms and Python
versions, so every generated case can be replayed from its seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import STAR, Arena, Play, Polarity
from .strategy import InnocentStrategy
from .views import ViewTracker


@dataclass(frozen=True)
class GenConfig:
    seed: int = 1
    depth: tuple[int, int] = (2, 8)  # inclusive range for the number of layers
    branching: tuple[int, int] = (1, 3)  # moves per layer
    length: int = 24  # maximum play length
    propensity: float = 0.6  # chance of pointing somewhere other than the last move
    bound: tuple[int, int] = (2, 12)  # view bound range for random strategies
    density: float = 0.7  # chance that a move enables a given move of the next layer

    def __post_init__(self):
        for name in ("depth", "branching", "bound"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ValueError(f"empty {name} range {lo}..{hi}")
        if self.depth[0] < 1 or self.branching[0] < 1 or self.bound[0] < 1:
            raise ValueError("ranges must start at 1 or more")
        if not 0.0 <= self.propensity <= 1.0:
            raise ValueError("propensity must lie in [0, 1]")
        if not 0.0 < self.density <= 1.0:
            raise ValueError("density must lie in (0, 1]")
        if self.length < 1:
            raise ValueError("length must be at least 1")


def case_rng(seed: int, case: int, salt: str = "") -> random.Random:
    """Independent stream per case, so case ``i`` does not depend on earlier cases."""
    return random.Random(f"{seed}/{case}/{salt}")


def random_arena(rng: random.Random, cfg: GenConfig, name: str = "random") -> Arena:
    """Layered arena: layer 0 is ``*``, layer ``d`` moves answer layer ``d - 1``.

    Every layer move has a parent, so the depth equals the number of layers.
    """
    layers = rng.randint(*cfg.depth)
    levels: list[list[str]] = [[STAR]]
    labels = {STAR: Polarity.O}
    enabling: set[tuple[str, str]] = set()
    for d in range(1, layers):
        width = rng.randint(*cfg.branching)
        layer = [f"m{d}_{k}" for k in range(width)]
        pol = Polarity.P if d % 2 == 1 else Polarity.O
        for m in layer:
            labels[m] = pol
        prev = levels[-1]
        for m in layer:
            parents = [x for x in prev if rng.random() < cfg.density]
            if not parents:
                parents = [rng.choice(prev)]
            enabling.update((x, m) for x in parents)
        for x in prev:
            if not any((x, m) in enabling for m in layer):
                enabling.add((x, rng.choice(layer)))
        levels.append(layer)
    return Arena(labels, enabling, labels, {STAR}, name=name)


def _pick_target(rng: random.Random, candidates: list[int], last: int, propensity: float) -> int:
    others = [c for c in candidates if c != last]
    if last in candidates and (not others or rng.random() >= propensity):
        return last
    return rng.choice(others)


def random_play(rng: random.Random, arena: Arena, length: int, propensity: float) -> Play:
    """A visible play built move by move: each mover points into its own current view."""
    moves = [STAR]
    ptrs: list[int | None] = [None]
    tracker = ViewTracker()
    tracker.push(Polarity.O, None)
    while len(moves) < length:
        mover = arena.labels[moves[-1]].other
        view = tracker.current(mover)
        cands = [i for i in view if arena.labels[moves[i]] is not mover and arena.answers(moves[i])]
        if not cands:
            break
        t = _pick_target(rng, cands, len(moves) - 1, propensity)
        m = rng.choice(sorted(arena.answers(moves[t])))
        moves.append(m)
        ptrs.append(t)
        tracker.push(mover, t)
    return Play(arena, tuple(moves), tuple(ptrs))


def random_strategy(
    rng: random.Random,
    arena: Arena,
    owner: Polarity,
    bound: int,
    propensity: float,
    name: str = "",
) -> InnocentStrategy:
    """A view tree grown breadth first up to views of length ``bound``.

    Adversary moves in an owner's view always answer the move just before
    them, so the children of a view ``w`` are ``w`` plus any answer to its
    last move.
    """
    entries: dict[tuple, tuple] = {}
    frontier: list[tuple] = []
    if owner is Polarity.O:
        if bound >= 1:
            entries[()] = (STAR, None)
            frontier = _children(arena, ((STAR, None),))
    else:
        frontier = [((STAR, None),)]
    while frontier:
        nxt = []
        for key in frontier:
            if len(key) + 1 > bound:
                continue
            cands = [i for i, (m, _) in enumerate(key) if arena.labels[m] is not owner and arena.answers(m)]
            if not cands:
                continue
            t = _pick_target(rng, cands, len(key) - 1, propensity)
            ans = (rng.choice(sorted(arena.answers(key[t][0]))), t)
            entries[key] = ans
            nxt.extend(_children(arena, key + (ans,)))
        frontier = nxt
    return InnocentStrategy(arena, owner, entries, bound=bound, name=name)


def _children(arena: Arena, w: tuple) -> list[tuple]:
    last = w[-1][0]
    return [w + ((m, len(w) - 1),) for m in sorted(arena.answers(last))]


@dataclass(frozen=True)
class PlayCase:
    index: int
    arena: Arena
    play: Play


@dataclass(frozen=True)
class DuelCase:
    index: int
    arena: Arena
    sigma: InnocentStrategy
    tau: InnocentStrategy


def play_case(cfg: GenConfig, index: int) -> PlayCase:
    rng = case_rng(cfg.seed, index, "play")
    arena = random_arena(rng, cfg, name=f"r{cfg.seed}_{index}")
    n = rng.randint(1, cfg.length)
    return PlayCase(index, arena, random_play(rng, arena, n, cfg.propensity))


def duel_case(cfg: GenConfig, index: int) -> DuelCase:
    rng = case_rng(cfg.seed, index, "duel")
    arena = random_arena(rng, cfg, name=f"d{cfg.seed}_{index}")
    sigma = random_strategy(rng, arena, Polarity.P, rng.randint(*cfg.bound), cfg.propensity, "sigma")
    tau = random_strategy(rng, arena, Polarity.O, rng.randint(*cfg.bound), cfg.propensity, "tau")
    return DuelCase(index, arena, sigma, tau)
