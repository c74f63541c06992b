"""Property suites run over seeded random cases.

Each ``check_*`` function inspects one generated case and returns a list
of failure descriptions (empty when everything holds). ``run_suite``
drives a suite over many cases and collects counterexamples.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from .backtrack import (
    _Masks,
    activity,
    brute_activity,
    brute_inactivation_pairs,
    brute_move_levels,
    inactivators,
    level_report,
    move_levels,
)
from .bounds import hyperexp, interaction_bound, within
from .core import INFINITE, Play, Polarity, arena_depth
from .gadget import (
    apply_gadget,
    is_paired_o_view,
    normalization_report,
    opening_inactivations,
    strip_gadget,
    verify_gadget_views,
)
from .generate import DuelCase, GenConfig, PlayCase, duel_case, play_case
from .strategy import Status, interact, validate_strategy
from .trim import TrimSpec, answer_cost_violations, player_level, trim, verify_spring
from .views import first_invisible, prefix_views

PLAY_SUITES = ("visibility", "chains", "trim", "spring", "gadget", "oracle")
DUEL_SUITES = ("maxmin", "bounds")
SUITES = PLAY_SUITES + DUEL_SUITES


def check_visibility(s: Play) -> list[str]:
    out = []
    if s.violations:
        out.append(f"generated play is invalid: {s.violations[0]}")
        return out
    bad = first_invisible(s)
    if bad is not None:
        out.append(f"generated play is not visible at move {bad}")
        return out
    for p in (Polarity.P, Polarity.O):
        if p is Polarity.P and len(s) < 2:
            continue
        for i, w in enumerate(prefix_views(s, p)):
            v = s.subsequence(w)
            if v.violations or first_invisible(v) is not None:
                out.append(f"{p}-view of prefix {i} is not a visible play")
                break
    return out


def check_chains(s: Play) -> list[str]:
    out = []
    levels = move_levels(s)
    pol = s.polarities
    # a move's level is the level of the last move of its mover's view
    views = {p: prefix_views(s, p) for p in (Polarity.P, Polarity.O) if p in pol}
    for i in range(1, len(s)):
        w = views[pol[i]][i]
        in_view = move_levels(s.subsequence(w))[-1]
        if in_view != levels[i]:
            out.append(f"move {i}: level {levels[i]} in the play but {in_view} in its view")
            break
    # inactivation links join edges of the same polarity
    for i, mask in enumerate(inactivators(s)):
        j = next((j for j in range(i) if mask >> j & 1 and pol[j] is not pol[i]), None)
        if j is not None:
            out.append(f"edge {j} ({pol[j]}) inactivates edge {i} ({pol[i]})")
            break
    # a player's top-level edges are crossed by nothing
    masks = _Masks(s)
    for p in (Polarity.P, Polarity.O):
        top = player_level(s, p, levels)
        if top == 0:
            continue
        for i in range(1, len(s)):
            if pol[i] is p and levels[i] == top and masks.crossed_by[i]:
                j = (masks.crossed_by[i] & -masks.crossed_by[i]).bit_length() - 1
                out.append(f"edge {i} has the top {p} level {top} but edge {j} crosses it")
                break
    return out


def check_trim(s: Play) -> list[str]:
    out = []
    levels = move_levels(s)
    for p in (Polarity.P, Polarity.O):
        n = player_level(s, p, levels)
        if n == 0:
            continue
        t = trim(s, TrimSpec(n, p))
        if t.violations or first_invisible(t) is not None:
            out.append(f"trim by ({n}, {p}) is not a visible play")
            continue
        after = player_level(t, p)
        if after > n - 1:
            out.append(f"trim by ({n}, {p}) leaves {p} at level {after}")
    return out


def check_spring(s: Play) -> list[str]:
    out = []
    levels = move_levels(s)
    for p in (Polarity.P, Polarity.O):
        n = player_level(s, p, levels)
        if n == 0:
            continue
        res = verify_spring(s, TrimSpec(n, p))
        if not res:
            out.append(f"complexity does not increase after prefix {res.first_failure} under ({n}, {p})")
    bad = answer_cost_violations(s)
    if bad:
        out.append(f"answer cost fails on edge {bad[0]}")
    return out


def check_gadget(s: Play) -> list[str]:
    out = []
    g = apply_gadget(s)
    if g.play.violations or first_invisible(g.play) is not None:
        return [f"gadget play is not visible: {g.play.violations[:1] or first_invisible(g.play)}"]
    views = verify_gadget_views(s)
    if not views:
        out.append(views.detail)
    d = arena_depth(s.arena)
    if d != INFINITE and d >= 2:
        rep = normalization_report(s, d)
        if not rep.ok:
            out.append(f"O-level {rep.o_level_after} after the gadget exceeds depth {d} minus 2")
    back = strip_gadget(g)
    if back != s:
        out.append("removing the inserted moves does not restore the play")
    if is_paired_o_view(s):
        pairs = opening_inactivations(s)
        if pairs:
            out.append(f"O-edge {pairs[0][0]} inactivates O-edge {pairs[0][1]} in a paired O-view")
    return out


def check_oracle(s: Play) -> list[str]:
    out = []
    for e in range(len(s)):
        fast = activity(s, e).verdicts
        slow = brute_activity(s, e)
        if fast != slow:
            out.append(f"activity of prefix {e} differs from the literal recursion")
            break
    fast_pairs = {(j, i) for i, m in enumerate(inactivators(s)) for j in range(i) if m >> j & 1}
    if fast_pairs != brute_inactivation_pairs(s):
        out.append("inactivation pairs differ from the literal definition")
    if move_levels(s) != brute_move_levels(s):
        out.append(f"levels {move_levels(s)} differ from the literal {brute_move_levels(s)}")
    return out


def check_maxmin(case: DuelCase) -> list[str]:
    out = []
    for sigma in (case.sigma, case.tau):
        bad = validate_strategy(sigma)
        if bad:
            out.append(f"generated {sigma.owner}-strategy is malformed: {bad[0]}")
    if out:
        return out
    run = interact(case.sigma, case.tau)
    rep = level_report(run.transcript) if len(run.transcript) else None
    if rep is None:
        return out
    n, m = case.sigma.level(), case.tau.level()
    if rep.player_levels[Polarity.P] > n:
        out.append(f"transcript P level {rep.player_levels[Polarity.P]} exceeds strategy level {n}")
    if rep.player_levels[Polarity.O] > m:
        out.append(f"transcript O level {rep.player_levels[Polarity.O]} exceeds strategy level {m}")
    return out


def check_bounds(case: DuelCase) -> list[str]:
    out = []
    run = interact(case.sigma, case.tau)
    n, m = case.sigma.level(), case.tau.level()
    k = max(case.sigma.bound, case.tau.bound, 1)
    b = min(n, m)
    tower = hyperexp(k, b, k)
    if run.status is Status.STEP_LIMIT or not within(len(run.transcript), tower):
        out.append(
            f"interaction of length {len(run.transcript)} ({run.status}) has its last index above the bound {tower}"
        )
    d = arena_depth(case.arena)
    if d != INFINITE and d >= 2:
        refined = interaction_bound(n, m, k, d)
        if not within(len(run.transcript), refined):
            out.append(
                f"interaction of length {len(run.transcript)} has its last index above the depth-{d} bound {refined}"
            )
    return out


PLAY_CHECKS: dict[str, Callable[[Play], list[str]]] = {
    "visibility": check_visibility,
    "chains": check_chains,
    "trim": check_trim,
    "spring": check_spring,
    "gadget": check_gadget,
    "oracle": check_oracle,
}
DUEL_CHECKS: dict[str, Callable[[DuelCase], list[str]]] = {
    "maxmin": check_maxmin,
    "bounds": check_bounds,
}


@dataclass(frozen=True)
class Failure:
    suite: str
    seed: int
    index: int
    messages: tuple[str, ...]
    case: PlayCase | DuelCase = field(repr=False)


@dataclass
class SuiteResult:
    suite: str
    seed: int
    cases: int = 0
    seconds: float = 0.0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def oracle_config(seed: int) -> GenConfig:
    """Longer plays for the literal-definition comparison (length at most 40)."""
    return GenConfig(seed=seed, length=40)


def run_case(suite: str, cfg: GenConfig, index: int) -> Failure | None:
    if suite in PLAY_CHECKS:
        case = play_case(cfg, index)
        msgs = PLAY_CHECKS[suite](case.play)
    elif suite in DUEL_CHECKS:
        case = duel_case(cfg, index)
        msgs = DUEL_CHECKS[suite](case)
    else:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if msgs:
        return Failure(suite, cfg.seed, index, tuple(msgs), case)
    return None


def run_suite(suite: str, cfg: GenConfig, count: int) -> SuiteResult:
    res = SuiteResult(suite, cfg.seed)
    start = time.perf_counter()
    for i in range(count):
        f = run_case(suite, cfg, i)
        res.cases += 1
        if f is not None:
            res.failures.append(f)
    res.seconds = time.perf_counter() - start
    return res
