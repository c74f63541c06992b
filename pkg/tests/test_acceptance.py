"""Acceptance criteria, one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` or ``python3 tests/test_acceptance.py``.
"""

import sys
import time

import pytest

from hogames import cli
from hogames.backtrack import activity, inactivates, move_level, move_levels
from hogames.bounds import hyperexp, interaction_bound, tower_height
from hogames.checks import oracle_config, run_suite
from hogames.core import arena_depth
from hogames.fixtures import (
    DUEL_ENDING,
    DUEL_PREFIX,
    crossing_play,
    crossing_play_repointed,
    duel_strategies,
    ladder_play,
)
from hogames.gadget import normalization_report
from hogames.strategy import Status, interact

SEEDS = range(1, 11)
CASES = 500
SUITE_SECONDS = 60.0


@pytest.fixture
def report(capsys):
    def line(name, ok, detail=""):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""), end="")
        return ok

    return line


def _golden():
    out = []
    s = crossing_play()
    lv = move_levels(s)
    out.append(("crossing play: Player-move levels 0 1 2 3", [lv[i] for i in (1, 3, 5, 7)] == [0, 1, 2, 3]))
    out.append(("repointed crossing play: last Player move has level 1", move_level(crossing_play_repointed(), 7) == 1))
    whole = activity(s)
    out.append(("crossing play: edge from c3 inactive, edge from c2 active", not whole.is_active(5) and whole.is_active(3)))
    out.append(("crossing play: c3 edge inactivates c4 edge but not b5 edge", inactivates(s, 5, 7) and not inactivates(s, 5, 8)))

    lad = ladder_play()
    d = arena_depth(lad.arena)
    rep = normalization_report(lad, d)
    out.append(("ladder: last move level 6 in a depth-5 arena", move_level(lad, len(lad) - 1) == 6 and d == 5))
    out.append((f"ladder: Opponent level after gadget is {rep.o_level_after} <= 3", rep.o_level_after <= 3))

    sigma, tau = duel_strategies()
    run = interact(sigma, tau)
    t = run.transcript
    out.append(("duel: view bounds 8 and 7", (sigma.bound, tau.bound) == (8, 7)))
    out.append(("duel: 15-move prefix reproduced", tuple(zip(t.moves, t.pointers))[:15] == DUEL_PREFIX))
    out.append(("duel: ending x:=t2 y:=u1 x:=t3 y:=u1 z:=t4", t.moves[-5:] == DUEL_ENDING))
    out.append(("duel: complete transcript of 20 moves", run.status is Status.COMPLETE and len(t) == 20))
    return out


def test_golden_fixtures(report):
    start = time.perf_counter()
    results = _golden()
    seconds = time.perf_counter() - start
    ok = all([report(name, good) for name, good in results])
    fast = report("golden fixtures finish within 1 s", seconds < 1.0, f"{seconds:.3f} s")
    assert ok and fast


def _cmd_random(capsys, suites, seed, out_dir):
    argv = ["random", "--seed", str(seed), "--count", str(CASES), "--check", suites, "--out-dir", str(out_dir)]
    code = cli.main(argv)
    out = capsys.readouterr().out
    footer = dict(line.split("=", 1) for line in out.rstrip("\n").split("\n\n")[-1].splitlines() if line)
    return code, int(footer["FAILURES"])


@pytest.mark.parametrize(
    "label, suites",
    [
        ("view-visibility", "visibility"),
        ("chains", "chains"),
        ("maxmin", "maxmin"),
        ("trim", "trim,spring"),
        ("gadget", "gadget"),
        ("bounds", "bounds"),
    ],
)
def test_property_suite(report, capsys, tmp_path, label, suites):
    start = time.perf_counter()
    failures = {}
    for seed in SEEDS:
        code, n = _cmd_random(capsys, suites, seed, tmp_path)
        if code or n:
            failures[seed] = n
    seconds = time.perf_counter() - start
    ok = not failures and seconds < SUITE_SECONDS
    detail = f"seeds 1-10, {CASES} cases each, {seconds:.1f} s"
    if failures:
        detail += f", failures by seed {failures}"
    report(f"property suite {label}", ok, detail)
    assert ok


def test_oracle_equivalence(report):
    res = run_suite("oracle", oracle_config(1), 200)
    ok = res.ok and res.cases == 200
    name = "fast activity and levels match the literal recursion on 200 plays of length <= 40"
    report(name, ok, f"{len(res.failures)} mismatches")
    assert ok


def test_numeric_spot_checks(report):
    checks = [
        ("hyperexp(2, 0, 5) = 5", hyperexp(2, 0, 5) == 5),
        ("hyperexp(2, 2, 3) = 256", hyperexp(2, 2, 3) == 256),
        ("interaction_bound(5, 1, 4) = 256", interaction_bound(5, 1, 4) == 256),
        (
            "depth 3 caps the tower height at 1",
            all(tower_height(n, m, 3) <= 1 for n in range(8) for m in range(8))
            and interaction_bound(7, 9, 3, 3) == hyperexp(6, 1, 6),
        ),
    ]
    ok = all([report(name, good) for name, good in checks])
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
