"""Command-line front end.

Every command prints a plain-text report that ends with a block of
``KEY=VALUE`` lines. Exit codes: 0 success, 1 validation or property
failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from . import fixtures
from .backtrack import activity, level_report, move_levels
from .bounds import within
from .checks import DUEL_CHECKS, PLAY_CHECKS, SUITES, run_case
from .core import INFINITE, Arena, InvalidPlayError, Play, Polarity, arena_depth, validate_arena
from .formats import (
    ParseError,
    load_arena,
    load_play_file,
    load_strategy_file,
    serialize_arena,
    serialize_play,
    serialize_strategy,
    write_text,
)
from .gadget import OFF, ON, RESERVED_PREFIX, normalization_report, verify_gadget_views
from .generate import GenConfig, duel_case, play_case
from .render import render_ascii, render_dot
from .strategy import Status, interact, summarize, validate_strategy
from .trim import TrimSpec, trim
from .views import first_invisible

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _footer(pairs: dict[str, object]) -> list[str]:
    return [""] + [f"{k}={v}" for k, v in pairs.items()]


def _emit(lines: list[str]) -> None:
    sys.stdout.write("\n".join(lines) + "\n")


def _depth_text(d) -> str:
    return "inf" if d == INFINITE else str(d)


def _arena_for(path: Path, arena_name: str, explicit: str | None) -> Arena:
    """``--arena`` wins; otherwise ``<arena-name>.arena`` beside the file."""
    if explicit:
        arena = load_arena(explicit)
    else:
        guess = path.parent / f"{arena_name}.arena"
        if not guess.exists():
            raise UsageError(f"no arena file given and {guess} does not exist (use --arena)")
        arena = load_arena(guess)
    if arena.name != arena_name:
        raise UsageError(f"file {path} is over arena {arena_name!r} but the arena file declares {arena.name!r}")
    return arena


def _load_play(path: str, arena_path: str | None) -> tuple[Play, object]:
    pf = load_play_file(path)
    arena = _arena_for(Path(path), pf.arena_name, arena_path)
    return pf.bind(arena), pf


def _require_playable(s: Play, pf) -> None:
    if s.violations:
        v = s.violations[0]
        line = pf.line_of(v.index)
        where = f" at line {line}" if line is not None else ""
        raise InvalidPlayError(f"{v.kind}{where}: {v.detail}")
    bad = first_invisible(s)
    if bad is not None:
        raise InvalidPlayError(f"move {bad} (line {pf.line_of(bad)}) points outside its view")


def _write_or_print(out: str | None, text: str, lines: list[str], label: str) -> None:
    if out:
        write_text(out, text)
        lines.append(f"wrote {label} to {out}")
    else:
        lines.append(text.rstrip("\n"))


# -- commands -------------------------------------------------------------


def cmd_validate(args) -> int:
    arena = load_arena(args.arena)
    lines = [f"arena {arena.name}: {len(arena.moves)} moves, depth {_depth_text(arena_depth(arena))}"]
    bad = validate_arena(arena)
    for v in bad:
        lines.append(f"arena: {v}")
    footer = {"ARENA_VIOLATIONS": len(bad)}
    ok = not bad
    if args.play:
        pf = load_play_file(args.play)
        if pf.arena_name != arena.name:
            lines.append(f"play is over arena {pf.arena_name!r}, not {arena.name!r}")
            ok = False
        s = pf.bind(arena)
        for v in s.violations:
            line = pf.line_of(v.index)
            where = f" at line {line}" if line is not None else ""
            extra = f" ({v.detail})" if v.detail else ""
            lines.append(f"{v.kind}{where}{extra}")
        visible = None
        if not s.violations:
            bad_move = first_invisible(s)
            visible = bad_move is None
            if not visible:
                lines.append(f"not visible: move {bad_move} at line {pf.line_of(bad_move)} points outside its view")
        lines.append(f"play: {len(s)} moves")
        footer.update(
            PLAY_MOVES=len(s),
            PLAY_VIOLATIONS=len(s.violations),
            VISIBLE="n/a" if visible is None else str(visible).lower(),
        )
        ok = ok and not s.violations and bool(visible)
    footer["STATUS"] = "PASS" if ok else "FAIL"
    lines.append("PASS" if ok else "FAIL")
    _emit(lines + _footer(footer))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_analyze(args) -> int:
    s, pf = _load_play(args.play, args.arena)
    _require_playable(s, pf)
    levels = move_levels(s)
    rep = level_report(s, levels)
    d = arena_depth(s.arena)
    pl, ol = rep.player_levels[Polarity.P], rep.player_levels[Polarity.O]
    lines = [
        f"play over {s.arena.name}: {len(s)} moves; arena depth {_depth_text(d)}",
        f"levels: {' '.join(map(str, levels))}; play level {rep.play_level}",
        f"P level {pl}; O level {ol}; real level {rep.real_level}; principal {rep.principal}",
    ]
    exceeds = d != INFINITE and max(pl, ol) > d - 2
    if exceeds:
        lines.append("NOTE level exceeds depth-2")
    if args.activity:
        lines.append("activity by prefix (edges named by their later move):")
        for e in range(1, len(s)):
            t = activity(s, e)
            act = " ".join(map(str, t.active_edges())) or "-"
            ina = " ".join(map(str, t.inactive_edges())) or "-"
            lines.append(f"  prefix 0..{e}: active {act}; inactive {ina}")
    _emit(
        lines
        + _footer(
            {
                "MOVES": len(s),
                "LEVELS": ",".join(map(str, levels)),
                "PLAY_LEVEL": rep.play_level,
                "P_LEVEL": pl,
                "O_LEVEL": ol,
                "REAL_LEVEL": rep.real_level,
                "PRINCIPAL": rep.principal,
                "DEPTH": _depth_text(d),
                "EXCEEDS_DEPTH_MINUS_2": str(exceeds).lower(),
            }
        )
    )
    return EXIT_OK


def cmd_trim(args) -> int:
    s, pf = _load_play(args.play, args.arena)
    _require_playable(s, pf)
    mu = TrimSpec(args.level, Polarity(args.player))
    t = trim(s, mu)
    before, after = level_report(s), level_report(t)
    lines = [
        f"trim by level {mu.level} of {mu.player}: {len(s)} -> {len(t)} moves",
        f"before: {before.summary()}",
        f"after:  {after.summary()}",
    ]
    _write_or_print(args.output, serialize_play(t), lines, "trimmed play")
    p = mu.player
    _emit(
        lines
        + _footer(
            {
                "MOVES_BEFORE": len(s),
                "MOVES_AFTER": len(t),
                f"{p}_LEVEL_BEFORE": before.player_levels[p],
                f"{p}_LEVEL_AFTER": after.player_levels[p],
                "VISIBLE": str(first_invisible(t) is None).lower(),
            }
        )
    )
    return EXIT_OK


def cmd_gadget(args) -> int:
    s, pf = _load_play(args.play, args.arena)
    _require_playable(s, pf)
    d = arena_depth(s.arena)
    if d == INFINITE or d < 2:
        raise InvalidPlayError(f"the gadget report needs a finite arena depth of at least 2, got {_depth_text(d)}")
    rep = normalization_report(s, int(d))
    g = rep.gadget
    views = verify_gadget_views(s)
    visible = first_invisible(g.play) is None
    ok = rep.ok and bool(views) and visible
    lines = [
        f"gadget play: {len(s)} -> {len(g.play)} moves over {g.enlarged.arena.name}",
        f"O level before {rep.o_level_before}; after {rep.o_level_after}; depth {rep.depth}; limit {rep.limit}",
        f"views: {'PASS' if views else 'FAIL ' + views.detail}",
        "PASS" if ok else "FAIL",
    ]
    if args.output:
        arena_out = Path(args.output).parent / f"{g.enlarged.arena.name}.arena"
        write_text(arena_out, serialize_arena(g.enlarged.arena))
        lines.append(f"wrote enlarged arena to {arena_out}")
    _write_or_print(args.output, serialize_play(g.play), lines, "gadget play")
    _emit(
        lines
        + _footer(
            {
                "MOVES_BEFORE": len(s),
                "MOVES_AFTER": len(g.play),
                "O_LEVEL_BEFORE": rep.o_level_before,
                "O_LEVEL_AFTER": rep.o_level_after,
                "DEPTH": rep.depth,
                "LIMIT": rep.limit,
                "VISIBLE": str(visible).lower(),
                "STATUS": "PASS" if ok else "FAIL",
            }
        )
    )
    return EXIT_OK if ok else EXIT_FAIL


def _load_strategy(path: str, arena_path: str | None):
    sf = load_strategy_file(path)
    return sf.bind(_arena_for(Path(path), sf.arena_name, arena_path))


def cmd_interact(args) -> int:
    sigma = _load_strategy(args.sigma, args.arena)
    tau = _load_strategy(args.tau, args.arena)
    if sigma.arena != tau.arena:
        raise UsageError("the two strategies are over different arenas")
    if sigma.owner is not Polarity.P or tau.owner is not Polarity.O:
        raise UsageError("give the Player strategy first and the Opponent strategy second")
    lines = []
    bad = [(x, v) for x in (sigma, tau) for v in validate_strategy(x)]
    for x, v in bad:
        lines.append(f"{x.owner}-strategy: {v}")
    if bad:
        _emit(lines + ["FAIL"] + _footer({"STATUS": "FAIL", "STRATEGY_VIOLATIONS": len(bad)}))
        return EXIT_FAIL
    run = interact(sigma, tau, args.max_steps)
    d = arena_depth(sigma.arena)
    summ = summarize(run, None if d == INFINITE else d)
    finished = summ.status is not Status.STEP_LIMIT
    ok = finished and summ.bound_ok and (summ.refined_bound is None or within(summ.length, summ.refined_bound))
    lines.append(f"transcript: {summ.length} moves, status {summ.status}")
    if not finished:
        lines.append(f"stopped after {summ.length} moves, before the interaction finished")
    lines.append(f"strategy levels: sigma {summ.sigma_level}, tau {summ.tau_level}; view bound k = {summ.k}")
    lines.append(f"transcript levels: P {summ.p_level}, O {summ.o_level}")
    lines.append("last index vs bound:")
    lines.append(f"  {'bound':<28}{'height':>7}  value")
    b = min(summ.sigma_level, summ.tau_level)
    lines.append(f"  {'k tower, b = min(n, m)':<28}{b + 1:>7}  {summ.bound}")
    if summ.refined_bound is not None:
        rb = min(summ.sigma_level, summ.tau_level, d - 2)
        lines.append(f"  {f'2k tower, depth {d}':<28}{rb + 1:>7}  {summ.refined_bound}")
    lines.append(f"  {'transcript last index':<28}{'':>7}  {summ.length - 1}")
    _write_or_print(args.output, serialize_play(run.transcript), lines, "transcript")
    lines.append("PASS" if ok else "FAIL")
    footer = {
        "MOVES": summ.length,
        "INTERACTION_STATUS": summ.status,
        "SIGMA_LEVEL": summ.sigma_level,
        "TAU_LEVEL": summ.tau_level,
        "P_LEVEL": summ.p_level,
        "O_LEVEL": summ.o_level,
        "K": summ.k,
        "BOUND": summ.bound,
    }
    if summ.refined_bound is not None:
        footer["REFINED_BOUND"] = summ.refined_bound
    footer["STATUS"] = "PASS" if ok else "FAIL"
    _emit(lines + _footer(footer))
    return EXIT_OK if ok else EXIT_FAIL


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI or N, got {text!r}") from None


def _suites(text: str) -> list[str]:
    names = [t.strip() for t in text.split(",") if t.strip()]
    if names == ["all"]:
        return list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown or not names:
        raise argparse.ArgumentTypeError(f"unknown check {', '.join(unknown) or text!r}; choose all or {', '.join(SUITES)}")
    return names


def _messages(task: tuple[str, GenConfig, int]) -> tuple[str, ...]:
    f = run_case(*task)
    return f.messages if f else ()


def _dump_failure(out_dir: Path, suite: str, cfg: GenConfig, index: int) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = f"{suite}-seed{cfg.seed}-case{index}"
    written = []
    if suite in PLAY_CHECKS:
        case = play_case(cfg, index)
        files = {f"{case.arena.name}.arena": serialize_arena(case.arena), f"{stem}.play": serialize_play(case.play)}
    else:
        case = duel_case(cfg, index)
        files = {
            f"{case.arena.name}.arena": serialize_arena(case.arena),
            f"{stem}-sigma.strategy": serialize_strategy(case.sigma),
            f"{stem}-tau.strategy": serialize_strategy(case.tau),
        }
    for name, text in files.items():
        write_text(out_dir / name, text)
        written.append(out_dir / name)
    return written


def cmd_random(args) -> int:
    try:
        cfg = GenConfig(
            seed=args.seed,
            depth=args.depth,
            branching=args.branching,
            length=args.length,
            propensity=args.propensity,
            bound=args.bound,
        )
    except ValueError as e:
        raise UsageError(str(e)) from None
    lines = []
    footer: dict[str, object] = {"SEED": cfg.seed, "COUNT": args.count}
    total_fail = 0
    pool = ProcessPoolExecutor(args.jobs) if args.jobs > 1 else None
    try:
        for suite in args.check:
            tasks = [(suite, cfg, i) for i in range(args.count)]
            results = pool.map(_messages, tasks, chunksize=32) if pool else map(_messages, tasks)
            failed = [(i, msgs) for i, msgs in enumerate(results) if msgs]
            total_fail += len(failed)
            lines.append(f"{suite}: {args.count} cases, {len(failed)} failures")
            for i, msgs in failed:
                lines.append(f"  case {i}: {msgs[0]}")
                for p in _dump_failure(Path(args.out_dir), suite, cfg, i):
                    lines.append(f"    wrote {p}")
            footer[f"FAILURES_{suite.upper()}"] = len(failed)
    finally:
        if pool:
            pool.shutdown()
    ok = total_fail == 0
    lines.append("PASS" if ok else "FAIL")
    footer["FAILURES"] = total_fail
    footer["STATUS"] = "PASS" if ok else "FAIL"
    _emit(lines + _footer(footer))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_render(args) -> int:
    s, _ = _load_play(args.play, args.arena)
    if s.violations:
        raise InvalidPlayError(f"cannot draw an invalid play: {s.violations[0]}")
    gadget_names = {ON, OFF, RESERVED_PREFIX + ON, RESERVED_PREFIX + OFF}
    # enlarged arenas are named after their base with a trailing '+'
    marks = [i for i, m in enumerate(s.moves) if s.arena.name.endswith("+") and m in gadget_names]
    text = render_dot(s, marks, name=s.arena.name) if args.format == "dot" else render_ascii(s, marks)
    sys.stdout.write(text)
    _emit(_footer({"NODES": len(s), "ARCS": sum(t is not None for t in s.pointers), "FORMAT": args.format}))
    return EXIT_OK


def cmd_demo(args) -> int:
    out = Path(args.directory)
    out.mkdir(parents=True, exist_ok=True)
    files: dict[str, str] = {}
    cross = fixtures.crossing_play()
    files[f"{cross.arena.name}.arena"] = serialize_arena(cross.arena)
    files["crossing.play"] = serialize_play(cross)
    files["crossing-repointed.play"] = serialize_play(fixtures.crossing_play_repointed())
    for s, stem in ((fixtures.ladder_play(), "ladder"), (fixtures.ladder_play_shifted(), "ladder-shifted")):
        files[f"{s.arena.name}.arena"] = serialize_arena(s.arena)
        files[f"{stem}.play"] = serialize_play(s)
    sigma, tau = fixtures.duel_strategies()
    files[f"{sigma.arena.name}.arena"] = serialize_arena(sigma.arena)
    files["sigma.strategy"] = serialize_strategy(sigma)
    files["tau.strategy"] = serialize_strategy(tau)
    lines = []
    for name, text in files.items():
        write_text(out / name, text)
        lines.append(f"wrote {out / name}")
    _emit(lines + _footer({"FILES": len(files)}))
    return EXIT_OK


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hogames", description="Plays, views and backtracking levels of game arenas.")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_arena(p):
        p.add_argument("--arena", help="arena file (default: <arena-name>.arena next to the input)")
        return p

    p = sub.add_parser("validate", help="check an arena and optionally a play over it")
    p.add_argument("arena")
    p.add_argument("play", nargs="?")
    p.set_defaults(func=cmd_validate)

    p = with_arena(sub.add_parser("analyze", help="backtracking levels of a play"))
    p.add_argument("play")
    p.add_argument("--activity", action="store_true", help="print the active edges of every prefix")
    p.set_defaults(func=cmd_analyze)

    p = with_arena(sub.add_parser("trim", help="remove the interior of a player's top-level edges"))
    p.add_argument("play")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--player", choices=("P", "O"), required=True)
    p.add_argument("-o", "--output", help="write the trimmed play here")
    p.set_defaults(func=cmd_trim)

    p = with_arena(sub.add_parser("gadget", help="insert off/on pairs and report Opponent's level"))
    p.add_argument("play")
    p.add_argument("-o", "--output", help="write the gadget play here (its arena goes beside it)")
    p.set_defaults(func=cmd_gadget)

    p = with_arena(sub.add_parser("interact", help="play a Player strategy against an Opponent strategy"))
    p.add_argument("sigma")
    p.add_argument("tau")
    p.add_argument("--max-steps", type=int, default=None, help="stop after this many moves")
    p.add_argument("-o", "--output", help="write the transcript here")
    p.set_defaults(func=cmd_interact)

    d = GenConfig()
    p = sub.add_parser("random", help="run property suites on seeded random cases")
    p.add_argument("--seed", type=int, default=d.seed)
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--check", type=_suites, default=list(SUITES), help=f"all or a comma list of {', '.join(SUITES)}")
    p.add_argument("--depth", type=_range, default=d.depth, help="arena layers, LO..HI")
    p.add_argument("--branching", type=_range, default=d.branching, help="moves per layer, LO..HI")
    p.add_argument("--length", type=int, default=d.length, help="maximum play length")
    p.add_argument("--propensity", type=float, default=d.propensity, help="chance of a non-immediate pointer")
    p.add_argument("--bound", type=_range, default=d.bound, help="strategy view bound, LO..HI")
    p.add_argument("--jobs", type=int, default=1, help="worker processes; output order is unaffected")
    p.add_argument("--out-dir", default="random-failures", help="where counterexamples are written")
    p.set_defaults(func=cmd_random)

    p = with_arena(sub.add_parser("render", help="draw the pointer diagram of a play"))
    p.add_argument("play")
    p.add_argument("--format", choices=("dot", "ascii"), default="ascii")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("demo", help="write the worked example files into a directory")
    p.add_argument("directory")
    p.set_defaults(func=cmd_demo)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (ParseError, UsageError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidPlayError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        _emit(_footer({"STATUS": "FAIL"}))
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
