"""Command-line entry point: solve, verify, audit, replay, play, serve.

Exit codes: 0 success/verified, 2 counterexample or audit violation,
1 usage or internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .builders import budget as theorem_budget
from .builders import constructive_builder
from .engine import (
    FRESH,
    GameStatus,
    apply_move,
    new_game,
    replay,
    resolve_fresh,
    transcript_from_json,
)
from .graph import Color, GraphError, TargetPair, parse_target
from .painters import blocking_painter, random_painter
from .solver import UnknownAbove, online_ramsey_number
from .verify import AuditViolation, audit_blocking_painter, verify_lower_exhaustive, verify_upper


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would sys.exit(2); we want 1
        raise _UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="online-ramsey", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="exact online Ramsey number for a target pair")
    solve.add_argument("--red", required=True, help="red target (S3, P4, C5, K3, M2, ...)")
    solve.add_argument("--blue", required=True, help="blue target")
    solve.add_argument("--max-budget", type=int, default=8)
    solve.add_argument("--json", action="store_true")

    up = sub.add_parser("verify-upper", help="sweep all painter replies against the builder")
    up.add_argument("--l", type=int, required=True)
    up.add_argument("--budget", type=int, default=None, help="default floor(3l/2)")
    up.add_argument("--workers", type=int, default=None)
    up.add_argument("--json", action="store_true")

    low = sub.add_parser("verify-lower", help="sweep all builder lines against the blocking painter")
    low.add_argument("--l", type=int, required=True)
    low.add_argument("--budget", type=int, default=None, help="default floor(3l/2)-1")
    low.add_argument("--json", action="store_true")

    aud = sub.add_parser("audit", help="audit a transcript against the blocking painter rule")
    aud.add_argument("--in", dest="infile", required=True)
    aud.add_argument("--l", type=int, required=True)
    aud.add_argument("--json", action="store_true")

    rep = sub.add_parser("replay", help="pretty-print a transcript and re-verify its status")
    rep.add_argument("--in", dest="infile", required=True)

    play = sub.add_parser("play", help="interactive terminal game")
    play.add_argument("--l", type=int, required=True)
    play.add_argument("--as", dest="role", choices=["painter", "builder"], default="painter")
    play.add_argument("--seed", type=int, default=0, help="seed when playing against random")
    play.add_argument(
        "--opponent",
        choices=["constructive", "blocking", "random"],
        default=None,
        help="machine side; defaults to constructive vs a human painter, blocking vs a human builder",
    )

    serve = sub.add_parser("serve", help="start the play service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--data-dir", default=None, help="directory for stored transcripts")
    serve.add_argument("--max-l", type=int, default=30)
    serve.add_argument("--ui-dir", default=None, help="static web UI directory to mount at /")
    return p


def _cmd_solve(args) -> int:
    targets = TargetPair(parse_target(args.red), parse_target(args.blue))
    value = online_ramsey_number(targets, args.max_budget)
    if isinstance(value, UnknownAbove):
        doc = {"red": args.red, "blue": args.blue, "value": None, "unknown_above": value.budget}
        print(json.dumps(doc) if args.json else f"unknown above {value.budget}")
        return 0
    doc = {"red": args.red, "blue": args.blue, "value": value}
    print(json.dumps(doc) if args.json else value)
    return 0


def _report_exit(rep, as_json: bool) -> int:
    if as_json:
        print(json.dumps(rep.to_json()))
    else:
        print(f"{rep.result}, max_rounds={rep.max_rounds}, nodes={rep.nodes}, {rep.seconds:.2f}s")
        if rep.counterexample is not None:
            print(json.dumps(rep.counterexample))
    return 0 if rep.verified else 2


def _cmd_verify_upper(args) -> int:
    workers = args.workers
    if workers is None:
        workers = int(os.environ.get("RAMSEY_WORKERS", "1"))
    rep = verify_upper(args.l, args.budget, workers=workers)
    return _report_exit(rep, args.json)


def _cmd_verify_lower(args) -> int:
    rep = verify_lower_exhaustive(args.l, args.budget)
    return _report_exit(rep, args.json)


def _cmd_audit(args) -> int:
    with open(args.infile, encoding="utf-8") as f:
        doc = json.load(f)
    moves, targets, cap, status = transcript_from_json(doc)
    try:
        audit = audit_blocking_painter(moves, args.l)
    except AuditViolation as v:
        print(f"violation: {v}", file=sys.stderr)
        return 2
    print(json.dumps(audit.to_json()) if args.json else audit)
    return 0


def _render_board(state) -> str:
    lines = []
    for v in sorted(state.board.vertices):
        nbrs = " ".join(
            f"{u}{state.board.color_of(v, u).letter}" for u in sorted(state.board.neighbors(v))
        )
        lines.append(f"  {v}: {nbrs}")
    return "\n".join(lines) if lines else "  (empty)"


def _cmd_replay(args) -> int:
    with open(args.infile, encoding="utf-8") as f:
        doc = json.load(f)
    moves, targets, cap, recorded_status = transcript_from_json(doc)
    state = new_game(targets)
    for rec in moves:
        state = apply_move(state, rec.u, rec.v, rec.color)
        print(f"round {rec.round}: {rec.u}-{rec.v} {rec.color.letter}  -> {state.status.value}")
    print(_render_board(state))
    print(f"status: {state.status.value} after {state.rounds} rounds (cap {cap})")
    if state.status is not recorded_status:
        print("recorded status does not match replay", file=sys.stderr)
        return 2
    return 0


def _cmd_play(args, in_stream=None, out_stream=None) -> int:
    fin = in_stream or sys.stdin
    fout = out_stream or sys.stdout
    l = args.l
    cap = theorem_budget(l)
    from .verify import star_path_targets

    targets = star_path_targets(l)

    def say(msg: str) -> None:
        print(msg, file=fout)

    state = new_game(targets)
    say(f"(K_{{1,3}}, P_{l}) game, budget {cap} rounds; you are the {args.role}.")
    if args.role == "painter":
        opponent = args.opponent or "constructive"
        if opponent != "constructive":
            raise _UsageError("a human painter plays against the constructive builder")
        machine = constructive_builder(l)
        while state.status is GameStatus.ONGOING and state.rounds < cap:
            u, v = resolve_fresh(state.board, machine.next_move(state))
            say(_render_board(state))
            say(f"round {state.rounds + 1}/{cap}: builder proposes {u}-{v}; color it R or B?")
            line = fin.readline()
            if not line:
                say("no input; aborting")
                return 1
            letter = line.strip().upper()[:1]
            if letter not in ("R", "B"):
                say("please answer R or B")
                continue
            state = apply_move(state, u, v, Color.from_letter(letter))
            if state.status is GameStatus.ONGOING:
                machine.observe(state)
    else:
        opponent = args.opponent or "blocking"
        if opponent == "blocking":
            machine = blocking_painter(l)
        elif opponent == "random":
            machine = random_painter(args.seed)
        else:
            raise _UsageError("a human builder plays against blocking or random")
        say("enter moves as 'u v'; use 'new' for a fresh vertex (e.g. '0 new' or 'new new')")
        while state.status is GameStatus.ONGOING and state.rounds < cap:
            say(_render_board(state))
            say(f"round {state.rounds + 1}/{cap}: your edge?")
            line = fin.readline()
            if not line:
                say("no input; aborting")
                return 1
            parts = line.split()
            if len(parts) != 2:
                say("need two endpoints")
                continue
            try:
                pair = tuple(FRESH if p.lower() == "new" else int(p) for p in parts)
                u, v = resolve_fresh(state.board, pair)
                if u == v or state.board.has_edge(u, v):
                    say("illegal edge")
                    continue
                color = machine.choose_color(state, (u, v))
                state = apply_move(state, u, v, color)
                say(f"painter answers {color.letter}")
            except ValueError:
                say("could not parse that")
                continue
    say(_render_board(state))
    say(f"result: {state.status.value} after {state.rounds} rounds")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(max_l=args.max_l, data_dir=args.data_dir, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


_COMMANDS = {
    "solve": _cmd_solve,
    "verify-upper": _cmd_verify_upper,
    "verify-lower": _cmd_verify_lower,
    "audit": _cmd_audit,
    "replay": _cmd_replay,
    "play": _cmd_play,
    "serve": _cmd_serve,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, ValueError, GraphError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
