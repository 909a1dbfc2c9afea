"""Referee for the online Ramsey game.

Alternates Builder's edge choice and Painter's color choice, keeps the
transcript, and detects termination.  Sessions never see the game after it
ends; in particular a Builder script can rely on "if I was asked again, my
last edge did not finish the game".
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .graph import (
    BLUE,
    RED,
    Color,
    ColoredGraph,
    DuplicateEdgeError,
    LoopEdgeError,
    TargetPair,
    contains_target,
    parse_target,
)


class EngineError(Exception):
    pass


class GameOverError(EngineError):
    """Move submitted to a finished game."""


class IllegalEdgeError(EngineError):
    """Proposed pair is not a legal new edge."""


class StrategyFault(EngineError):
    """A session broke its contract; signals an implementation bug."""


class _Fresh:
    """Request for a referee-allocated new vertex."""

    __repr__ = __str__ = lambda self: "FRESH"


FRESH = _Fresh()


class GameStatus(Enum):
    ONGOING = "ongoing"
    RED_TARGET_HIT = "red_hit"
    BLUE_TARGET_HIT = "blue_hit"


@dataclass(frozen=True)
class MoveRecord:
    round: int  # 1-based
    u: int
    v: int
    color: Color


@dataclass(frozen=True)
class GameState:
    board: ColoredGraph
    transcript: tuple[MoveRecord, ...]
    targets: TargetPair
    status: GameStatus

    @property
    def rounds(self) -> int:
        return len(self.transcript)


@dataclass(frozen=True)
class Outcome:
    status: GameStatus
    rounds: int
    transcript: tuple[MoveRecord, ...]


class BuilderSession:
    """Stateful Builder decision process, queried synchronously by the
    referee.  next_move may name existing vertices or FRESH placeholders;
    the referee allocates fresh ids consecutively."""

    def next_move(self, state: GameState) -> tuple[int | _Fresh, int | _Fresh]:
        raise NotImplementedError

    def observe(self, state: GameState) -> None:
        """Called with the updated state after each Painter reply, except
        when that reply ended the game."""


class PainterSession:
    def choose_color(self, state: GameState, edge: tuple[int, int]) -> Color:
        raise NotImplementedError


def new_game(targets: TargetPair) -> GameState:
    """Empty board; vertices materialize when first touched by an edge."""
    return GameState(ColoredGraph.empty(), (), targets, GameStatus.ONGOING)


def _status_after(board: ColoredGraph, targets: TargetPair, new_color: Color) -> GameStatus:
    # A monochromatic target can only appear when an edge of its color is
    # added -- except degenerate edgeless targets (P1, K1), which appear as
    # soon as any vertex does.
    red_t, blue_t = targets.red, targets.blue
    check_red = new_color is RED or red_t.edge_target_count == 0
    check_blue = new_color is BLUE or blue_t.edge_target_count == 0
    if check_red and contains_target(board, RED, red_t):
        return GameStatus.RED_TARGET_HIT
    if check_blue and contains_target(board, BLUE, blue_t):
        return GameStatus.BLUE_TARGET_HIT
    return GameStatus.ONGOING


def apply_move(state: GameState, u: int, v: int, c: Color) -> GameState:
    """Extend the board, append to the transcript, recompute the status.

    Both targets are checked; if a single move were to complete both, the
    red target wins the tie (fixed rule, see _status_after ordering).
    """
    if state.status is not GameStatus.ONGOING:
        raise GameOverError(f"game already ended: {state.status.value}")
    try:
        board = state.board.with_edge(u, v, c)
    except (LoopEdgeError, DuplicateEdgeError) as e:
        raise IllegalEdgeError(str(e)) from e
    rec = MoveRecord(len(state.transcript) + 1, u, v, c)
    status = _status_after(board, state.targets, c)
    return GameState(board, state.transcript + (rec,), state.targets, status)


def resolve_fresh(board: ColoredGraph, pair: Sequence[int | _Fresh]) -> tuple[int, int]:
    """Replace FRESH placeholders with consecutive new vertex ids."""
    if len(pair) != 2:
        raise StrategyFault(f"move must be a pair, got {pair!r}")
    nxt = board.next_fresh_id()
    out = []
    for x in pair:
        if isinstance(x, _Fresh):
            out.append(nxt)
            nxt += 1
        elif isinstance(x, int) and not isinstance(x, bool) and x >= 0:
            out.append(x)
        else:
            raise StrategyFault(f"bad vertex reference {x!r}")
    return out[0], out[1]


def run_match(
    builder: BuilderSession,
    painter: PainterSession,
    targets: TargetPair,
    round_cap: int,
) -> Outcome:
    """Loop next_move / choose_color / apply_move until the game ends or the
    cap is reached.  A cap reached while ongoing means Painter survived."""
    if round_cap < 0:
        raise ValueError("round_cap must be >= 0")
    state = new_game(targets)
    for _ in range(round_cap):
        u, v = resolve_fresh(state.board, builder.next_move(state))
        if u == v or state.board.has_edge(u, v):
            raise StrategyFault(f"builder proposed illegal edge ({u}, {v})")
        color = painter.choose_color(state, (u, v))
        if not isinstance(color, Color):
            raise StrategyFault(f"painter returned {color!r}, not a Color")
        state = apply_move(state, u, v, color)
        if state.status is not GameStatus.ONGOING:
            break
        builder.observe(state)
    return Outcome(state.status, state.rounds, state.transcript)


def replay(transcript: Sequence[MoveRecord], targets: TargetPair) -> GameState:
    """Fold a transcript through apply_move; the result is bit-exact with
    the original game's final state."""
    state = new_game(targets)
    for rec in transcript:
        state = apply_move(state, rec.u, rec.v, rec.color)
    return state


# ---------------------------------------------------------------------------
# Transcript wire format
# ---------------------------------------------------------------------------


def transcript_to_json(
    outcome: Outcome,
    targets: TargetPair,
    cap: int,
    notes: Sequence[str] | None = None,
) -> dict:
    doc = {
        "targets": {"red": targets.red.format(), "blue": targets.blue.format()},
        "cap": cap,
        "moves": [
            {"r": rec.round, "u": rec.u, "v": rec.v, "c": rec.color.letter}
            for rec in outcome.transcript
        ],
        "status": outcome.status.value,
        "rounds": outcome.rounds,
    }
    if notes:
        for mv, note in zip(doc["moves"], notes):
            mv["note"] = note
    return doc


def transcript_from_json(doc: dict) -> tuple[tuple[MoveRecord, ...], TargetPair, int, GameStatus]:
    targets = TargetPair(parse_target(doc["targets"]["red"]), parse_target(doc["targets"]["blue"]))
    moves = tuple(
        MoveRecord(m["r"], m["u"], m["v"], Color.from_letter(m["c"])) for m in doc["moves"]
    )
    status = GameStatus(doc["status"])
    return moves, targets, int(doc["cap"]), status
