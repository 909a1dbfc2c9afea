"""Exhaustive verification of both sides of the theorem at desk scale.

verify_upper sweeps every painter reply sequence against the constructive
builder; verify_lower_exhaustive sweeps every canonically distinct builder
move sequence against the blocking painter.  Neither prunes in a way that
could hide a bug: the upper sweep explores both colors at every move, the
lower sweep's only merging is between isomorphic boards.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .builders import budget as theorem_budget
from .builders import constructive_builder
from .canonical import canonical_key
from .engine import (
    GameStatus,
    MoveRecord,
    Outcome,
    apply_move,
    new_game,
    resolve_fresh,
    transcript_to_json,
)
from .graph import (
    BLUE,
    RED,
    Color,
    ColoredGraph,
    TargetPair,
    contains_target,
    creates_red_violation,
    has_cycle_with_length_in,
    longest_path_order,
    path,
    star,
)
from .solver import candidate_moves


class AuditViolation(Exception):
    """The transcript breaks a blocking-painter guarantee; carries the
    1-based index of the first offending move (len+1 for final-state
    violations)."""

    def __init__(self, move_index: int, message: str):
        super().__init__(f"move {move_index}: {message}")
        self.move_index = move_index


@dataclass
class VerificationReport:
    l: int
    budget: int
    result: str  # "verified" | "counterexample"
    nodes: int
    max_rounds: int
    seconds: float
    counterexample: dict | None = None

    @property
    def verified(self) -> bool:
        return self.result == "verified"

    def to_json(self) -> dict:
        doc = {
            "l": self.l,
            "budget": self.budget,
            "result": self.result,
            "nodes": self.nodes,
            "max_rounds": self.max_rounds,
            "seconds": round(self.seconds, 3),
        }
        if self.counterexample is not None:
            doc["counterexample"] = self.counterexample
        return doc


def star_path_targets(l: int) -> TargetPair:
    return TargetPair(star(3), path(l))


# ---------------------------------------------------------------------------
# Upper bound: constructive builder vs. every painter reply sequence
# ---------------------------------------------------------------------------


class _CounterexampleFound(Exception):
    def __init__(self, transcript: tuple[MoveRecord, ...]):
        self.transcript = transcript


class _UpperSweep:
    """DFS over painter reply prefixes.  At each node the blocking painter's
    reply is explored first, so when a tightened cap fails, the first (and
    reported) counterexample is the pure blocking-painter line, which then
    passes audit_blocking_painter."""

    def __init__(self, l: int, cap: int):
        self.l = l
        self.cap = cap
        self.targets = star_path_targets(l)
        self.nodes = 0
        self.max_rounds = 0

    def _replay(self, prefix: tuple[Color, ...]):
        builder = constructive_builder(self.l)
        state = new_game(self.targets)
        for c in prefix:
            u, v = resolve_fresh(state.board, builder.next_move(state))
            state = apply_move(state, u, v, c)
            builder.observe(state)
        return builder, state

    def explore(self, prefix: tuple[Color, ...], builder=None, state=None) -> None:
        if builder is None:
            builder, state = self._replay(prefix)
        live = builder
        u, v = resolve_fresh(state.board, builder.next_move(state))
        blocking = BLUE if creates_red_violation(state.board, u, v, self.l) else RED
        for c in (blocking, blocking.other()):
            child = apply_move(state, u, v, c)
            self.nodes += 1
            if child.status is not GameStatus.ONGOING:
                self.max_rounds = max(self.max_rounds, child.rounds)
            elif child.rounds >= self.cap:
                raise _CounterexampleFound(child.transcript)
            elif live is not None:
                live.observe(child)
                sub_builder, live = live, None
                self.explore(prefix + (c,), sub_builder, child)
            else:
                self.explore(prefix + (c,))


def _sweep_prefix(l: int, cap: int, prefix_letters: str) -> tuple[str, int, int, list | None]:
    """Worker entry: run the sweep below one reply prefix.  Returns
    (result, nodes, max_rounds, counterexample moves or None)."""
    prefix = tuple(Color.from_letter(ch) for ch in prefix_letters)
    sweep = _UpperSweep(l, cap)
    try:
        sweep.explore(prefix)
    except _CounterexampleFound as cx:
        moves = [[r.round, r.u, r.v, r.color.letter] for r in cx.transcript]
        return ("counterexample", sweep.nodes, sweep.max_rounds, moves)
    return ("verified", sweep.nodes, sweep.max_rounds, None)


def _partition_prefixes(l: int, cap: int, depth: int) -> tuple[list[str], int, int]:
    """Split the reply tree at the given depth.  Returns the ongoing
    prefixes (in the same blocking-first order the sequential sweep uses),
    the node count of the shared top region, and its max terminated rounds.
    Raises _CounterexampleFound for any cap-limit leaf above the split."""
    targets = star_path_targets(l)
    out: list[str] = []
    nodes = 0
    max_rounds = 0

    def grow(prefix: tuple[Color, ...]) -> None:
        nonlocal nodes, max_rounds
        if len(prefix) == depth:
            out.append("".join(c.letter for c in prefix))
            return
        builder = constructive_builder(l)
        state = new_game(targets)
        for c in prefix:
            u, v = resolve_fresh(state.board, builder.next_move(state))
            state = apply_move(state, u, v, c)
            builder.observe(state)
        u, v = resolve_fresh(state.board, builder.next_move(state))
        blocking = BLUE if creates_red_violation(state.board, u, v, l) else RED
        for c in (blocking, blocking.other()):
            child = apply_move(state, u, v, c)
            nodes += 1
            if child.status is not GameStatus.ONGOING:
                max_rounds = max(max_rounds, child.rounds)
            elif child.rounds >= cap:
                raise _CounterexampleFound(child.transcript)
            else:
                grow(prefix + (c,))

    grow(())
    return out, nodes, max_rounds


def verify_upper(l: int, budget: int | None = None, workers: int = 1) -> VerificationReport:
    """Explore the full binary tree of painter replies against
    constructive_builder(l); verified iff every leaf ends within the budget.
    """
    if l < 2:
        raise ValueError("l must be >= 2")
    cap = theorem_budget(l) if budget is None else budget
    t0 = time.monotonic()
    if cap <= 0:
        return _counterexample_report(l, cap, 0, 0, time.monotonic() - t0, ())
    if workers > 1:
        depth = 4
        try:
            prefixes, nodes, max_rounds = _partition_prefixes(l, cap, depth)
        except _CounterexampleFound as cx:
            return _counterexample_report(l, cap, 0, 0, time.monotonic() - t0, cx.transcript)
        counterexample = None
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for result, n, mr, cx in pool.map(
                _sweep_prefix, [l] * len(prefixes), [cap] * len(prefixes), prefixes
            ):
                nodes += n
                max_rounds = max(max_rounds, mr)
                if cx is not None and counterexample is None:
                    counterexample = cx
        seconds = time.monotonic() - t0
        if counterexample is not None:
            transcript = tuple(
                MoveRecord(r, u, v, Color.from_letter(cl)) for r, u, v, cl in counterexample
            )
            return _counterexample_report(l, cap, nodes, max_rounds, seconds, transcript)
        return VerificationReport(l, cap, "verified", nodes, max_rounds, seconds)

    sweep = _UpperSweep(l, cap)
    try:
        sweep.explore(())
    except _CounterexampleFound as cx:
        seconds = time.monotonic() - t0
        return _counterexample_report(l, cap, sweep.nodes, sweep.max_rounds, seconds, cx.transcript)
    return VerificationReport(l, cap, "verified", sweep.nodes, sweep.max_rounds, time.monotonic() - t0)


def _counterexample_report(l, cap, nodes, max_rounds, seconds, transcript) -> VerificationReport:
    outcome = Outcome(GameStatus.ONGOING, len(transcript), transcript)
    doc = transcript_to_json(outcome, star_path_targets(l), cap)
    return VerificationReport(l, cap, "counterexample", nodes, max_rounds, seconds, doc)


# ---------------------------------------------------------------------------
# Lower bound: every builder line vs. the blocking painter
# ---------------------------------------------------------------------------


def verify_lower_exhaustive(l: int, budget: int | None = None) -> VerificationReport:
    """Fix the painter to the blocking rule and search all canonically
    distinct Builder move sequences of the given length; verified iff none
    reaches a red K_{1,3} or a blue P_l."""
    if l < 2:
        raise ValueError("l must be >= 2")
    cap = theorem_budget(l) - 1 if budget is None else budget
    targets = star_path_targets(l)
    t0 = time.monotonic()
    memo: dict[bytes, int] = {}
    nodes = 0
    deepest = 0

    red_t, blue_t = targets.red, targets.blue

    def search(g: ColoredGraph, remaining: int, trail: list[MoveRecord]):
        nonlocal nodes, deepest
        nodes += 1
        deepest = max(deepest, len(trail))
        if contains_target(g, RED, red_t) or contains_target(g, BLUE, blue_t):
            return tuple(trail)
        if remaining == 0:
            return None
        key = canonical_key(g)
        if memo.get(key, -1) >= remaining:
            return None
        for u, v in candidate_moves(g):
            c = BLUE if creates_red_violation(g, u, v, l) else RED
            trail.append(MoveRecord(len(trail) + 1, u, v, c))
            found = search(g.with_edge(u, v, c), remaining - 1, trail)
            if found is not None:
                return found
            trail.pop()
        memo[key] = remaining
        return None

    found = search(ColoredGraph.empty(), cap, [])
    seconds = time.monotonic() - t0
    if found is not None:
        state = new_game(targets)
        for rec in found:
            state = apply_move(state, rec.u, rec.v, rec.color)
        outcome = Outcome(state.status, state.rounds, state.transcript)
        doc = transcript_to_json(outcome, targets, cap)
        return VerificationReport(l, cap, "counterexample", nodes, deepest, seconds, doc)
    return VerificationReport(l, cap, "verified", nodes, deepest, seconds)


# ---------------------------------------------------------------------------
# The counting-argument audit
# ---------------------------------------------------------------------------


@dataclass
class PainterAudit:
    """Quantities of the survival argument: X is the set of red-degree-two
    vertices, s counts red path components."""

    degree_two_count: int
    red_path_components: int
    red_edges: int
    blue_edges: int
    longest_blue_path: int

    def to_json(self) -> dict:
        return {
            "x": self.degree_two_count,
            "s": self.red_path_components,
            "red_edges": self.red_edges,
            "blue_edges": self.blue_edges,
            "longest_blue_path": self.longest_blue_path,
        }


def _red_components(g: ColoredGraph) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for s0 in sorted(g.vertices):
        if s0 in seen or g.degree(s0, RED) == 0:
            continue
        comp = [s0]
        seen.add(s0)
        stack = [s0]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v, RED):
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
                    stack.append(u)
        comps.append(comp)
    return comps


def audit_blocking_painter(transcript: tuple[MoveRecord, ...], l: int) -> PainterAudit:
    """Replay a transcript produced against blocking_painter(l), re-deriving
    every reply and checking the board invariant after each move; then
    compute the counting quantities and check the longest-blue-path bound.
    """
    board = ColoredGraph.empty()
    for i, rec in enumerate(transcript, start=1):
        expected = BLUE if creates_red_violation(board, rec.u, rec.v, l) else RED
        if rec.color is not expected:
            raise AuditViolation(i, f"blocking painter would answer {expected.letter}, transcript has {rec.color.letter}")
        board = board.with_edge(rec.u, rec.v, rec.color)
        if board.max_degree(RED) > 2:
            raise AuditViolation(i, "red subgraph grew a vertex of degree three")
        if has_cycle_with_length_in(board, RED, 3, l // 2):
            raise AuditViolation(i, f"red cycle of length <= {l // 2} appeared")

    comps = _red_components(board)
    path_comps = 0
    all_paths = True
    for comp in comps:
        edges = sum(g_deg for g_deg in (board.degree(v, RED) for v in comp)) // 2
        is_path = edges == len(comp) - 1 and all(board.degree(v, RED) <= 2 for v in comp)
        if is_path:
            path_comps += 1
        else:
            all_paths = False
    x_count = sum(1 for v in board.vertices if board.degree(v, RED) == 2)
    blue_longest = longest_path_order(board, BLUE)
    audit = PainterAudit(
        degree_two_count=x_count,
        red_path_components=path_comps,
        red_edges=board.edge_count_of(RED),
        blue_edges=board.edge_count_of(BLUE),
        longest_blue_path=blue_longest,
    )
    if all_paths and blue_longest < l:
        # Edge form of the survival bound: a blue path has at most
        # 2|X| + s edges, i.e. order at most 2|X| + s + 1.
        if blue_longest > 2 * x_count + path_comps + 1:
            raise AuditViolation(
                len(transcript) + 1,
                f"blue path order {blue_longest} exceeds 2|X|+s+1 = {2 * x_count + path_comps + 1}",
            )
    return audit
