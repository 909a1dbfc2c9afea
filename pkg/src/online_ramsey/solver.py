"""Exact minimax search for online Ramsey numbers of small targets.

Builder states are deduplicated up to color-preserving isomorphism via
canonical keys, so the infinite vertex pool collapses to finitely many
genuinely distinct moves: all non-adjacent existing pairs, one fresh-vertex
attachment per vertex orbit, and a single fresh-fresh edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .canonical import SizeExceededError, canonical_key, vertex_orbits
from .graph import BLUE, RED, ColoredGraph, TargetPair, contains_target


@dataclass(frozen=True)
class UnknownAbove:
    """The value exceeds the explored budget; an honest "don't know"."""

    budget: int

    def __str__(self) -> str:
        return f"unknown (> {self.budget})"


def candidate_moves(g: ColoredGraph) -> list[tuple[int, int]]:
    """Builder moves worth considering from this board: every non-adjacent
    existing pair, a fresh attachment to one representative per vertex
    orbit, and one fresh-fresh edge.  Isomorphic duplicates are filtered by
    the caller (by successor canonical keys), so a finer-than-true orbit
    partition is harmless."""
    moves: list[tuple[int, int]] = []
    verts = sorted(g.vertices)
    for u, v in combinations(verts, 2):
        if not g.has_edge(u, v):
            moves.append((u, v))
    fresh = g.next_fresh_id()
    for orb in vertex_orbits(g):
        moves.append((orb[0], fresh))
    moves.append((fresh, fresh + 1))
    return moves


def _rounds_needed_lower_bound(g: ColoredGraph, targets: TargetPair) -> int:
    """Admissible bound: a monochromatic target with e edges needs at least
    e edges of its color on the board, and each round adds one edge."""
    best = None
    for color, t in ((RED, targets.red), (BLUE, targets.blue)):
        te = t.edge_target_count
        need = 1 if te == 0 and g.vertex_count == 0 else max(0, te - g.edge_count_of(color))
        best = need if best is None else min(best, need)
    return best or 0


class Solver:
    """Minimax with a transposition table keyed by canonical board keys.

    The memo stores, per position, the least budget known to be winning for
    Builder and the greatest budget known to be insufficient; monotonicity
    (winning within b implies winning within b+1) makes both reusable across
    the iterative-deepening sweep.
    """

    def __init__(self, targets: TargetPair, use_memo: bool = True):
        self.targets = targets
        self.use_memo = use_memo
        self.memo: dict[bytes, list[int | None]] = {}
        self.nodes = 0

    def _target_present(self, g: ColoredGraph) -> bool:
        return contains_target(g, RED, self.targets.red) or contains_target(
            g, BLUE, self.targets.blue
        )

    def wins_within(self, g: ColoredGraph, budget: int) -> bool:
        """Can Builder force a target within ``budget`` further rounds,
        assuming optimal play by both sides?"""
        self.nodes += 1
        if self._target_present(g):
            return True
        if budget <= 0 or budget < _rounds_needed_lower_bound(g, self.targets):
            return False
        entry = None
        key = b""
        if self.use_memo:
            key = canonical_key(g)
            entry = self.memo.get(key)
            if entry is not None:
                win_within, loss_at = entry
                if win_within is not None and win_within <= budget:
                    return True
                if loss_at is not None and loss_at >= budget:
                    return False

        result = False
        seen_children: set[tuple[bytes, bytes]] = set()
        for u, v in candidate_moves(g):
            red_child = g.with_edge(u, v, RED)
            blue_child = g.with_edge(u, v, BLUE)
            if self.use_memo:
                pair = (canonical_key(red_child), canonical_key(blue_child))
                if pair in seen_children:
                    continue
                seen_children.add(pair)
            # Painter refutes the move by picking either losing color.
            if self.wins_within(red_child, budget - 1) and self.wins_within(
                blue_child, budget - 1
            ):
                result = True
                break

        if self.use_memo:
            if entry is None:
                entry = self.memo.setdefault(key, [None, None])
            if result:
                if entry[0] is None or budget < entry[0]:
                    entry[0] = budget
            else:
                if entry[1] is None or budget > entry[1]:
                    entry[1] = budget
        return result


def builder_wins_within(
    g: ColoredGraph, targets: TargetPair, budget: int, solver: Solver | None = None
) -> bool:
    """True iff Builder has a strategy from g forcing a target within
    ``budget`` further rounds.  Raises SizeExceededError beyond the
    canonical-labeling bound."""
    if solver is None:
        solver = Solver(targets)
    return solver.wins_within(g, budget)


MAX_TWO_SIDED_BUDGET = 12


def online_ramsey_number(targets: TargetPair, max_budget: int) -> int | UnknownAbove:
    """Least b such that Builder wins from the empty board within b rounds,
    or UnknownAbove(max_budget)."""
    if max_budget > MAX_TWO_SIDED_BUDGET:
        raise SizeExceededError(
            f"budget {max_budget} beyond the two-sided search bound {MAX_TWO_SIDED_BUDGET}"
        )
    solver = Solver(targets)
    empty = ColoredGraph.empty()
    for b in range(max_budget + 1):
        if solver.wins_within(empty, b):
            return b
    return UnknownAbove(max_budget)
