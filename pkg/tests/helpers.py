"""Independent oracles and generators for the test suite.

Everything here deliberately avoids the library's own algorithms: longest
paths by exhaustive path enumeration, isomorphism by permutation search,
minimax by searching a fixed finite vertex universe without memoization.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from online_ramsey import (
    BLUE,
    RED,
    BuilderSession,
    Color,
    ColoredGraph,
    GameStatus,
    TargetPair,
    contains_target,
    replay,
)


def brute_longest_path_order(g: ColoredGraph, color: Color) -> int:
    """Longest path order by DFS enumeration of every simple path."""
    if g.vertex_count == 0:
        return 0
    best = 1

    def extend(v: int, seen: set[int], length: int) -> None:
        nonlocal best
        best = max(best, length)
        for u in g.neighbors(v, color):
            if u not in seen:
                seen.add(u)
                extend(u, seen, length + 1)
                seen.remove(u)

    for s in g.vertices:
        extend(s, {s}, 1)
    return best


def brute_isomorphic(g1: ColoredGraph, g2: ColoredGraph) -> bool:
    """Color-preserving isomorphism by brute-force permutation search."""
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False
    v1 = sorted(g1.vertices)
    v2 = sorted(g2.vertices)
    edges1 = {(min(a, b), max(a, b)): c for a, b, c in g1.edges()}
    for perm in permutations(v2):
        mapping = dict(zip(v1, perm))
        if all(g2.color_of(mapping[a], mapping[b]) is c for (a, b), c in edges1.items()):
            return True
    return False


def random_colored_graph(rng: random.Random, max_vertices: int = 10, edge_prob: float = 0.35) -> ColoredGraph:
    n = rng.randint(0, max_vertices)
    edges = {}
    for u, v in combinations(range(n), 2):
        if rng.random() < edge_prob:
            edges[(u, v)] = RED if rng.random() < 0.5 else BLUE
    return ColoredGraph(range(n), edges)


def random_permuted(rng: random.Random, g: ColoredGraph) -> ColoredGraph:
    """Relabel g by a random permutation onto a random id range."""
    verts = sorted(g.vertices)
    shift = rng.randint(0, 5)
    new_ids = list(range(shift, shift + len(verts)))
    rng.shuffle(new_ids)
    mapping = dict(zip(verts, new_ids))
    edges = {(mapping[u], mapping[v]): c for u, v, c in g.edges()}
    return ColoredGraph(new_ids, edges)


class RandomBuilder(BuilderSession):
    """Test-only builder: uniformly random legal moves over a bounded pool
    of vertex ids (existing plus fresh)."""

    def __init__(self, seed: int):
        self.rng = random.Random(seed)

    def next_move(self, state):
        board = state.board
        verts = sorted(board.vertices)
        fresh = board.next_fresh_id()
        pool = verts + [fresh, fresh + 1]
        while True:
            u, v = self.rng.sample(pool, 2)
            if not board.has_edge(u, v):
                return (u, v)


def reference_builder_wins(
    targets: TargetPair, budget: int, start: ColoredGraph | None = None
) -> bool:
    """Generator-agnostic minimax: Builder draws any missing edge on a fixed
    vertex universe of the existing vertices plus 2*budget spares (fresh
    vertices beyond that can never help within the budget).  No memo, no
    isomorphism reasoning."""
    if start is None:
        start = ColoredGraph.empty()
    universe = sorted(start.vertices)
    nxt = start.next_fresh_id()
    universe += list(range(nxt, nxt + 2 * budget))

    def wins(g: ColoredGraph, b: int) -> bool:
        if contains_target(g, RED, targets.red) or contains_target(g, BLUE, targets.blue):
            return True
        if b == 0:
            return False
        for u, v in combinations(universe, 2):
            if g.has_edge(u, v):
                continue
            if wins(g.with_edge(u, v, RED), b - 1) and wins(g.with_edge(u, v, BLUE), b - 1):
                return True
        return False

    return wins(start, budget)


def assert_replay_deterministic(transcript, targets) -> None:
    """Replaying a transcript reproduces board and status bit-exactly."""
    state = replay(transcript, targets)
    state2 = replay(transcript, targets)
    assert state.board == state2.board
    assert state.status == state2.status
    assert state.transcript == transcript


def fold_status(transcript, targets) -> GameStatus:
    return replay(transcript, targets).status
