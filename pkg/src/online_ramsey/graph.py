"""Two-colored simple graphs and target-pattern detectors.

The shared board of the online Ramsey game: a growing simple graph whose
edges carry one of two colors.  Graphs are immutable values; every mutation
returns a new graph, so boards can be shared freely across searches.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from itertools import combinations
from typing import Iterable, Iterator


class GraphError(Exception):
    pass


class LoopEdgeError(GraphError):
    """Attempt to add an edge from a vertex to itself."""


class DuplicateEdgeError(GraphError):
    """Attempt to recolor a pair that already carries an edge."""


class UnsupportedTargetError(GraphError):
    """Target outside the supported size bounds."""


MAX_EXPLICIT_EDGES = 10


class Color(IntEnum):
    """Edge color.  Red sorts before Blue; the order is fixed because the
    canonical byte encoding depends on it (Red=1, Blue=2, absent=0)."""

    RED = 1
    BLUE = 2

    @property
    def letter(self) -> str:
        return "R" if self is Color.RED else "B"

    @staticmethod
    def from_letter(s: str) -> "Color":
        if s == "R":
            return Color.RED
        if s == "B":
            return Color.BLUE
        raise ValueError(f"unknown color letter {s!r}")

    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


RED = Color.RED
BLUE = Color.BLUE


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class ColoredGraph:
    """Simple graph with red/blue edges and non-negative integer vertex ids.

    Immutable: ``with_edge`` returns a new graph.  A pair carries at most one
    color; recoloring is forbidden (game rule).
    """

    __slots__ = ("_vertices", "_edges", "_adj", "_ckey")

    def __init__(self, vertices: Iterable[int] = (), edges: dict[tuple[int, int], Color] | None = None):
        edges = edges or {}
        verts = set(vertices)
        adj: dict[int, dict[int, Color]] = {v: {} for v in verts}
        for (u, v), c in edges.items():
            if u == v:
                raise LoopEdgeError(f"loop at {u}")
            for w in (u, v):
                if w < 0:
                    raise GraphError(f"negative vertex id {w}")
                if w not in adj:
                    adj[w] = {}
                    verts.add(w)
            adj[u][v] = c
            adj[v][u] = c
        self._vertices = frozenset(verts)
        self._edges = {_norm(u, v): c for (u, v), c in edges.items()}
        self._adj = adj
        self._ckey: bytes | None = None

    @classmethod
    def empty(cls) -> "ColoredGraph":
        return cls()

    # -- queries ----------------------------------------------------------

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def edges(self) -> Iterator[tuple[int, int, Color]]:
        for (u, v), c in self._edges.items():
            yield u, v, c

    def color_of(self, u: int, v: int) -> Color | None:
        return self._edges.get(_norm(u, v))

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self._edges

    def has_vertex(self, v: int) -> bool:
        return v in self._vertices

    def neighbors(self, v: int, color: Color | None = None) -> list[int]:
        nbrs = self._adj.get(v, {})
        if color is None:
            return list(nbrs)
        return [u for u, c in nbrs.items() if c is color]

    def degree(self, v: int, color: Color | None = None) -> int:
        nbrs = self._adj.get(v, {})
        if color is None:
            return len(nbrs)
        return sum(1 for c in nbrs.values() if c is color)

    def edge_count_of(self, color: Color) -> int:
        return sum(1 for c in self._edges.values() if c is color)

    def max_degree(self, color: Color) -> int:
        return max((self.degree(v, color) for v in self._vertices), default=0)

    def next_fresh_id(self) -> int:
        return max(self._vertices, default=-1) + 1

    # -- construction -----------------------------------------------------

    def with_edge(self, u: int, v: int, c: Color) -> "ColoredGraph":
        if u == v:
            raise LoopEdgeError(f"loop at {u}")
        if u < 0 or v < 0:
            raise GraphError(f"negative vertex id in ({u}, {v})")
        if self.has_edge(u, v):
            raise DuplicateEdgeError(f"pair {{{u}, {v}}} already colored")
        g = ColoredGraph.__new__(ColoredGraph)
        g._vertices = self._vertices | {u, v}
        g._edges = dict(self._edges)
        g._edges[_norm(u, v)] = c
        g._adj = {w: dict(n) for w, n in self._adj.items()}
        for w in (u, v):
            if w not in g._adj:
                g._adj[w] = {}
        g._adj[u][v] = c
        g._adj[v][u] = c
        g._ckey = None
        return g

    # -- equality / repr ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, frozenset(self._edges.items())))

    def __repr__(self) -> str:
        parts = [f"{u}-{v}{c.letter}" for (u, v), c in sorted(self._edges.items())]
        return f"ColoredGraph(n={self.vertex_count}, [{' '.join(parts)}])"

    # -- JSON wire format ---------------------------------------------------

    def to_json(self) -> dict:
        """``{"vertices": n, "edges": [[u, v, "R"|"B"], ...]}`` where
        ``vertices`` is the id upper bound."""
        n = max(self._vertices, default=-1) + 1
        edges = [[u, v, c.letter] for (u, v), c in sorted(self._edges.items())]
        return {"vertices": n, "edges": edges}

    @classmethod
    def from_json(cls, obj: dict) -> "ColoredGraph":
        n = int(obj["vertices"])
        edges: dict[tuple[int, int], Color] = {}
        for u, v, letter in obj["edges"]:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside declared vertex range {n}")
            pair = _norm(int(u), int(v))
            if pair in edges:
                raise DuplicateEdgeError(f"pair {pair} listed twice")
            edges[pair] = Color.from_letter(letter)
        return cls(range(n), edges)


def add_edge(g: ColoredGraph, u: int, v: int, c: Color) -> ColoredGraph:
    """Add the edge {u, v} with color c; new vertex ids join the vertex set."""
    return g.with_edge(u, v, c)


# ---------------------------------------------------------------------------
# Target specifications
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TargetSpec:
    """A small target graph: star/path/cycle/matching/clique or an explicit
    edge list (at most MAX_EXPLICIT_EDGES edges)."""

    kind: str  # "star" | "path" | "cycle" | "matching" | "clique" | "explicit"
    size: int = 0
    explicit_edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.kind == "explicit":
            if not self.explicit_edges:
                raise UnsupportedTargetError("explicit target needs at least one edge")
            if len(self.explicit_edges) > MAX_EXPLICIT_EDGES:
                raise UnsupportedTargetError(
                    f"explicit target has {len(self.explicit_edges)} edges, max {MAX_EXPLICIT_EDGES}"
                )
            for u, v in self.explicit_edges:
                if u == v:
                    raise UnsupportedTargetError("explicit target contains a loop")
        else:
            if self.kind not in ("star", "path", "cycle", "matching", "clique"):
                raise UnsupportedTargetError(f"unknown target kind {self.kind!r}")
            if self.size < 1:
                raise UnsupportedTargetError(f"{self.kind} parameter must be >= 1")
            if self.kind == "cycle" and self.size < 3:
                raise UnsupportedTargetError("cycle needs at least 3 vertices")

    @property
    def edge_target_count(self) -> int:
        """Number of edges in one copy of the target."""
        if self.kind == "star":
            return self.size
        if self.kind == "path":
            return self.size - 1
        if self.kind == "cycle":
            return self.size
        if self.kind == "matching":
            return self.size
        if self.kind == "clique":
            return self.size * (self.size - 1) // 2
        return len(self.explicit_edges)

    def format(self) -> str:
        letter = {"star": "S", "path": "P", "cycle": "C", "matching": "M", "clique": "K"}
        if self.kind in letter:
            return f"{letter[self.kind]}{self.size}"
        return "X" + "+".join(f"{u}-{v}" for u, v in self.explicit_edges)

    def __str__(self) -> str:
        return self.format()


def star(k: int) -> TargetSpec:
    """K_{1,k}: one center, k leaf edges."""
    return TargetSpec("star", k)


def path(n: int) -> TargetSpec:
    """P_n: path on n vertices (n-1 edges)."""
    return TargetSpec("path", n)


def cycle(n: int) -> TargetSpec:
    return TargetSpec("cycle", n)


def matching(n: int) -> TargetSpec:
    """n pairwise disjoint edges."""
    return TargetSpec("matching", n)


def clique(n: int) -> TargetSpec:
    return TargetSpec("clique", n)


def explicit(edges: Iterable[tuple[int, int]]) -> TargetSpec:
    return TargetSpec("explicit", 0, tuple((min(u, v), max(u, v)) for u, v in edges))


def parse_target(s: str) -> TargetSpec:
    """Parse the mini-grammar S<k>, P<n>, C<n>, K<n>, M<n>, X<u>-<v>+..."""
    s = s.strip()
    if not s:
        raise UnsupportedTargetError("empty target spec")
    head, rest = s[0].upper(), s[1:]
    if head == "X":
        pairs = []
        for part in rest.split("+"):
            a, b = part.split("-")
            pairs.append((int(a), int(b)))
        return explicit(pairs)
    try:
        n = int(rest)
    except ValueError:
        raise UnsupportedTargetError(f"bad target spec {s!r}") from None
    ctor = {"S": star, "P": path, "C": cycle, "K": clique, "M": matching}.get(head)
    if ctor is None:
        raise UnsupportedTargetError(f"unknown target shape {head!r}")
    return ctor(n)


@dataclass(frozen=True)
class TargetPair:
    """The win condition: (red target, blue target)."""

    red: TargetSpec
    blue: TargetSpec

    def of(self, color: Color) -> TargetSpec:
        return self.red if color is Color.RED else self.blue


# ---------------------------------------------------------------------------
# Longest path (exact)
# ---------------------------------------------------------------------------


def _color_components(g: ColoredGraph, color: Color) -> list[list[int]]:
    """Connected components of the single-color subgraph, ignoring vertices
    with no edge of that color."""
    seen: set[int] = set()
    comps = []
    for s in g.vertices:
        if s in seen or g.degree(s, color) == 0:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v, color):
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
                    stack.append(u)
        comps.append(comp)
    return comps


def _tree_diameter_path(adj: dict[int, list[int]], start: int) -> list[int]:
    """Longest path in a tree component: double BFS, returning the vertex
    sequence of a diameter path."""

    def bfs_far(src: int) -> tuple[int, dict[int, int]]:
        parent = {src: src}
        frontier = [src]
        last = src
        while frontier:
            nxt = []
            for v in frontier:
                last = v
                for u in adj[v]:
                    if u not in parent:
                        parent[u] = v
                        nxt.append(u)
            frontier = nxt
        return last, parent

    a, _ = bfs_far(start)
    b, parent = bfs_far(a)
    seq = [b]
    while seq[-1] != a:
        seq.append(parent[seq[-1]])
    return seq


_BITMASK_DP_LIMIT = 16


def _longest_path_bitmask(verts: list[int], adj: dict[int, list[int]]) -> list[int]:
    """Exact longest path in a small component via DP over (visited set, last
    vertex), reconstructing one optimal sequence."""
    idx = {v: i for i, v in enumerate(verts)}
    nbr_masks = [0] * len(verts)
    for v in verts:
        m = 0
        for u in adj[v]:
            m |= 1 << idx[u]
        nbr_masks[idx[v]] = m
    # state -> predecessor (mask, last) for reconstruction
    reachable: dict[tuple[int, int], tuple[int, int] | None] = {}
    frontier = {}
    for i in range(len(verts)):
        frontier[(1 << i, i)] = None
    best_state = next(iter(frontier))
    reachable.update(frontier)
    while frontier:
        nxt: dict[tuple[int, int], tuple[int, int] | None] = {}
        for (mask, last) in frontier:
            cand = nbr_masks[last] & ~mask
            while cand:
                bit = cand & -cand
                cand ^= bit
                j = bit.bit_length() - 1
                state = (mask | bit, j)
                if state not in reachable and state not in nxt:
                    nxt[state] = (mask, last)
        for state, pred in nxt.items():
            reachable[state] = pred
            if state[0].bit_count() > best_state[0].bit_count():
                best_state = state
        frontier = nxt
    seq = []
    st: tuple[int, int] | None = best_state
    while st is not None:
        seq.append(verts[st[1]])
        st = reachable[st]
    seq.reverse()
    return seq


def _longest_path_backtrack(verts: list[int], adj: dict[int, list[int]]) -> list[int]:
    """Plain DFS over simple paths; exact, for components too large for the
    bitmask DP.  Fine on the sparse boards this game produces."""
    best: list[int] = [verts[0]]
    n = len(verts)
    on_path: set[int] = set()
    seq: list[int] = []

    def extend(v: int) -> None:
        nonlocal best
        seq.append(v)
        on_path.add(v)
        if len(seq) > len(best):
            best = list(seq)
        if len(seq) < n:
            for u in adj[v]:
                if u not in on_path:
                    extend(u)
        seq.pop()
        on_path.remove(v)

    for s in verts:
        extend(s)
    return best


def longest_path_vertices(g: ColoredGraph, color: Color) -> list[int]:
    """One longest path in the color subgraph, as a vertex sequence.

    Empty list on a graph with no vertices; a single vertex when the color
    subgraph has no edge.
    """
    if g.vertex_count == 0:
        return []
    best: list[int] = [min(g.vertices)]
    for comp in _color_components(g, color):
        adj = {v: g.neighbors(v, color) for v in comp}
        m = sum(len(a) for a in adj.values()) // 2
        if m == len(comp) - 1:
            seq = _tree_diameter_path(adj, comp[0])
        elif len(comp) <= _BITMASK_DP_LIMIT:
            seq = _longest_path_bitmask(comp, adj)
        else:
            seq = _longest_path_backtrack(comp, adj)
        if len(seq) > len(best):
            best = seq
    return best


def longest_path_order(g: ColoredGraph, color: Color) -> int:
    """Number of vertices of a longest path using only edges of ``color``.

    1 when the graph has vertices but no such edge; 0 on the empty graph.
    """
    return len(longest_path_vertices(g, color))


def find_path_of_order(g: ColoredGraph, color: Color, n: int) -> list[int] | None:
    """A color path with exactly n vertices, or None.  Any longer path is
    truncated, so the result's ends always span a valid P_n."""
    seq = longest_path_vertices(g, color)
    if len(seq) < n:
        return None
    return seq[:n]


# ---------------------------------------------------------------------------
# Cycle detection
# ---------------------------------------------------------------------------


def has_cycle_with_length_in(g: ColoredGraph, color: Color, lo: int, hi: int) -> bool:
    """True iff the color subgraph contains a simple cycle of length k for
    some lo <= k <= hi."""
    lo = max(lo, 3)  # simple graphs have no shorter cycles
    if hi < lo:
        return False
    # Anchor each cycle at its minimum vertex to avoid re-finding it.
    order = sorted(g.vertices)
    for anchor in order:
        if g.degree(anchor, color) < 2:
            continue
        # DFS over paths anchor -> ... -> v using vertices > anchor, then a
        # closing edge v -> anchor.
        found = _anchored_cycle(g, color, anchor, lo, hi)
        if found:
            return True
    return False


def _anchored_cycle(g: ColoredGraph, color: Color, anchor: int, lo: int, hi: int) -> bool:
    path = [anchor]
    on_path = {anchor}

    def walk(v: int) -> bool:
        depth = len(path)  # edges so far = depth - 1... path holds vertices
        for u in g.neighbors(v, color):
            if u == anchor and depth >= lo:
                return True
            if u <= anchor or u in on_path or depth >= hi:
                continue
            path.append(u)
            on_path.add(u)
            if walk(u):
                return True
            path.pop()
            on_path.remove(u)
        return False

    return walk(anchor)


# ---------------------------------------------------------------------------
# Target containment
# ---------------------------------------------------------------------------


def _max_matching_at_least(g: ColoredGraph, color: Color, n: int) -> bool:
    edges = [(u, v) for u, v, c in g.edges() if c is color]
    if len(edges) < n:
        return False

    def rec(i: int, used: set[int], count: int) -> bool:
        if count >= n:
            return True
        if count + (len(edges) - i) < n:
            return False
        for j in range(i, len(edges)):
            u, v = edges[j]
            if u in used or v in used:
                continue
            used.add(u)
            used.add(v)
            if rec(j + 1, used, count + 1):
                return True
            used.discard(u)
            used.discard(v)
        return False

    return rec(0, set(), 0)


def _has_clique(g: ColoredGraph, color: Color, n: int) -> bool:
    if n == 1:
        return g.vertex_count > 0
    cand = [v for v in g.vertices if g.degree(v, color) >= n - 1]
    for combo in combinations(sorted(cand), n):
        if all(g.color_of(u, v) is color for u, v in combinations(combo, 2)):
            return True
    return False


def _has_explicit_subgraph(g: ColoredGraph, color: Color, pattern: tuple[tuple[int, int], ...]) -> bool:
    """Non-induced subgraph test: map pattern vertices injectively so that
    every pattern edge lands on an edge of the given color."""
    pverts = sorted({w for e in pattern for w in e})
    padj: dict[int, set[int]] = {w: set() for w in pverts}
    for u, v in pattern:
        padj[u].add(v)
        padj[v].add(u)
    # Most-constrained-first ordering: descending pattern degree.
    pverts.sort(key=lambda w: -len(padj[w]))
    hverts = [v for v in g.vertices]
    assign: dict[int, int] = {}
    used: set[int] = set()

    def place(i: int) -> bool:
        if i == len(pverts):
            return True
        w = pverts[i]
        need = len(padj[w])
        for h in hverts:
            if h in used or g.degree(h, color) < need:
                continue
            ok = True
            for w2 in padj[w]:
                if w2 in assign and g.color_of(h, assign[w2]) is not color:
                    ok = False
                    break
            if ok:
                assign[w] = h
                used.add(h)
                if place(i + 1):
                    return True
                del assign[w]
                used.discard(h)
        return False

    return place(0)


def contains_target(g: ColoredGraph, color: Color, t: TargetSpec) -> bool:
    """True iff the color subgraph of g contains t as a (not necessarily
    induced) subgraph."""
    if t.kind == "star":
        return any(g.degree(v, color) >= t.size for v in g.vertices)
    if t.kind == "path":
        if t.size == 1:
            return g.vertex_count > 0
        # Quick necessary condition before the exact search.
        if g.edge_count_of(color) < t.size - 1:
            return False
        return longest_path_order(g, color) >= t.size
    if t.kind == "cycle":
        return has_cycle_with_length_in(g, color, t.size, t.size)
    if t.kind == "matching":
        return _max_matching_at_least(g, color, t.size)
    if t.kind == "clique":
        return _has_clique(g, color, t.size)
    return _has_explicit_subgraph(g, color, t.explicit_edges)


def find_target_witness(g: ColoredGraph, color: Color, t: TargetSpec) -> list[tuple[int, int]] | None:
    """Edges of one copy of the target in the color subgraph, for display.

    Implemented for stars and paths (the shapes the play service hosts);
    returns None for other kinds or when the target is absent.
    """
    if t.kind == "star":
        for v in sorted(g.vertices):
            nbrs = g.neighbors(v, color)
            if len(nbrs) >= t.size:
                return [(v, u) for u in sorted(nbrs)[: t.size]]
        return None
    if t.kind == "path":
        seq = find_path_of_order(g, color, t.size)
        if seq is None or len(seq) < 2:
            return None
        return list(zip(seq, seq[1:]))
    return None


# ---------------------------------------------------------------------------
# Painter-rule violation predicate
# ---------------------------------------------------------------------------


def creates_red_violation(g: ColoredGraph, u: int, v: int, l: int) -> bool:
    """Would coloring the new edge {u, v} red create a red vertex of degree
    >= 3, or close a red cycle of length k with 3 <= k <= floor(l/2)?"""
    g2 = g.with_edge(u, v, Color.RED)
    if contains_target(g2, Color.RED, _STAR3):
        return True
    return has_cycle_with_length_in(g2, Color.RED, 3, l // 2)


_STAR3 = star(3)
