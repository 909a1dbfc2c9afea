"""Exact canonical labeling of edge-colored graphs.

Keys are equal exactly for color-preserving isomorphic graphs, which makes
them safe for solver memoization: a hash collision can never merge two
genuinely different positions.

Algorithm: color refinement with edge colors folded into the vertex
signatures, then backtracking over refinement-stable orderings
(individualization-refinement), taking the lexicographically least adjacency
encoding.  Automorphisms discovered when two leaves encode identically prune
symmetric branches; the pruning only ever skips subtrees that are images of
already-explored ones, so exactness is preserved.
"""

from __future__ import annotations

from .graph import ColoredGraph, GraphError

MAX_CANON_VERTICES = 24

# Byte codes in the canonical adjacency stream.
ABSENT = 0
CODE_RED = 1
CODE_BLUE = 2
CODE_PENDING = 3  # an uncolored proposed edge (solver move dedup)


class SizeExceededError(GraphError):
    """Graph beyond the canonical-labeling size bound."""


def _refine(n: int, adj: list[dict[int, int]], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition.  Sub-cells of a split
    cell are ordered by signature, so the cell order is an isomorphism
    invariant as long as the incoming order was."""
    while True:
        index_of = [0] * n
        for ci, cell in enumerate(cells):
            for v in cell:
                index_of[v] = ci
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple(sorted((code, index_of[w]) for w, code in adj[v].items()))
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
        cells = new_cells
        if not changed:
            return cells


def _encode(n: int, adj: list[dict[int, int]], order: list[int]) -> bytes:
    out = bytearray()
    for i in range(n):
        vi = order[i]
        row = adj[vi]
        for j in range(i + 1, n):
            out.append(row.get(order[j], ABSENT))
    return bytes(out)


class _CanonSearch:
    def __init__(self, n: int, adj: list[dict[int, int]]):
        self.n = n
        self.adj = adj
        self.best: bytes | None = None
        self.first: tuple[bytes, list[int]] | None = None
        self.auts: list[list[int]] = []

    def run(self) -> bytes:
        init: dict[tuple, list[int]] = {}
        for v in range(self.n):
            sig = tuple(sorted(self.adj[v].values()))
            init.setdefault(sig, []).append(v)
        cells = [init[sig] for sig in sorted(init)]
        self._search(cells, ())
        assert self.best is not None
        return self.best

    def _search(self, cells: list[list[int]], fixed: tuple[int, ...]) -> None:
        cells = _refine(self.n, self.adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            enc = _encode(self.n, self.adj, order)
            if self.first is None:
                self.first = (enc, order)
            elif enc == self.first[0]:
                # order and first order induce an automorphism.
                aut = [0] * self.n
                for a, b in zip(self.first[1], order):
                    aut[a] = b
                self.auts.append(aut)
            if self.best is None or enc < self.best:
                self.best = enc
            return
        tried: list[int] = []
        for v in sorted(cells[target]):
            if any(self._same_orbit(u, v, fixed) for u in tried):
                continue
            tried.append(v)
            branched = (
                cells[:target]
                + [[v], [w for w in cells[target] if w != v]]
                + cells[target + 1 :]
            )
            self._search(branched, fixed + (v,))

    def _same_orbit(self, u: int, v: int, fixed: tuple[int, ...]) -> bool:
        """Is v reachable from u under discovered automorphisms that fix the
        individualized prefix pointwise?"""
        gens = [a for a in self.auts if all(a[f] == f for f in fixed)]
        if not gens:
            return False
        orbit = {u}
        frontier = [u]
        while frontier:
            w = frontier.pop()
            for a in gens:
                img = a[w]
                if img == v:
                    return True
                if img not in orbit:
                    orbit.add(img)
                    frontier.append(img)
        return False

    def orbits(self) -> list[list[int]]:
        """Vertex orbits under the discovered automorphisms.  A refinement of
        the true orbit partition (possibly finer, never coarser), which is
        all the move generator needs for completeness."""
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in self.auts:
            for v in range(self.n):
                ru, rv = find(v), find(a[v])
                if ru != rv:
                    parent[ru] = rv
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())


def _adjacency_codes(g: ColoredGraph, pending: tuple[int, int] | None = None) -> tuple[list[int], list[dict[int, int]]]:
    verts = sorted(g.vertices)
    if pending is not None:
        verts = sorted(set(verts) | set(pending))
    n = len(verts)
    if n > MAX_CANON_VERTICES:
        raise SizeExceededError(f"{n} vertices exceeds canonical bound {MAX_CANON_VERTICES}")
    idx = {v: i for i, v in enumerate(verts)}
    adj: list[dict[int, int]] = [{} for _ in range(n)]
    for u, v, c in g.edges():
        adj[idx[u]][idx[v]] = int(c)
        adj[idx[v]][idx[u]] = int(c)
    if pending is not None:
        pu, pv = idx[pending[0]], idx[pending[1]]
        adj[pu][pv] = CODE_PENDING
        adj[pv][pu] = CODE_PENDING
    return verts, adj


def canonical_key(g: ColoredGraph) -> bytes:
    """Canonical byte encoding, invariant under every vertex relabeling and
    distinct for non-isomorphic colored graphs."""
    if g._ckey is not None:
        return g._ckey
    verts, adj = _adjacency_codes(g)
    n = len(verts)
    key = bytes([n]) + _CanonSearch(n, adj).run()
    g._ckey = key
    return key


def canonical_key_with_pending(g: ColoredGraph, u: int, v: int) -> bytes:
    """Canonical key of the board together with an uncolored proposed edge
    {u, v}.  Two proposals with equal keys are interchangeable moves."""
    verts, adj = _adjacency_codes(g, (u, v))
    n = len(verts)
    return bytes([n]) + _CanonSearch(n, adj).run()


def vertex_orbits(g: ColoredGraph) -> list[list[int]]:
    """Partition of the vertex set into classes of interchangeable vertices
    (a refinement of the true automorphism orbits; see _CanonSearch.orbits).
    Singleton classes are exact; merged classes are always sound."""
    verts, adj = _adjacency_codes(g)
    n = len(verts)
    if n == 0:
        return []
    search = _CanonSearch(n, adj)
    search.run()
    return [[verts[i] for i in orb] for orb in search.orbits()]
