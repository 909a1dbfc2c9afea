"""Builder sessions for forcing a red K_{1,3} or a blue P_l in floor(3l/2)
rounds.

Scripts are generator coroutines: each yield proposes an edge (vertex ids or
FRESH placeholders) and receives the resolved, colored MoveRecord.  The
referee never resumes a script after the game ends, so scripts encode the
forcing arguments directly: "this edge is forced blue" becomes "if I am ever
resumed here, the reply was blue" -- a red reply would have completed a red
K_{1,3} and ended the game.  A violated expectation raises StrategyFault,
which the exhaustive sweeps surface as a transcription bug.

Recursive sub-constructions run inside wrapper frames that watch their own
fresh-vertex board and hand back the ends of the blue sub-path they forced;
vertex disjointness from enclosing frames holds because sub-scripts only
ever touch their own vertices and referee-allocated fresh ids.
"""

from __future__ import annotations

from typing import Generator

from .engine import FRESH, BuilderSession, GameState, MoveRecord, StrategyFault
from .graph import BLUE, RED, ColoredGraph, find_path_of_order

Move = tuple  # (u | FRESH, v | FRESH)
Script = Generator[Move, MoveRecord, None]


def budget(l: int) -> int:
    """The theorem's round budget floor(3l/2)."""
    return 3 * l // 2


class FrameTrace:
    """Frame-stack annotations: which part of the construction issued each
    move.  Purely diagnostic."""

    def __init__(self) -> None:
        self.stack: list[str] = ["opening"]
        self.notes: list[str] = []

    def push(self, name: str) -> None:
        self.stack.append(name)

    def pop(self) -> None:
        self.stack.pop()

    def current(self) -> str:
        return self.stack[-1]


def _enter(tr: FrameTrace | None, name: str) -> None:
    if tr is not None:
        tr.push(name)


class ScriptBuilder(BuilderSession):
    """Drives a script coroutine through the referee's next_move/observe
    protocol and enforces the session-level move budget."""

    def __init__(self, script: Script, max_moves: int | None = None, trace: FrameTrace | None = None):
        self._gen = script
        self._started = False
        self._last: MoveRecord | None = None
        self.moves_issued = 0
        self.max_moves = max_moves
        self.trace = trace

    def next_move(self, state: GameState):
        try:
            if not self._started:
                self._started = True
                mv = next(self._gen)
            else:
                mv = self._gen.send(self._last)
        except StopIteration:
            raise StrategyFault("builder plan exhausted while the game is ongoing") from None
        self.moves_issued += 1
        if self.max_moves is not None and self.moves_issued > self.max_moves:
            raise StrategyFault(
                f"builder issued {self.moves_issued} moves, budget {self.max_moves}"
            )
        if self.trace is not None:
            self.trace.notes.append(self.trace.current())
        return mv

    def observe(self, state: GameState) -> None:
        self._last = state.transcript[-1]

    @property
    def notes(self) -> list[str]:
        return self.trace.notes if self.trace is not None else []


# ---------------------------------------------------------------------------
# Script building blocks
# ---------------------------------------------------------------------------


def _forced_blue(u, v) -> Script:
    """Play an edge whose red reply would complete a red K_{1,3}.  Returns
    the record; being resumed with a red reply means the forcing analysis
    was wrong."""
    rec = yield (u, v)
    if rec.color is not BLUE:
        raise StrategyFault(f"edge ({rec.u}, {rec.v}) was expected to be forced blue")
    return rec


def _then_end(u, v) -> Script:
    """Play an edge after which the game ends under either color."""
    yield (u, v)
    raise StrategyFault("game should have ended after this move")


def _unreachable() -> None:
    raise StrategyFault("script resumed past a point where the game must have ended")


def lemma1_extend(endpoint: int) -> Script:
    """Extend a blue path at its endpoint: probe up to three new vertices.

    Stops at the first blue reply and returns the new endpoint; three red
    replies complete a red K_{1,3}, so the script is never resumed past
    them.
    """
    for _ in range(3):
        rec = yield (endpoint, FRESH)
        if rec.color is BLUE:
            return rec.v
    _unreachable()


def _lemma1_final(endpoint: int) -> Script:
    """Path extension whose success ends the game (the extension completes
    the blue target)."""
    yield from lemma1_extend(endpoint)
    _unreachable()


def _subgame(l_sub: int, tr: FrameTrace | None) -> Generator[Move, MoveRecord, tuple[int, int]]:
    """Recursive frame: run the construction for a shorter blue path on
    fresh vertices and return the ends (x, y) of the forced blue P_{l_sub}.

    Asserts the frame contract: every move stays inside the frame's own
    vertex pool, and the frame uses at most floor(3*l_sub/2) moves.
    """
    _enter(tr, f"subgame:P{l_sub}")
    sub = _play(l_sub, tr)
    local = ColoredGraph.empty()
    moves = 0
    cap = budget(l_sub)
    mv = next(sub)
    while True:
        for w in mv:
            if w is not FRESH and not local.has_vertex(w):
                raise StrategyFault(f"subgame move touches foreign vertex {w}")
        rec = yield mv
        moves += 1
        if moves > cap:
            raise StrategyFault(f"subgame for P_{l_sub} exceeded its budget {cap}")
        local = local.with_edge(rec.u, rec.v, rec.color)
        if rec.color is BLUE:
            seq = find_path_of_order(local, BLUE, l_sub)
            if seq is not None:
                if tr is not None:
                    tr.pop()
                return seq[0], seq[-1]
        mv = sub.send(rec)


# ---------------------------------------------------------------------------
# Base cases: 2 <= l <= 6
# ---------------------------------------------------------------------------


def _star_script(l: int) -> Script:
    """l in {2, 3}: a star with l+1 edges holds either a red K_{1,3} or l
    blue edges at one center, i.e. a blue P_{l+1} >= P_l."""
    rec = yield (FRESH, FRESH)
    center = rec.u
    for _ in range(l):
        yield (center, FRESH)
    _unreachable()


def _script_l4() -> Script:
    """Probe one center until a blue K_{1,2} appears; finish by path
    extension, or by two cross edges when the second blue only arrives on
    the fourth probe."""
    rec = yield (FRESH, FRESH)
    v0 = rec.u
    blues: list[int] = []
    reds: list[int] = []
    (blues if rec.color is BLUE else reds).append(rec.v)
    while len(blues) < 2:
        rec = yield (v0, FRESH)
        (blues if rec.color is BLUE else reds).append(rec.v)
    if len(reds) == 2:
        r = reds[0]
        rec = yield (r, blues[0])
        if rec.color is BLUE:
            _unreachable()  # blues[1] v0 blues[0] r completed the P4
        yield from _then_end(r, blues[1])
    else:
        yield from _lemma1_final(blues[1])


def _build_p4() -> Generator[Move, MoveRecord, tuple[list[int], str]]:
    """Draw a path on four vertices whose color pattern, after reversal
    normalization, is one of bbb/bbr/brb/brr/rrr.  The third edge grows the
    end that makes rbr impossible."""
    rec1 = yield (FRESH, FRESH)
    a, b = rec1.u, rec1.v
    c1 = rec1.color
    rec2 = yield (b, FRESH)
    c = rec2.v
    c2 = rec2.color
    if c1 is RED and c2 is BLUE:
        rec3 = yield (a, FRESH)  # grow at the red end: d-a-b-c
        p, cols = [rec3.v, a, b, c], (rec3.color, c1, c2)
    else:
        rec3 = yield (c, FRESH)  # grow at c: a-b-c-d
        p, cols = [a, b, c, rec3.v], (c1, c2, rec3.color)
    pattern = "".join("b" if x is BLUE else "r" for x in cols)
    if pattern in ("rbb", "rrb"):
        p.reverse()
        pattern = pattern[::-1]
    if pattern == "rbr":
        raise StrategyFault("rbr pattern cannot arise from the guarded construction")
    return p, pattern


def _script_l56(l: int, tr: FrameTrace | None = None) -> Script:
    p, pattern = yield from _build_p4()
    v1, v2, v3, v4 = p
    _enter(tr, f"p4:{pattern}")

    if pattern == "bbb":
        if l == 5:
            yield from _lemma1_final(v4)
        else:
            end = yield from lemma1_extend(v4)
            yield from _lemma1_final(end)

    elif pattern == "brb":
        rec5 = yield (v2, FRESH)
        v5 = rec5.v
        rec6 = yield (v3, v5)
        if rec5.color is BLUE and rec6.color is BLUE:
            # v1 v2 v5 v3 v4 is a blue P5; resumption means l == 6.
            yield from _lemma1_final(v4)
        elif rec5.color is RED and rec6.color is RED:
            if l == 5:
                yield from _forced_blue(v1, v5)
                yield from _then_end(v4, v5)  # v2 v1 v5 v4 v3
            else:
                recn = yield from _forced_blue(v2, FRESH)
                v6 = recn.v
                yield from _forced_blue(v5, v6)
                yield from _then_end(v4, v5)  # v1 v2 v6 v5 v4 v3
        else:
            if rec5.color is BLUE:  # mirror to the v2v5-red, v3v5-blue labels
                v1, v2, v3, v4 = v4, v3, v2, v1
            yield from _forced_blue(v2, v4)
            # v1 v2 v4 v3 v5 is a blue P5; resumption means l == 6.
            yield from _lemma1_final(v5)

    elif pattern == "bbr":
        rec5 = yield (v3, FRESH)
        v5 = rec5.v
        if rec5.color is BLUE:
            rec6 = yield (v1, v4)
            if rec6.color is RED:
                yield from _forced_blue(v4, v5)
                # v1 v2 v3 v5 v4 is a blue P5; l == 6 continues.
                yield from _lemma1_final(v4)
            else:
                # v4 v1 v2 v3 v5 is a blue P5; l == 6 continues.
                yield from _lemma1_final(v5)
        else:
            rec6 = yield (v4, FRESH)
            rec7 = yield (v4, FRESH)
            v6, v7 = rec6.v, rec7.v
            if rec6.color is BLUE and rec7.color is BLUE:
                yield from _forced_blue(v3, v6)
                _unreachable()  # v1 v2 v3 v6 v4 (v7) completed the target
            else:
                if rec6.color is not BLUE:
                    v6, v7 = v7, v6  # now v4v6 blue, v4v7 red
                yield from _forced_blue(v3, v6)
                # v1 v2 v3 v6 v4 is a blue P5; l == 6 continues.
                yield from _then_end(v4, FRESH)

    elif pattern == "brr":
        rec4 = yield (v2, v4)
        if rec4.color is BLUE:
            yield from _forced_blue(v1, v3)
            recx = yield from _forced_blue(v3, FRESH)
            # x v3 v1 v2 v4 is a blue P5; l == 6 continues.
            yield from _lemma1_final(recx.v)
        else:
            # v2 v3 v4 is now a red triangle: every edge there is forced.
            reca = yield from _forced_blue(v2, FRESH)
            a = reca.v
            yield from _forced_blue(v3, a)
            recb = yield from _forced_blue(v3, FRESH)
            b = recb.v
            # v1 v2 a v3 b is a blue P5 at round 7; l == 6 continues.
            yield from _then_end(b, v4)

    else:  # rrr: v2 and v3 both have red degree two, everything is forced
        reca = yield from _forced_blue(v2, FRESH)
        a = reca.v
        recb = yield from _forced_blue(v2, FRESH)
        b = recb.v
        yield from _forced_blue(v3, b)
        recc = yield from _forced_blue(v3, FRESH)
        c = recc.v
        # a v2 b v3 c is a blue P5 at round 7; l == 6 continues.
        rec8 = yield (a, v4)
        if rec8.color is BLUE:
            _unreachable()  # v4 a v2 b v3 c completed the P6
        yield from _then_end(c, v4)


# ---------------------------------------------------------------------------
# The recursive case machine for l >= 7
# ---------------------------------------------------------------------------


def _case1(l: int, v1: int, v2: int, v3: int, tr: FrameTrace | None) -> Script:
    """Blue path v1 v2 v3 after two rounds; extend to v1..v5 and split on
    the colors of v3v4 and v4v5."""
    rec4 = yield (v3, FRESH)
    v4 = rec4.v
    rec5 = yield (v4, FRESH)
    v5 = rec5.v
    c34, c45 = rec4.color, rec5.color
    if c34 is BLUE and c45 is BLUE:
        yield from _subcase13(l, v1, v2, v3, v4, v5, tr)
    elif c34 is BLUE:
        yield from _subcase11_lastred(l, v1, v2, v3, v4, v5, tr)
    elif c45 is RED:
        yield from _subcase11_bothred(l, v1, v2, v3, v4, v5, tr)
    else:
        yield from _subcase12(l, v1, v2, v3, v4, v5, tr)


def _subcase11_lastred(l, v1, v2, v3, v4, v5, tr) -> Script:
    """v3v4 blue, v4v5 red: blue P4 plus a red pendant at v4."""
    _enter(tr, "case1.1:v3v4-blue")
    x, y = yield from _subgame(l - 4, tr)
    rec = yield (x, v4)
    if rec.color is BLUE:
        _unreachable()  # y..x v4 v3 v2 v1 completed the P_l
    yield from _then_end(y, v4)


def _subcase11_bothred(l, v1, v2, v3, v4, v5, tr) -> Script:
    """v3v4 and v4v5 red: probe the chord v3v5."""
    _enter(tr, "case1.1:both-red")
    rec = yield (v3, v5)
    if rec.color is BLUE:
        x, y = yield from _subgame(l - 5, tr)
        yield from _forced_blue(y, v4)
        yield from _then_end(v4, v1)  # x..y v4 v1 v2 v3 v5
    elif l == 7:
        yield from _forced_blue(FRESH, v5)  # y, a new vertex
        recv6 = yield from _forced_blue(v5, FRESH)
        v6 = recv6.v
        yield from _forced_blue(v6, v4)
        yield from _then_end(v4, v1)  # y v5 v6 v4 v1 v2 v3
    else:
        x, y = yield from _subgame(l - 6, tr)
        yield from _forced_blue(y, v5)
        recv6 = yield from _forced_blue(v5, FRESH)
        v6 = recv6.v
        yield from _forced_blue(v6, v4)
        yield from _then_end(v4, v1)  # x..y v5 v6 v4 v1 v2 v3


def _subcase12(l, v1, v2, v3, v4, v5, tr) -> Script:
    """v3v4 red, v4v5 blue: probe a shared new neighbor v6 of v3 and v4."""
    _enter(tr, "case1.2")
    rec6 = yield (v3, FRESH)
    v6 = rec6.v
    rec7 = yield (v4, v6)
    c36, c46 = rec6.color, rec7.color

    if c36 is RED and c46 is RED:
        # v3, v4, v6 all have red degree two; the whole splice is forced.
        if l == 7:
            rec = yield from _forced_blue(v3, FRESH)
            yield from _forced_blue(rec.v, v4)
            yield from _then_end(v5, v6)  # v1 v2 v3 v7 v4 v5 v6
        elif l == 8:
            rec = yield from _forced_blue(v3, FRESH)
            yield from _forced_blue(rec.v, v4)
            yield from _forced_blue(v5, v6)
            yield from _then_end(v6, FRESH)  # v1 v2 v3 v7 v4 v5 v6 y
        else:
            x, y = yield from _subgame(l - 7, tr)
            rec = yield from _forced_blue(v3, FRESH)
            yield from _forced_blue(rec.v, v4)
            yield from _forced_blue(v5, v6)
            yield from _then_end(v6, y)  # v1 v2 v3 v7 v4 v5 v6 y..x

    elif c36 is RED:  # v4v6 blue
        if l == 7:
            yield from _forced_blue(v3, v5)  # v1 v2 v3 v5 v4 v6 is a blue P6
            rec = yield (v6, FRESH)
            if rec.color is BLUE:
                _unreachable()
            yield from _then_end(v6, FRESH)
        else:
            x, y = yield from _subgame(l - 6, tr)
            yield from _forced_blue(v3, v5)
            rec = yield (v6, x)
            if rec.color is BLUE:
                _unreachable()  # v1 v2 v3 v5 v4 v6 x..y completed
            yield from _then_end(v6, y)

    elif c46 is RED:  # v3v6 blue: blue P4 v1 v2 v3 v6 plus blue v4v5
        if l == 7:
            rec = yield (v5, v6)
            if rec.color is BLUE:
                # v1 v2 v3 v6 v5 v4 is a blue P6; extend at the forced end.
                yield from _lemma1_final(v4)
            else:
                recw = yield from _forced_blue(v6, FRESH)
                yield from _then_end(recw.v, v4)  # v1 v2 v3 v6 w v4 v5
        else:
            x, y = yield from _subgame(l - 6, tr)
            rec = yield (v5, v6)
            if rec.color is BLUE:
                yield from _then_end(v4, x)  # v1 v2 v3 v6 v5 v4 x..y
            else:
                yield from _forced_blue(v6, y)
                yield from _then_end(x, v4)  # v1 v2 v3 v6 y..x v4 v5

    else:  # both blue: v1 v2 v3 v6 v4 v5 is already a blue P6
        if l == 7:
            yield from _lemma1_final(v5)
        else:
            x, y = yield from _subgame(l - 6, tr)
            rec = yield (v1, v5)
            if rec.color is BLUE:
                rec2 = yield (v4, x)
                if rec2.color is BLUE:
                    _unreachable()  # v5 v1 v2 v3 v6 v4 x..y completed
                yield from _then_end(v4, y)
            else:
                rec2 = yield (v5, x)
                if rec2.color is BLUE:
                    _unreachable()  # v1 v2 v3 v6 v4 v5 x..y completed
                yield from _then_end(v5, y)


def _subcase13(l, v1, v2, v3, v4, v5, tr) -> Script:
    """v3v4 and v4v5 blue: blue P5; grow once more at v5."""
    _enter(tr, "case1.3")
    rec6 = yield (v5, FRESH)
    v6 = rec6.v
    if rec6.color is BLUE:
        if l == 7:
            yield from _lemma1_final(v6)
        else:
            x, y = yield from _subgame(l - 6, tr)
            rec = yield (v1, v6)
            if rec.color is BLUE:
                # v1..v6 close into a blue C6; break it wherever x attaches.
                r1 = yield (x, v1)
                if r1.color is BLUE:
                    _unreachable()  # v2 v3 v4 v5 v6 v1 x..y
                r2 = yield (x, v2)
                if r2.color is BLUE:
                    _unreachable()  # v3 v4 v5 v6 v1 v2 x..y
                yield from _then_end(x, v3)  # v4 v5 v6 v1 v2 v3 x..y
            else:
                rec2 = yield (v6, x)
                if rec2.color is BLUE:
                    _unreachable()  # v1 v2 v3 v4 v5 v6 x..y
                yield from _then_end(v6, y)
    else:
        x, y = yield from _subgame(l - 5, tr)
        rec = yield (v5, x)
        if rec.color is BLUE:
            _unreachable()  # v1 v2 v3 v4 v5 x..y
        yield from _then_end(v5, y)


def _case2(l: int, v1: int, v2: int, v3: int, v4: int, tr: FrameTrace | None) -> Script:
    """Blue path v1 v2 v3 with a red pendant v2v4 after three rounds."""
    _enter(tr, "case2")
    x, y = yield from _subgame(l - 4, tr)
    rec = yield (v3, v4)
    if rec.color is RED:
        yield from _forced_blue(v1, v4)
        yield from _then_end(v4, x)  # v3 v2 v1 v4 x..y
    else:
        rec2 = yield (v4, x)
        if rec2.color is BLUE:
            _unreachable()  # v1 v2 v3 v4 x..y
        yield from _then_end(v4, y)


def _case3(l: int, v1: int, v2: int, v3: int, u2: int, tr: FrameTrace | None) -> Script:
    """Red path v1 v2 v3 with a blue pendant u2 at v2: grow a red spine with
    blue pendants until it reaches length floor(l/2)+1 or some spine end
    answers blue twice; then zigzag through the pendants."""
    _enter(tr, "case3")
    half = l // 2
    spine = [v1, v2, v3]  # v_j == spine[j-1]
    pend = {2: u2}  # u_i, blue-attached at v_i
    t = None
    after = None  # v_{t+1}, blue-attached at v_t when stopping on double blue
    while True:
        i = len(spine)  # probing at v_i = spine[-1]
        vi = spine[-1]
        ra = yield (vi, FRESH)
        rb = yield (vi, FRESH)
        if ra.color is BLUE and rb.color is BLUE:
            t = i
            pend[i] = ra.v
            after = rb.v
            break
        if ra.color is BLUE:  # rb red: spine grows by rb's vertex
            pend[i] = ra.v
            spine.append(rb.v)
        else:  # ra red, rb blue (both red would have ended the game)
            if rb.color is not BLUE:
                raise StrategyFault("double red probe should have made a red K13")
            pend[i] = rb.v
            spine.append(ra.v)
        if len(spine) - 1 == half + 1:
            break

    if t is None:
        # Red spine v1..v_{half+2} of length half+1; pendants u_2..u_{half+1}.
        upper = half + 1
        for i in range(2, upper):
            yield from _forced_blue(pend[i], spine[i])  # u_i v_{i+1}
        if l % 2 == 1:
            yield from _then_end(FRESH, spine[1])  # u1 v2 u2 v3 .. v_T u_T
        else:
            _unreachable()  # the last join completed v2 u2 v3 .. v_T u_T
        return

    for i in range(2, t):
        yield from _forced_blue(spine[i - 1], pend[i + 1])  # v_i u_{i+1}
    # Blue zigzag u2 v2 u3 v3 .. u_t v_t v_{t+1} of order 2t-1 now exists.
    if t == half + 1:
        _unreachable()  # the zigzag alone already reached order l
    if t == half:
        recj = yield (v1, after)
        if l % 2 == 0:
            if recj.color is BLUE:
                _unreachable()  # ..v_t v_{t+1} v1 closed the P_l
            yield from _then_end(v1, pend[2])  # v1 u2 v2 .. v_t v_{t+1}
        else:
            if recj.color is BLUE:
                rec = yield (v1, FRESH)
                if rec.color is BLUE:
                    _unreachable()  # ..v_{t+1} v1 x
                yield from _then_end(v1, FRESH)
            else:
                yield from _forced_blue(v1, FRESH)
                yield from _then_end(v1, pend[2])  # x v1 u2 v2 .. v_{t+1}
        return
    # 3 <= t <= half-1: splice in a recursively forced blue P_{l-2t}.
    x, y = yield from _subgame(l - 2 * t, tr)
    recj = yield (v1, after)
    if recj.color is RED:
        yield from _forced_blue(x, v1)
        yield from _then_end(v1, pend[2])  # y..x v1 u2 v2 .. v_t v_{t+1}
    else:
        rec = yield (v1, x)
        if rec.color is BLUE:
            _unreachable()  # u2 v2 .. v_t v_{t+1} v1 x..y
        yield from _then_end(v1, y)


def _play(l: int, tr: FrameTrace | None = None) -> Script:
    """Top-level dispatch: base scripts for l <= 6, the three-case machine
    for l >= 7."""
    if l <= 3:
        yield from _star_script(l)
        return
    if l == 4:
        yield from _script_l4()
        return
    if l <= 6:
        yield from _script_l56(l, tr)
        return
    rec1 = yield (FRESH, FRESH)
    a, b = rec1.u, rec1.v  # a is the star center
    rec2 = yield (a, FRESH)
    c = rec2.v
    k1, k2 = rec1.color, rec2.color
    if k1 is BLUE and k2 is BLUE:
        _enter(tr, "case1")
        yield from _case1(l, b, a, c, tr)
    elif k1 is RED and k2 is RED:
        rec3 = yield (a, FRESH)  # a red reply is a red K_{1,3} at the center
        if rec3.color is not BLUE:
            raise StrategyFault("third red edge at the center should have ended the game")
        yield from _case3(l, b, a, c, rec3.v, tr)
    else:
        blue_leaf, red_leaf = (b, c) if k1 is BLUE else (c, b)
        rec3 = yield (a, FRESH)
        d = rec3.v
        if rec3.color is BLUE:
            yield from _case2(l, blue_leaf, a, d, red_leaf, tr)
        else:
            yield from _case3(l, red_leaf, a, d, blue_leaf, tr)


def constructive_builder(l: int, trace: bool = False) -> ScriptBuilder:
    """Builder that wins (red K_{1,3} or blue P_l) within floor(3l/2) rounds
    against every painter."""
    if l < 2:
        raise ValueError("target path order must be >= 2")
    tr = FrameTrace() if trace else None
    return ScriptBuilder(_play(l, tr), max_moves=budget(l), trace=tr)


def base_case_builder(l: int, trace: bool = False) -> ScriptBuilder:
    """The direct scripts for 2 <= l <= 6 (no recursion)."""
    if not 2 <= l <= 6:
        raise ValueError("base cases cover 2 <= l <= 6")
    return constructive_builder(l, trace)
