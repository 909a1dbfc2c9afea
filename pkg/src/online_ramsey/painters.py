"""Painter sessions: the blocking lower-bound strategy plus scripted and
pseudo-random painters for tests and matchplay."""

from __future__ import annotations

from typing import Sequence

from .engine import GameState, PainterSession
from .graph import BLUE, RED, Color, creates_red_violation


class BlockingPainter(PainterSession):
    """Colors every edge red unless that would create a red vertex of degree
    three or close a red cycle of length k, 3 <= k <= floor(l/2); then blue.

    Fully deterministic and memoryless: the reply depends only on the board
    and the proposal, never on history.
    """

    def __init__(self, l: int):
        if l < 2:
            raise ValueError("target path order must be >= 2")
        self.l = l

    def choose_color(self, state: GameState, edge: tuple[int, int]) -> Color:
        u, v = edge
        return BLUE if creates_red_violation(state.board, u, v, self.l) else RED


def blocking_painter(l: int) -> BlockingPainter:
    return BlockingPainter(l)


class ScriptedPainter(PainterSession):
    """Replays a fixed color list; blue after the script runs out."""

    def __init__(self, colors: Sequence[Color]):
        self._colors = tuple(colors)
        self._i = 0

    def choose_color(self, state: GameState, edge: tuple[int, int]) -> Color:
        c = self._colors[self._i] if self._i < len(self._colors) else BLUE
        self._i += 1
        return c


def scripted_painter(colors: Sequence[Color]) -> ScriptedPainter:
    return ScriptedPainter(colors)


_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _splitmix64(x: int) -> int:
    """One SplitMix64 output step; the fixed generator behind random_painter,
    chosen so any implementation of this artifact produces identical color
    streams for a given seed."""
    z = (x + _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def random_color(seed: int, move_index: int) -> Color:
    """Color of the 0-based move_index under the documented stream: red when
    splitmix64(seed + (move_index + 1) * golden) is odd, blue otherwise.
    Indexing by move keeps replays and parallel runs reproducible."""
    h = _splitmix64((seed + (move_index + 1) * _GOLDEN) & _MASK64)
    return RED if h & 1 else BLUE


class RandomPainter(PainterSession):
    def __init__(self, seed: int):
        self.seed = seed & _MASK64

    def choose_color(self, state: GameState, edge: tuple[int, int]) -> Color:
        return random_color(self.seed, len(state.transcript))


def random_painter(seed: int) -> RandomPainter:
    return RandomPainter(seed)
