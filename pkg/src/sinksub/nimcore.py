"""Mex recursion and nim-sequence generation for finite subtraction games.

Two terminal conventions are supported:

* ``SINK``: every position ``x <= 0`` is a terminal P-position of value 0 and
  is a legal target, so ``x - s`` is always an option.  Sequences start at
  ``x = 1``.
* ``WALL``: moves to negative heaps are forbidden and ``x = 0`` is terminal.
  Sequences start at ``x = 0``.
"""
from __future__ import annotations

import enum
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

import numpy as np

# Marks a wall slot (negative heap) in the padded buffer.  Nim-values never
# reach it because sets with 255 or more moves are rejected.
ABSENT = 255


class Convention(enum.Enum):
    SINK = "sink"
    WALL = "wall"

    @property
    def start_index(self) -> int:
        return 1 if self is Convention.SINK else 0

    @classmethod
    def parse(cls, value: "str | Convention") -> "Convention":
        if isinstance(value, cls):
            return value
        return cls(str(value).lower())


@dataclass(frozen=True)
class SubtractionSet:
    moves: tuple[int, ...]

    def __init__(self, moves: Iterable[int]):
        ms = tuple(sorted(int(s) for s in moves))
        if not ms:
            raise ValueError("subtraction set must be nonempty")
        if ms[0] < 1:
            raise ValueError(f"moves must be positive, got {ms[0]}")
        if len(set(ms)) != len(ms):
            raise ValueError(f"duplicate moves in {ms}")
        if len(ms) >= ABSENT:
            raise ValueError("sets with 255 or more moves are not supported")
        object.__setattr__(self, "moves", ms)

    @classmethod
    def parse(cls, text: str) -> "SubtractionSet":
        return cls(int(t) for t in text.replace(" ", "").split(",") if t)

    @property
    def max_move(self) -> int:
        return self.moves[-1]

    @property
    def size_rho(self) -> int:
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def __len__(self):
        return len(self.moves)

    def __str__(self):
        return "{" + ",".join(map(str, self.moves)) + "}"


@dataclass(frozen=True)
class GrundySequence:
    set: SubtractionSet
    convention: Convention
    start_index: int
    values: np.ndarray

    def __len__(self):
        return len(self.values)

    def __getitem__(self, x: int) -> int:
        """Nim-value of heap ``x`` (absolute position, not list offset)."""
        i = x - self.start_index
        if not 0 <= i < len(self.values):
            raise IndexError(f"position {x} outside computed range")
        return int(self.values[i])

    def tolist(self) -> list[int]:
        return self.values.tolist()


def mex(values: Iterable[int]) -> int:
    """Least nonnegative integer not in ``values``."""
    seen = set(values)
    g = 0
    while g in seen:
        g += 1
    return g


def as_set(moves) -> SubtractionSet:
    return moves if isinstance(moves, SubtractionSet) else SubtractionSet(moves)


class _Engine:
    """Padded byte buffer holding ``max_move`` boundary cells then the sequence.

    Cell ``pad + j`` holds the value at position ``start + j``.  Boundary cells
    hold 0 under the sink and ``ABSENT`` under the wall.
    """

    def __init__(self, moves: SubtractionSet, convention: Convention):
        self.moves = moves.moves
        self.convention = convention
        self.pad = moves.max_move
        fill = 0 if convention is Convention.SINK else ABSENT
        self.buf = bytearray([fill]) * self.pad

    def __len__(self):
        return len(self.buf) - self.pad

    def extend(self, count: int) -> None:
        buf = self.buf
        moves = self.moves
        # Under the wall, v(0) is reached through the same rule: every option
        # of 0 is absent, so mex of the empty set gives 0.
        for _ in range(count):
            n = len(buf)
            opts = {buf[n - s] for s in moves}
            opts.discard(ABSENT)
            g = 0
            while g in opts:
                g += 1
            buf.append(g)

    def values(self) -> bytes:
        return bytes(self.buf[self.pad:])

    def window(self, j: int) -> bytes:
        """State seen by the position at offset ``j``: the previous ``max_move`` cells."""
        return bytes(self.buf[j:j + self.pad])


def grundy_sequence(moves, convention="sink", count: int = 1) -> GrundySequence:
    """First ``count`` nim-values, from ``x = 1`` (sink) or ``x = 0`` (wall)."""
    if count < 1:
        raise ValueError("count must be positive")
    S = as_set(moves)
    conv = Convention.parse(convention)
    eng = _Engine(S, conv)
    eng.extend(count)
    arr = np.frombuffer(eng.values(), dtype=np.uint8)
    return GrundySequence(S, conv, conv.start_index, arr)


def iter_grundy(moves, convention="sink") -> Iterator[int]:
    """Unbounded stream of nim-values, keeping only the last ``max_move`` of them."""
    S = as_set(moves)
    conv = Convention.parse(convention)
    fill = 0 if conv is Convention.SINK else ABSENT
    window = deque([fill] * S.max_move, maxlen=S.max_move)
    L = S.max_move
    while True:
        g = mex(v for v in (window[L - s] for s in S.moves) if v != ABSENT)
        window.append(g)
        yield g


def option_value(seq_values, x: int, s: int, convention: Convention, start: int):
    """Value of the option ``x - s``; ``None`` if the wall forbids it."""
    y = x - s
    if convention is Convention.SINK and y <= 0:
        return 0
    if convention is Convention.WALL and y < 0:
        return None
    return int(seq_values[y - start])
