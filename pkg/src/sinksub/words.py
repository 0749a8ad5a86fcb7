"""Run-length words over the nim-value alphabet."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Factor:
    """A run ``symbol ** length``.

    ``label`` and ``block`` name where the run came from in a block
    decomposition (e.g. ``"B4"`` of block 2); plain words leave them unset.
    """

    symbol: int
    length: int
    label: str = ""
    block: int = -1

    def __str__(self):
        return f"{self.symbol}^{self.length}"


@dataclass(frozen=True)
class PeriodWord:
    factors: tuple[Factor, ...]
    block_structure: tuple[tuple[str, int], ...] = field(default=())

    @classmethod
    def from_factors(cls, factors, block_structure=()) -> "PeriodWord":
        return cls(normalize(factors), tuple(block_structure))

    @classmethod
    def from_values(cls, values) -> "PeriodWord":
        return cls(tuple(run_length(values)))

    @property
    def total_length(self) -> int:
        return sum(f.length for f in self.factors)

    def __len__(self):
        return self.total_length

    def values(self) -> np.ndarray:
        if not self.factors:
            return np.zeros(0, dtype=np.uint8)
        return np.repeat(
            np.array([f.symbol for f in self.factors], dtype=np.uint8),
            [f.length for f in self.factors],
        )

    def digits(self) -> str:
        return "".join(str(f.symbol) * f.length for f in self.factors)

    def runlength(self) -> str:
        return " ".join(map(str, self.factors))

    def structure(self) -> str:
        return "".join(tag for tag, _ in self.block_structure)


def normalize(factors) -> tuple[Factor, ...]:
    """Drop empty runs and merge neighbours that share a symbol."""
    out: list[Factor] = []
    for f in factors:
        if f.length < 0:
            raise ValueError(f"negative factor length in {f!r}")
        if f.length == 0:
            continue
        if out and out[-1].symbol == f.symbol:
            prev = out.pop()
            label = "+".join(x for x in (prev.label, f.label) if x)
            f = Factor(f.symbol, prev.length + f.length, label, prev.block)
        out.append(f)
    return tuple(out)


def run_length(values):
    """Yield maximal runs of ``values`` as unlabeled factors."""
    it = iter(int(v) for v in values)
    try:
        cur = next(it)
    except StopIteration:
        return
    n = 1
    for v in it:
        if v == cur:
            n += 1
        else:
            yield Factor(cur, n)
            cur, n = v, 1
    yield Factor(cur, n)


def parse_word(text: str) -> np.ndarray:
    """Parse ``"1230"``, ``"1,2,3,0"`` or run-length ``"1^5 2^5 0^3"``."""
    text = text.strip()
    if "^" in text:
        out = []
        for tok in text.replace(",", " ").split():
            sym, _, n = tok.partition("^")
            out.extend([int(sym)] * int(n or 1))
        return np.array(out, dtype=np.uint8)
    if "," in text or " " in text:
        return np.array([int(t) for t in text.replace(",", " ").split()], dtype=np.uint8)
    return np.array([int(c) for c in text], dtype=np.uint8)
