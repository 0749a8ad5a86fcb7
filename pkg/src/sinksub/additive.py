"""The additive family S(m, delta) = {m, m + delta, 2m + delta} under the sink.

With ``d = delta mod 2m`` the nim-sequence is purely periodic with period

* ``3m + 2 delta - d`` when ``0 <= d <= m`` (case I), and
* ``m (m + 2 delta + d) / gcd(m, d)`` when ``m < d < 2m`` (case II).

Case I periods are built directly from the run-length word
``(1^m 2^m)^a 3^d 0^m (3^m 0^m)^(a-1)``.  Case II periods with
``m < delta < 2m`` are concatenations of B- and C-blocks indexed by
``i``, with an extra ``0^m`` after each block whose ``beta(i)`` is zero.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .nimcore import SubtractionSet, grundy_sequence
from .words import Factor, PeriodWord


class WrongCase(ValueError):
    pass


class UnsupportedDelta(ValueError):
    pass


class Case(enum.Enum):
    I = "I"
    II = "II"


@dataclass(frozen=True)
class AdditiveParams:
    m: int
    delta: int
    d: int
    case: Case
    g: int
    k: int | None = None
    a: int | None = None
    M: int | None = None
    K: int | None = None

    @property
    def moves(self) -> tuple[int, int, int]:
        return (self.m, self.m + self.delta, 2 * self.m + self.delta)

    @property
    def set(self) -> SubtractionSet:
        return SubtractionSet(self.moves)

    @property
    def layer(self) -> int:
        """``n`` in ``delta = d + 2mn``."""
        return (self.delta - self.d) // (2 * self.m)


def reduce_params(m: int, delta: int) -> AdditiveParams:
    if m < 1 or delta < 1:
        raise ValueError(f"m and delta must be positive, got m={m}, delta={delta}")
    d = delta % (2 * m)
    g = gcd(m, d)
    if d <= m:
        return AdditiveParams(m, delta, d, Case.I, g, a=(delta - d) // (2 * m) + 1)
    k = d - m
    return AdditiveParams(m, delta, d, Case.II, g, k=k, M=m // g, K=k // g)


def period_formula(params: AdditiveParams) -> int:
    m, delta, d = params.m, params.delta, params.d
    if params.case is Case.I:
        return 3 * m + 2 * delta - d
    num = m * (m + 2 * delta + d)
    assert num % params.g == 0
    return num // params.g


def period_length(m: int, delta: int) -> int:
    return period_formula(reduce_params(m, delta))


def candidate_word_case1(params: AdditiveParams) -> PeriodWord:
    if params.case is not Case.I:
        raise WrongCase(f"m={params.m}, delta={params.delta} is case II")
    m, d, a = params.m, params.d, params.a
    fs = [Factor(1, m), Factor(2, m)] * a
    fs += [Factor(3, d), Factor(0, m)]
    fs += [Factor(3, m), Factor(0, m)] * (a - 1)
    return PeriodWord.from_factors(fs)


# Case II block machinery ---------------------------------------------------


@dataclass(frozen=True)
class BlockIndices:
    i: int
    alpha: int
    beta: int
    gamma: int


@dataclass(frozen=True)
class Block:
    tag: str  # "B" or "C"
    indices: BlockIndices
    factors: tuple[Factor, ...]
    zeta: bool

    @property
    def length(self) -> int:
        return sum(f.length for f in self.factors)


def block_indices(i: int, m: int, k: int) -> BlockIndices:
    alpha = (k * i) % m
    beta = (k * (i + 1)) % m
    return BlockIndices(i, alpha, beta, beta or m)


def build_block(idx: BlockIndices, m: int, k: int) -> Block:
    """B-block when ``gamma > alpha``, C-block otherwise.

    Factors keep their positional labels (A1..A3, then B1..B5 or C1..C9),
    including empty ones.
    """
    i, al, be, ga = idx.i, idx.alpha, idx.beta, idx.gamma
    A = [(1, m - al), (0, al), (2, m - al)]
    if ga > al:
        tag = "B"
        rest = [(1, ga), (3, m - ga), (2, ga), (0, m - al), (3, ga)]
    else:
        tag = "C"
        rest = [(1, m), (2, m), (1, be), (0, k - be), (3, m - k),
                (2, be), (3, k - be), (0, m), (3, be)]
    factors = tuple(
        [Factor(s, n, f"A{j}", i) for j, (s, n) in enumerate(A, 1)]
        + [Factor(s, n, f"{tag}{j}", i) for j, (s, n) in enumerate(rest, 1)]
    )
    return Block(tag, idx, factors, be == 0)


def blocks(m: int, k: int, count: int | None = None) -> list[Block]:
    """Blocks for ``i = 0 .. count-1`` (default: all ``m`` of them)."""
    if not 1 <= k < m:
        raise ValueError(f"need 1 <= k < m, got m={m}, k={k}")
    n = m if count is None else count
    return [build_block(block_indices(i, m, k), m, k) for i in range(n)]


def _assemble(bs: list[Block], m: int) -> PeriodWord:
    fs, tags = [], []
    for b in bs:
        fs.extend(b.factors)
        tags.append((b.tag, b.indices.i))
        if b.zeta:
            fs.append(Factor(0, m, "Z", b.indices.i))
            tags.append(("Z", b.indices.i))
    return PeriodWord.from_factors(fs, tags)


def product_word(m: int, k: int) -> PeriodWord:
    """The full product over ``0 <= i < m``; ``gcd(m, k)`` copies of the period."""
    return _assemble(blocks(m, k), m)


def product_structure(m: int, k: int) -> str:
    """Block structure of the full product, e.g. ``"BBBZBBBZ"`` for (6, 2)."""
    return product_word(m, k).structure()


def _check_case2(params: AdditiveParams) -> None:
    if params.case is not Case.II:
        raise WrongCase(f"m={params.m}, delta={params.delta} is case I")
    if params.delta >= 2 * params.m:
        raise UnsupportedDelta(
            f"delta={params.delta} >= 2m; no block construction, use oracle_prefix_word"
        )


def build_period_word_case2(params: AdditiveParams) -> PeriodWord:
    """One index cycle ``i = 0 .. M-1`` of blocks; its length is the period."""
    _check_case2(params)
    return _assemble(blocks(params.m, params.k, params.M), params.m)


def oracle_prefix_word(params: AdditiveParams) -> PeriodWord:
    """Brute-force sink sequence of one formula period, as a run-length word."""
    seq = grundy_sequence(params.moves, "sink", period_formula(params))
    return PeriodWord.from_values(seq.values)


def candidate_word(params: AdditiveParams) -> PeriodWord:
    """Constructed period word where a construction exists, else the oracle."""
    if params.case is Case.I:
        return candidate_word_case1(params)
    if params.delta < 2 * params.m:
        return build_period_word_case2(params)
    return oracle_prefix_word(params)


def additive_params_of(moves) -> AdditiveParams | None:
    """Recognise ``{m, m+delta, 2m+delta}``; ``None`` for other sets."""
    ms = tuple(moves)
    if len(ms) == 3 and ms[0] + ms[1] == ms[2]:
        return reduce_params(ms[0], ms[1] - ms[0])
    return None
