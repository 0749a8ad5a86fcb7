"""Mechanical checks of candidate period words.

``verify_mex_consistency`` replays the sink recurrence over a periodic
extension of a word.  ``audit_tables`` works one level up: it lays the block
decomposition of a case II period out on absolute positions and checks, factor
by factor, that every smaller value is reachable and that no option carries the
factor's own value, recording which (move, factor) pairs do the covering.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .additive import (
    AdditiveParams, Case, UnsupportedDelta, WrongCase, block_indices, blocks,
    build_period_word_case2, reduce_params,
)
from .nimcore import as_set
from .words import Factor, PeriodWord


@dataclass(frozen=True)
class MexViolation:
    position: int
    expected: int
    found: int


def _word_values(word) -> np.ndarray:
    if isinstance(word, PeriodWord):
        return word.values()
    if isinstance(word, str):
        from .words import parse_word

        return parse_word(word)
    return np.asarray(word, dtype=np.int64)


def verify_mex_consistency(word, moves) -> list[MexViolation]:
    """Violations of the sink recurrence by the periodic extension of ``word``.

    Positions ``1 .. 2|word| + max S`` are checked; an empty list means the
    infinite periodic word is the sink nim-sequence of ``moves``.
    """
    if isinstance(moves, AdditiveParams):
        moves = moves.moves
    S = as_set(moves)
    w = _word_values(word)
    n = len(w)
    if n == 0:
        raise ValueError("word must be nonempty")
    horizon = 2 * n + S.max_move
    ext = np.concatenate([np.zeros(S.max_move, dtype=np.int64), np.resize(w, horizon)])
    pad = S.max_move
    # opts[j, s] is the value of the option x - s for x = j + 1.
    xs = np.arange(horizon)
    opts = np.stack([ext[pad + xs - s] for s in S.moves], axis=1)
    expected = np.zeros(horizon, dtype=np.int64)
    for g in range(S.size_rho + 1):
        # mex = number of leading values 0, 1, ... all present
        present = (opts == g).any(axis=1)
        expected += np.where(expected == g, present, False)
    found = ext[pad:]
    bad = np.nonzero(expected != found)[0]
    return [MexViolation(int(j) + 1, int(expected[j]), int(found[j])) for j in bad]


# Index identities and block structure ---------------------------------------


@dataclass(frozen=True)
class IdentityFailure:
    i: int
    identity: str
    detail: str


def check_lemma_identities(m: int, k: int) -> list[IdentityFailure]:
    """Index identities behind the block construction, for all ``i < m``.

    ``alpha(i) = gamma(i-1)`` compares residues mod m: where ``k*i`` is a
    multiple of m, ``alpha(i)`` is 0 while ``gamma(i-1)`` is m.
    """
    if not 1 <= k < m:
        raise ValueError(f"need 1 <= k < m, got m={m}, k={k}")
    out = []
    for i in range(m):
        ix = block_indices(i, m, k)
        al, be, ga = ix.alpha, ix.beta, ix.gamma
        if ga > al and ga - al != k:
            out.append(IdentityFailure(i, "gamma-alpha=k", f"gamma={ga} alpha={al}"))
        if ga < al:
            if al - be != m - k:
                out.append(IdentityFailure(i, "alpha-beta=m-k", f"alpha={al} beta={be}"))
            if not be < k:
                out.append(IdentityFailure(i, "beta<k", f"beta={be}"))
            if not al > m - k:
                out.append(IdentityFailure(i, "alpha>m-k", f"alpha={al}"))
        prev_beta = (k * i) % m  # beta(i-1), with beta(-1) = 0
        if al != prev_beta:
            out.append(IdentityFailure(i, "alpha(i)=beta(i-1)", f"{al} vs {prev_beta}"))
    for i in range(1, m + 1):
        al = (k * i) % m
        prev_gamma = block_indices(i - 1, m, k).gamma
        if al % m != prev_gamma % m or (al > 0 and al != prev_gamma):
            out.append(IdentityFailure(i, "alpha(i)=gamma(i-1)", f"{al} vs {prev_gamma}"))
    return out


@dataclass(frozen=True)
class StructureReport:
    m: int
    k: int
    block_lengths: dict
    short: int
    long: int
    cycle: int
    product_length: int
    period_length: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_block_structure(m: int, k: int) -> StructureReport:
    """Block lengths, short/long classification and counts, index periodicity."""
    g = gcd(m, k)
    M, K = m // g, k // g
    bs = blocks(m, k)
    fails = []
    lengths = {"B": set(), "C": set()}
    short = long_ = 0
    for b in bs:
        ix = b.indices
        lengths[b.tag].add(b.length)
        a_len = sum(f.length for f in b.factors if f.label.startswith("A"))
        if a_len != 2 * m - ix.alpha:
            fails.append(f"|A({ix.i})|={a_len}")
        if b.tag == "B" and b.length != 4 * m + 2 * k:
            fails.append(f"|B({ix.i})|={b.length}")
        if b.tag == "C":
            if b.length != 5 * m + 2 * k:
                fails.append(f"|C({ix.i})|={b.length}")
            if not k - ix.beta > 0:
                fails.append(f"C({ix.i}) exponent k-beta={k - ix.beta}")
        if b.zeta and b.tag != "B":
            fails.append(f"zeta after C({ix.i})")
        contribution = b.length + (m if b.zeta else 0)
        is_short = b.tag == "B" and not b.zeta
        if is_short != (ix.alpha < m - k):
            fails.append(f"classification at i={ix.i}")
        if contribution != (4 * m + 2 * k if is_short else 5 * m + 2 * k):
            fails.append(f"contribution at i={ix.i}")
        if ix.i < M:
            if is_short:
                short += 1
            else:
                long_ += 1
    if (short, long_) != (M - K, K):
        fails.append(f"short/long={short}/{long_}, expected {M - K}/{K}")
    sig = [(b.tag, b.zeta, b.indices.alpha, b.indices.beta) for b in bs]
    if any(sig[i] != sig[i + M] for i in range(m - M)):
        fails.append("block pattern not periodic with period M")
    if sorted(b.indices.alpha for b in bs[:M]) != list(range(0, m, g)):
        fails.append("alpha does not run through the multiples of g once per cycle")
    product_len = sum(b.length + (m if b.zeta else 0) for b in bs)
    period_len = build_period_word_case2(reduce_params(m, m + k)).total_length
    if product_len != m * (4 * m + 3 * k):
        fails.append(f"product length {product_len}")
    if period_len != m * (4 * m + 3 * k) // g:
        fails.append(f"period word length {period_len}")
    return StructureReport(
        m, k, {t: sorted(v) for t, v in lengths.items()}, short, long_, M,
        product_len, period_len, tuple(fails),
    )


# Factor-level audit --------------------------------------------------------


class AuditFailure(AssertionError):
    pass


@dataclass(frozen=True)
class PlacedFactor:
    """A factor laid out on absolute positions ``start .. end`` (inclusive)."""

    copy: int
    block: int  # position of the block within the cycle
    label: str
    symbol: int
    start: int
    end: int

    @property
    def ordinal(self):
        return (self.copy, self.block)


SINK_FACTOR = PlacedFactor(-1, -1, "sink", 0, -(10**12), 0)


@dataclass(frozen=True)
class AuditRecord:
    factor_id: tuple[int, int, str]  # (copy, block index, label)
    start: int
    end: int
    claimed_value: int
    reachability_witnesses: dict  # smaller value -> tuple of (move name, factor name)
    collision_check: bool


def _relative_name(src: PlacedFactor, dst: PlacedFactor, n_blocks: int) -> str:
    if src is SINK_FACTOR:
        return "sink"
    here = dst.copy * n_blocks + dst.block
    there = src.copy * n_blocks + src.block
    if src.label == "Z":
        # zeta trails its block, so the one just before the current block is "Z"
        return "Z" if there == here - 1 else f"Z[{there - here}]"
    if there == here:
        return src.label
    if there == here - 1:
        return src.label.lower()
    return f"{src.label}[{there - here}]"


def layout(word: PeriodWord, copies: int = 2) -> list[PlacedFactor]:
    """Labeled factors of ``copies`` consecutive periods, positions from 1."""
    out = []
    pos = 1
    n = word.total_length
    for c in range(copies):
        for f in word.factors:
            out.append(PlacedFactor(c, f.block, f.label, f.symbol, pos, pos + f.length - 1))
            pos += f.length
        assert pos == 1 + (c + 1) * n
    return out


def _labeled_cycle(params: AdditiveParams) -> PeriodWord:
    # Keep labels one-to-one with factors: no merging across labels.
    m, k, M = params.m, params.k, params.M
    fs = []
    for b in blocks(m, k, M):
        fs.extend(f for f in b.factors if f.length > 0)
        if b.zeta:
            fs.append(Factor(0, m, "Z", b.indices.i))
    for x, y in zip(fs, fs[1:]):
        if x.symbol == y.symbol:
            raise AuditFailure(f"adjacent factors {x.label}/{y.label} share symbol {x.symbol}")
    return PeriodWord(tuple(fs))


def audit_tables(params: AdditiveParams, copies: int = 2) -> list[AuditRecord]:
    """Reachability and anti-collision for every factor of two period copies.

    Raises ``AuditFailure`` at the first uncovered position or colliding pair.
    """
    if params.case is not Case.II:
        raise WrongCase(f"m={params.m}, delta={params.delta} is case I")
    if params.delta >= 2 * params.m:
        raise UnsupportedDelta("audit covers m < delta < 2m only")
    return audit_word(_labeled_cycle(params), params, copies)


def audit_word(word: PeriodWord, params: AdditiveParams, copies: int = 2) -> list[AuditRecord]:
    """Factor audit of an arbitrary labeled word against ``S(m, m + k)``."""
    m, k = params.m, params.k
    s_moves = (("s1", m), ("s2", 2 * m + k), ("s3", 3 * m + k))
    placed = layout(word, copies)
    by_value: dict[int, list[PlacedFactor]] = {v: [] for v in range(4)}
    by_value[0].append(SINK_FACTOR)
    for f in placed:
        by_value[f.symbol].append(f)
    n_blocks = params.M

    records = []
    for F in placed:
        v = F.symbol
        witnesses = {}
        for u in range(v):
            pieces, names = [], []
            for name, s in s_moves:
                for G in by_value[u]:
                    lo, hi = max(G.start + s, F.start), min(G.end + s, F.end)
                    if lo <= hi:
                        pieces.append((lo, hi))
                        names.append((name, _relative_name(G, F, n_blocks)))
            nxt = F.start
            for lo, hi in sorted(pieces):
                if lo > nxt:
                    break
                nxt = max(nxt, hi + 1)
            if nxt <= F.end:
                raise AuditFailure(
                    f"{F.label} of block {F.block} (copy {F.copy}): position {nxt} "
                    f"has no option of value {u}"
                )
            witnesses[u] = tuple(dict.fromkeys(names))
        for name, s in s_moves:
            for G in by_value[v]:
                lo, hi = max(G.start + s, F.start), min(G.end + s, F.end)
                if lo <= hi:
                    raise AuditFailure(
                        f"{F.label} of block {F.block} (copy {F.copy}) collides with "
                        f"{_relative_name(G, F, n_blocks)} via {name} at position {lo}"
                    )
        records.append(AuditRecord((F.copy, F.block, F.label), F.start, F.end, v, witnesses, True))

    _check_separation(placed, 3 * m + k)
    return records


def similar_factor_gaps(placed: list[PlacedFactor]):
    """Letters between same-label factors of neighbouring blocks.

    A-factors pair across any neighbouring blocks, B- and C-factors only
    between blocks of the same type.
    """
    seq = {}
    for f in placed:
        if f.label != "Z":
            seq.setdefault(f.ordinal, {})[f.label] = f
    order = sorted(seq)
    for prev, cur in zip(order, order[1:]):
        for label, F in seq[cur].items():
            G = seq[prev].get(label)
            if G is not None:
                yield G, F, F.start - G.end - 1


def _check_separation(placed, bound: int) -> None:
    for G, F, gap in similar_factor_gaps(placed):
        if not gap > bound:
            raise AuditFailure(
                f"similar factors {F.label} in blocks {G.ordinal} and {F.ordinal} "
                f"are only {gap} apart (need > {bound})"
            )


def format_audit(records: list[AuditRecord]) -> str:
    lines = []
    for r in records:
        c, i, label = r.factor_id
        wit = "; ".join(
            f"{u}: " + ", ".join(f"{mv}->{src}" for mv, src in pairs)
            for u, pairs in r.reachability_witnesses.items()
        )
        lines.append(
            f"copy={c} block={i} factor={label} value={r.claimed_value} "
            f"range={r.start}..{r.end} collision_free={r.collision_check} "
            f"reach=[{wit}]"
        )
    return "\n".join(lines)
