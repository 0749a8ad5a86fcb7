"""Pre-period and period of a subtraction game's nim-sequence.

The value at a position depends only on the last ``max S`` values, so the
first repeated window state certifies periodicity for the whole infinite
sequence.  The raw collision is then shrunk to the minimal period and
pre-period.
"""
from __future__ import annotations

from dataclasses import dataclass

from .nimcore import Convention, SubtractionSet, _Engine, as_set

DEFAULT_HORIZON = 10**6


class HorizonExhausted(RuntimeError):
    def __init__(self, moves: SubtractionSet, horizon: int):
        self.moves = moves
        self.horizon = horizon
        self.bound = (moves.size_rho + 1) ** moves.max_move
        super().__init__(
            f"no repeated window state for S={moves} within {horizon} positions "
            f"(theoretical bound on distinct windows: {self.bound})"
        )


@dataclass(frozen=True)
class PeriodInfo:
    preperiod: int
    period: int
    period_word: tuple[int, ...]
    start_index: int

    @property
    def word(self) -> str:
        return format_word(self.period_word)

    @property
    def purely_periodic(self) -> bool:
        return self.preperiod == 0


def format_word(values) -> str:
    values = [int(v) for v in values]
    if all(v < 10 for v in values):
        return "".join(map(str, values))
    return ",".join(map(str, values))


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _is_tail_period(vals: bytes, start: int, period: int, q: int) -> bool:
    # The tail from ``start`` is already known to be ``period``-periodic, so
    # checking one block of length ``period`` decides whether ``q`` works.
    a = vals[start:start + period]
    b = vals[start + q:start + q + period]
    return a == b


def minimize(vals: bytes, preperiod: int, period: int) -> tuple[int, int]:
    """Shrink a valid (pre-period, period) pair read off ``vals``.

    ``vals`` must contain at least ``preperiod + 2 * period`` entries.
    """
    changed = True
    while changed:
        changed = False
        for q in _prime_factors(period):
            if _is_tail_period(vals, preperiod, period, period // q):
                period //= q
                changed = True
                break
    while preperiod > 0 and vals[preperiod - 1] == vals[preperiod - 1 + period]:
        preperiod -= 1
    return preperiod, period


def detect_period(moves, convention="sink", horizon: int | None = None) -> PeriodInfo:
    """Minimal (pre-period, period) of the nim-sequence of ``moves``.

    ``horizon`` caps how many positions are generated while looking for a
    repeated window.  Positions are generated lazily, so a generous cap is
    cheap when the sequence settles early.
    """
    S = as_set(moves)
    conv = Convention.parse(convention)
    if horizon is None:
        horizon = default_horizon(S, conv)
    if horizon < 2 * S.max_move + 2:
        raise ValueError(f"horizon must be at least {2 * S.max_move + 2}")

    eng = _Engine(S, conv)
    seen: dict[bytes, int] = {}
    chunk = max(256, 4 * S.max_move)
    j = 0
    hit = None
    while hit is None:
        if j >= horizon:
            raise HorizonExhausted(S, horizon)
        need = min(j + chunk, horizon) - len(eng)
        if need > 0:
            eng.extend(need)
        stop = min(len(eng), horizon)
        while j < stop:
            key = eng.window(j)
            first = seen.setdefault(key, j)
            if first != j:
                hit = (first, j)
                break
            j += 1

    first, second = hit
    raw = second - first
    # Enough of the tail to compare two full raw periods.
    eng.extend(max(0, first + 2 * raw - len(eng)))
    vals = eng.values()
    pre, per = minimize(vals, first, raw)
    word = tuple(vals[pre:pre + per])
    return PeriodInfo(pre, per, word, conv.start_index)


def default_horizon(S: SubtractionSet, convention: Convention) -> int:
    """``8 * p(m, delta)`` for additive sink sets, otherwise ``DEFAULT_HORIZON``."""
    if convention is Convention.SINK and len(S) == 3:
        a, b, c = S.moves
        if a + b == c:
            from .additive import period_length

            return max(8 * period_length(a, b - a), 2 * c + 2)
    return DEFAULT_HORIZON


def canonical_rotation(word) -> tuple:
    """Lexicographically least rotation (Booth's algorithm)."""
    w = tuple(word)
    n = len(w)
    if n == 0:
        return w
    s = w + w
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        i = f[j - k - 1]
        while i != -1 and s[j] != s[k + i + 1]:
            if s[j] < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if i == -1 and s[j] != s[k]:
            if s[j] < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return s[k:k + n]


def _as_symbols(word) -> tuple:
    if isinstance(word, str):
        return tuple(word)
    return tuple(int(v) for v in word)


def minimal_rotation_equivalent(word_a, word_b) -> bool:
    """True iff ``word_b`` is a cyclic rotation of ``word_a``."""
    a, b = _as_symbols(word_a), _as_symbols(word_b)
    if len(a) != len(b):
        return False
    return canonical_rotation(a) == canonical_rotation(b)
