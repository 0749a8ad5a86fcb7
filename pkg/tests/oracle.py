"""Independent reference implementations; deliberately naive and separate from sinksub."""
from functools import lru_cache


def sink_values(moves, n):
    """v(1..n) by memoised recursion straight from the definition."""
    moves = tuple(moves)

    @lru_cache(maxsize=None)
    def v(x):
        if x <= 0:
            return 0
        opts = {v(x - s) for s in moves}
        return min(set(range(len(opts) + 1)) - opts)

    for x in range(1, n + 1):  # warm the cache bottom-up to avoid deep recursion
        v(x)
    return [v(x) for x in range(1, n + 1)]


def wall_values(moves, n):
    """v(0..n-1); options below zero do not exist."""
    out = []
    for x in range(n):
        opts = {out[x - s] for s in moves if x - s >= 0}
        out.append(min(set(range(len(opts) + 1)) - opts))
    return out


def eventual_period(vals):
    """Smallest period whose periodic tail spans at least half of ``vals`` and three
    repetitions, with the least pre-period for it.  Pure search; callers pass a
    sample long enough for the true tail to qualify."""
    n = len(vals)
    for per in range(1, n // 3 + 1):
        # smallest pre with vals[x] == vals[x + per] for all x >= pre
        pre = n - per
        while pre > 0 and vals[pre - 1] == vals[pre - 1 + per]:
            pre -= 1
        if n - pre >= max(3 * per, n // 2):
            return pre, per
    return None
