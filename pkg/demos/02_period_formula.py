"""
Closed-form periods of additive sets
====================================

For S(m, delta) = {m, m + delta, 2m + delta} under the sink, the period is
linear in delta when d = delta mod 2m is at most m and quadratic in m
otherwise.  Here the formula is checked against direct detection on a grid.
"""
import numpy as np

from sinksub import detect_period, period_length, reduce_params
from sinksub.explorer import scan_rows, summarize

for m, delta in [(5, 6), (5, 9), (6, 8), (6, 10), (2, 5), (6, 20)]:
    p = reduce_params(m, delta)
    info = detect_period(p.moves)
    print(f"m={m:2d} delta={delta:2d} d={p.d:2d} case={p.case.value:2s} "
          f"formula={period_length(m, delta):4d} detected=({info.preperiod}, {info.period})")

rows = scan_rows(12, 51)
print(summarize(rows))

# period length as a table: rows m, columns delta
grid = np.zeros((12, 51), dtype=int)
for r in rows:
    grid[r.m - 1, r.delta - 1] = r.formula_period
print(grid[:6, :12])

# each extra layer delta -> delta + 2m adds 4 m^2 / gcd(m, d) in case II
m, d = 4, 7
print([period_length(m, d + 2 * m * n) for n in range(5)])
