"""
Sink versus wall play
=====================

The same move set gives different nim-sequences depending on what happens
below zero.  Under the sink every non-positive heap is a finished game of
value 0; under the wall, moves past zero are simply not allowed.
"""
from sinksub import detect_period, duality_report, grundy_sequence

# S = {2, 5}: the sink sequence starts at x = 1, the wall sequence at x = 0
print("sink:", grundy_sequence([2, 5], "sink", 16).tolist())
print("wall:", grundy_sequence([2, 5], "wall", 14).tolist())

# The sink sequence settles after three values; both have period 7
for conv in ("sink", "wall"):
    info = detect_period([2, 5], conv)
    print(f"{conv}: preperiod={info.preperiod} period={info.period} word={info.word}")

# The two period words are rotations of one another
print(duality_report([2, 5]).format())

# With S = {1, ..., n} the conventions coincide (shifted by the wall's heap 0)
print(grundy_sequence([1, 2, 3], "sink", 8).tolist())
print(grundy_sequence([1, 2, 3], "wall", 9).tolist()[1:])
