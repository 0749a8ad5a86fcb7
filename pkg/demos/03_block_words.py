"""
Building period words from blocks
=================================

When m < delta < 2m, write delta = m + k.  The period is a run of B- and
C-blocks, one per index i, with an extra 0^m after each block where
k (i + 1) is a multiple of m.  The word is checked against the recurrence, and
the factor audit shows which moves supply each smaller value.
"""
from sinksub import build_period_word_case2, product_structure, reduce_params
from sinksub.verifier import audit_tables, format_audit, verify_mex_consistency

for m, k in [(5, 1), (5, 4), (6, 2), (6, 4)]:
    p = reduce_params(m, m + k)
    w = build_period_word_case2(p)
    ok = not verify_mex_consistency(w, p)
    print(f"m={m} k={k}: blocks {product_structure(m, k):10s} period {w.total_length:4d} verified={ok}")

# run-length form of the m = 5, k = 4 period
print(build_period_word_case2(reduce_params(5, 9)).runlength())

# audit trace for the wrap case: A3 right after an inserted 0^m needs two moves
recs = audit_tables(reduce_params(6, 8))
print("\n".join(line for line in format_audit(recs).splitlines()
                if "copy=1 block=0" in line))
