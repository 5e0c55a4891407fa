"""Why the older four-case recurrence fails, on the smallest interesting input.

x = "abbb", y = "aab", forbidden substring "ab".  Every common subsequence of
length 2 is "ab" (or contains it), so the right answer is 1.
"""
import numpy as np

from strec_lcs import brute_force_oracle, chen_chao_solve, solve_optimized
from strec_lcs.cli import format_table

x, y, p = "abbb", "aab", "ab"

# The Chen-Chao table, printed one k-plane per column group.
for variant in (1, 2):
    table = chen_chao_solve(x, y, p, variant)
    print(f"recurrence variant {variant}: L(4,3,2) = {table.length}")
print(format_table(chen_chao_solve(x, y, p, 1).values))

# Both variants report 2.  The corrected DP and exhaustive search agree on 1.
out = solve_optimized(x, y, p)
print("\ncorrected DP:", out.length, "witness", repr(out.witness), "state", out.best_state)
print("brute force: ", brute_force_oracle(x, y, p))

# The corrected table tracks the automaton state k of each partial solution.
f = out.tensor.values
print("\nf(i, j, k) planes:")
print(format_table(f))
print("answer = max_k f(n, m, k) =", int(np.max(f[-1, -1])))
