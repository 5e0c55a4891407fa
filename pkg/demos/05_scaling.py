"""Runtime grows linearly in each of n, m and r.

Doubling one size at a time should roughly double the median runtime.  The
r-axis ratio sits a little lower because each cell has a fixed cost
(comparing x_i with y_j) besides its r-proportional work.
"""
import sys

from strec_lcs.bench import paired_ratio, run_bench

quick = "--quick" in sys.argv
base = 200 if quick else 1000
reps = 3 if quick else 21

for row in run_bench([base // 2, base], [base], [8], reps=reps):
    print(row)

for axis, small, large in (
    ("n", (base // 2, base, 8), (base, base, 8)),
    ("m", (base, base // 2, 8), (base, base, 8)),
    ("r", (base, base, 8), (base, base, 16)),
):
    print(f"{axis}: x{paired_ratio(small, large, reps=reps):.2f}")
