"""Solving instances: lengths, witnesses, memory modes, other symbol types."""
from strec_lcs import backtrace, plain_lcs, solve_naive, solve_optimized, validate_witness

x = "the quick brown fox jumps over the lazy dog"
y = "a quick brown dog outpaces the lazy fox"

for p in ("o", "ow", "the", "xyz"):
    out = solve_optimized(x, y, p)
    assert validate_witness(out.witness, x, y, p, out.length) == []
    print(f"exclude {p!r:6} -> {out.length:2d}  {out.witness!r}")
print("unconstrained LCS:", plain_lcs(x, y))

# Length only: two (m+1, r) layers instead of the whole tensor.
print("\nlength-only:", solve_optimized(x, y, "ow", witness=False))

# The naive fill is the recurrence read literally; its tensor is identical.
naive = solve_naive(x, y, "ow")
same = (naive.tensor.values == solve_optimized(x, y, "ow").tensor.values).all()
print("naive and optimized tensors identical:", bool(same))

# Witnesses from any cell, not just the final one.
t = naive.tensor
print("best witness for x[:20], y[:20], state 1:", repr(backtrace(t, 20, 20, 1)))

# Any hashable symbols work; the witness keeps the input's type.
print("\ntuples:", solve_optimized((1, 2, 3, 2, 1), (2, 3, 2, 1, 1), (2, 1)).witness)
print("bytes: ", solve_optimized(b"GATTACA", b"TACGATA", b"TA").witness)
