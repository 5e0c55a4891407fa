"""Timing harness for the O(nmr) scaling check."""

from __future__ import annotations

import itertools
import statistics
import time

from .automaton import ConstraintPattern
from .difftest import SplitMix64
from .dp import solve_naive, solve_optimized

BENCH_SEED = 0x5EED

ALGOS = {
    "optimized": lambda x, y, p: solve_optimized(x, y, p, witness=False),
    "optimized-witness": lambda x, y, p: solve_optimized(x, y, p, witness=True),
    "naive": lambda x, y, p: solve_naive(x, y, p, witness=False),
}


def random_string(rng: SplitMix64, length: int, alphabet: str) -> str:
    return "".join(alphabet[rng.below(len(alphabet))] for _ in range(length))


def bench_inputs(n: int, m: int, r: int, alphabet: str, seed: int = BENCH_SEED):
    """Fixed-seed inputs; the same (n, m, r) always yields the same strings."""
    rng = SplitMix64(seed ^ (n * 1_000_003 + m * 1_009 + r))
    return random_string(rng, n, alphabet), random_string(rng, m, alphabet), random_string(rng, r, alphabet)


def median_ns(fn, args, reps: int, warmup: int = 1) -> int:
    for _ in range(warmup):
        fn(*args)
    samples = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        fn(*args)
        samples.append(time.perf_counter_ns() - t0)
    return int(statistics.median(samples))


def bench_one(n, m, r, alphabet="ab", reps=5, algos=("optimized",), seed=BENCH_SEED) -> list[dict]:
    """Rows with keys n, m, r, algo, median_ns for one size triple."""
    if reps < 1:
        raise ValueError("reps must be at least 1")
    x, y, p = bench_inputs(n, m, r, alphabet, seed)
    pattern = ConstraintPattern(p)
    return [
        {"n": n, "m": m, "r": r, "algo": algo, "median_ns": median_ns(ALGOS[algo], (x, y, pattern), reps)}
        for algo in algos
    ]


def run_bench(n_list, m_list, r_list, alphabet="ab", reps=5, algos=("optimized",), seed=BENCH_SEED):
    for n, m, r in itertools.product(n_list, m_list, r_list):
        yield from bench_one(n, m, r, alphabet, reps, algos, seed)


def paired_ratio(small, large, alphabet="ab", reps=11, algo="optimized", seed=BENCH_SEED) -> float:
    """Median runtime of *large* over *small*, with repetitions interleaved.

    Interleaving keeps slow drifts in machine load from landing on one side.
    """
    fn = ALGOS[algo]
    args = []
    for size in (small, large):
        x, y, p = bench_inputs(*size, alphabet, seed)
        args.append((x, y, ConstraintPattern(p)))
    for a in args:
        fn(*a)
    ts = ([], [])
    for _ in range(reps):
        for side, a in enumerate(args):
            t0 = time.perf_counter_ns()
            fn(*a)
            ts[side].append(time.perf_counter_ns() - t0)
    return statistics.median(ts[1]) / statistics.median(ts[0])
