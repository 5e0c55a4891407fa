"""Randomized differential testing against the brute-force oracle.

Instances come from a SplitMix64 stream so any (seed, trial) pair can be
regenerated exactly, in any language:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)                     (all mod 2**64)

Trial ``t`` of seed ``s`` seeds its own generator with the first output of
``SplitMix64(s ^ (t * 0xD1B54A32D192ED03 mod 2**64))``.  A uniform integer in
``[0, bound)`` is ``(next() * bound) >> 64``.  Per trial the draws are, in
order: n, m, r - 1, then the symbols of x, y and p.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

from .dp import solve_naive, solve_optimized
from .reference import brute_force_oracle, chen_chao_solve, validate_witness

log = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
TRIAL_MIX = 0xD1B54A32D192ED03


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        return (self.next() * bound) >> 64


def trial_rng(seed: int, trial: int) -> SplitMix64:
    return SplitMix64(SplitMix64(seed ^ ((trial * TRIAL_MIX) & MASK64)).next())


@dataclass(frozen=True)
class InstanceSpec:
    max_n: int = 10
    max_m: int = 10
    max_r: int = 4
    alphabet: str = "abc"
    seed: int = 0
    trials: int = 10_000

    def __post_init__(self):
        if self.max_r < 1:
            raise ValueError("max_r must be at least 1")
        if not self.alphabet:
            raise ValueError("alphabet must be non-empty")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.max_n < 0 or self.max_m < 0:
            raise ValueError("max_n and max_m must be non-negative")


def generate_instance(spec: InstanceSpec, trial: int):
    """Deterministic (x, y, p) for *trial*; lengths uniform on [0, max_n] x [0, max_m] x [1, max_r]."""
    rng = trial_rng(spec.seed, trial)
    n = rng.below(spec.max_n + 1)
    m = rng.below(spec.max_m + 1)
    r = 1 + rng.below(spec.max_r)
    sym = spec.alphabet
    k = len(sym)
    x = "".join(sym[rng.below(k)] for _ in range(n))
    y = "".join(sym[rng.below(k)] for _ in range(m))
    p = "".join(sym[rng.below(k)] for _ in range(r))
    return x, y, p


# name -> callable(x, y, p) returning (length, witness or None)
def _naive(x, y, p):
    out = solve_naive(x, y, p)
    return out.length, out.witness


def _optimized(x, y, p):
    out = solve_optimized(x, y, p)
    return out.length, out.witness


SOLVERS: dict[str, Callable] = {
    "naive": _naive,
    "optimized": _optimized,
    "chen-chao-1": lambda x, y, p: (chen_chao_solve(x, y, p, 1).length, None),
    "chen-chao-2": lambda x, y, p: (chen_chao_solve(x, y, p, 2).length, None),
}


def resolve_solvers(solvers) -> dict[str, Callable]:
    if isinstance(solvers, str):
        solvers = [s for s in solvers.split(",") if s]
    if isinstance(solvers, dict):
        return dict(solvers)
    out = {}
    for name in solvers:
        if name not in SOLVERS:
            raise ValueError(f"unknown solver {name!r}; choose from {', '.join(SOLVERS)}")
        out[name] = SOLVERS[name]
    if not out:
        raise ValueError("no solvers selected")
    return out


@dataclass(frozen=True)
class Discrepancy:
    x: str
    y: str
    p: str
    expected: int
    reported: dict
    trial: Optional[int] = None
    minimized: bool = False
    witness_errors: dict = field(default_factory=dict)
    error: Optional[str] = None

    @property
    def failing(self) -> list[str]:
        bad = [name for name, got in self.reported.items() if got != self.expected]
        return bad + [name for name in self.witness_errors if name not in bad]

    def to_dict(self) -> dict:
        return {
            "trial": self.trial,
            "x": self.x,
            "y": self.y,
            "p": self.p,
            "expected": self.expected,
            "reported": dict(self.reported),
            "minimized": self.minimized,
            "witness_errors": {k: list(v) for k, v in self.witness_errors.items()},
            "error": self.error,
        }


def check_instance(x, y, p, solvers: dict, trial=None) -> Optional[Discrepancy]:
    """Run every solver on one instance; a Discrepancy if any disagrees or emits a bad witness."""
    expected = brute_force_oracle(x, y, p).length
    reported, werr = {}, {}
    for name, solve in solvers.items():
        length, witness = solve(x, y, p)
        reported[name] = length
        if witness is not None:
            problems = validate_witness(witness, x, y, p, length)
            if problems:
                werr[name] = tuple(problems)
    if werr or any(v != expected for v in reported.values()):
        return Discrepancy(x, y, p, expected, reported, trial, witness_errors=werr)
    return None


def run_campaign(spec: InstanceSpec, solvers=("naive", "optimized"), *, minimize=False) -> list[Discrepancy]:
    """Compare *solvers* with the oracle on ``spec.trials`` generated instances.

    Core-DP witnesses are validated on every trial.  Results are ordered by
    trial index.
    """
    solvers = resolve_solvers(solvers)
    found = []
    for trial in range(spec.trials):
        d = check_instance(*generate_instance(spec, trial), solvers, trial)
        if d is not None:
            if minimize:
                d = shrink(d, solvers)
            found.append(d)
    log.info("%d trials, %d discrepancies", spec.trials, len(found))
    return found


def _reproduces(x, y, p, name, solvers) -> bool:
    if not p:
        return False
    d = check_instance(x, y, p, {name: solvers[name]})
    return d is not None


def shrink(d: Discrepancy, solvers=None) -> Discrepancy:
    """Greedy single-symbol deletion to a 1-minimal instance.

    Deletes left to right from x, then y, then p, repeating to a fixpoint,
    while the first failing solver of *d* still fails.  A *d* that does not
    reproduce comes back unchanged with ``error`` set.
    """
    solvers = resolve_solvers(solvers if solvers is not None else list(d.reported))
    failing = [name for name in d.failing if name in solvers]
    if not failing or not _reproduces(d.x, d.y, d.p, failing[0], solvers):
        return replace(d, error="not a reproducible discrepancy")
    name = failing[0]
    cur = [d.x, d.y, d.p]
    changed = True
    while changed:
        changed = False
        for slot in range(3):
            i = 0
            while i < len(cur[slot]):
                trial = list(cur)
                trial[slot] = cur[slot][:i] + cur[slot][i + 1:]
                if _reproduces(*trial, name, solvers):
                    cur = trial
                    changed = True
                else:
                    i += 1
    out = check_instance(*cur, solvers, d.trial)
    return replace(out, minimized=True)
