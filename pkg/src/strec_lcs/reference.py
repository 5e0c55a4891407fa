"""Baselines for differential testing.

Everything here is written from the problem definition alone and shares no
code with the dynamic programs in :mod:`strec_lcs.dp`: the brute-force
oracle, definitional prefix function / sigma, a textbook LCS, and the
Chen-Chao recurrences that the corrected DP replaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .automaton import EmptyPatternError

ORACLE_GUARD = 30


class OracleSizeError(ValueError):
    """Raised when an instance is too large to enumerate."""


def _symbols(p):
    if hasattr(p, "symbols"):
        p = p.symbols
    if len(p) == 0:
        raise EmptyPatternError()
    return p


def join_like(like, symbols):
    """Rebuild *symbols* as the same kind of sequence as *like*."""
    if isinstance(like, str):
        return "".join(symbols)
    if isinstance(like, (bytes, bytearray)):
        return bytes(symbols)
    return tuple(symbols)


def contains_substring(s, p) -> bool:
    if isinstance(s, (str, bytes)) and type(s) is type(p):
        return p in s
    s, p = tuple(s), tuple(p)
    r = len(p)
    return any(s[i:i + r] == p for i in range(len(s) - r + 1))


def is_subsequence(w, s) -> bool:
    it = iter(s)
    return all(any(c == d for d in it) for c in w)


def prefix_function_bruteforce(pattern) -> list[int]:
    """kmp[0..r] straight from the definition (longest proper border per prefix)."""
    p = tuple(pattern)
    kmp = [-1]
    for i in range(1, len(p) + 1):
        kmp.append(max(b for b in range(i) if p[:b] == p[i - b:i]))
    return kmp


def sigma_bruteforce(pattern, s) -> int:
    """Longest suffix of *s* that is also a prefix of *pattern*, by scanning all suffixes."""
    p, s = tuple(pattern), tuple(s)
    for length in range(min(len(p), len(s)), -1, -1):
        if s[len(s) - length:] == p[:length]:
            return length
    return 0


def plain_lcs(x, y) -> int:
    """Unconstrained LCS length, classic O(nm) table."""
    prev = [0] * (len(y) + 1)
    for a in x:
        cur = [0]
        for j, b in enumerate(y, 1):
            cur.append(prev[j - 1] + 1 if a == b else max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


def validate_witness(w, x, y, p, length=None) -> list[str]:
    """Return the list of ways *w* fails to be a valid constrained common subsequence."""
    problems = []
    if length is not None and len(w) != length:
        problems.append(f"witness length {len(w)} != reported {length}")
    if not is_subsequence(w, x):
        problems.append("witness is not a subsequence of x")
    if not is_subsequence(w, y):
        problems.append("witness is not a subsequence of y")
    if contains_substring(w, _symbols(p)):
        problems.append("witness contains the pattern")
    return problems


@dataclass(frozen=True)
class OracleResult:
    length: int
    witness: object


def brute_force_oracle(x, y, p, guard: int = ORACLE_GUARD) -> OracleResult:
    """Longest common subsequence of *x* and *y* avoiding *p*, by enumeration.

    Subsequences of the shorter input are enumerated from the longest length
    down; the first length with a survivor is the answer, and the
    lexicographically smallest survivor is the witness.
    """
    p = _symbols(p)
    if len(x) + len(y) > guard:
        raise OracleSizeError(f"n + m = {len(x) + len(y)} exceeds oracle guard {guard}")
    short, long_ = (x, y) if len(x) <= len(y) else (y, x)
    for length in range(len(short), -1, -1):
        survivors = set()
        for idx in combinations(range(len(short)), length):
            w = join_like(short, (short[i] for i in idx))
            if w in survivors or contains_substring(w, p):
                continue
            if is_subsequence(w, long_):
                survivors.add(w)
        if survivors:
            return OracleResult(length, join_like(x, min(survivors)))
    raise AssertionError("unreachable: the empty sequence always survives")


@dataclass(frozen=True, eq=False)
class ChenChaoTable:
    """L(i, j, k) for 0 <= i <= n, 0 <= j <= m, 0 <= k <= r."""

    values: np.ndarray
    variant: int

    @property
    def length(self) -> int:
        return int(self.values[-1, -1, -1])


def chen_chao_solve(x, y, p, variant: int = 1) -> ChenChaoTable:
    """Fill L by the four-case Chen-Chao recurrence (*variant* 1 or 2).

    Known to be wrong: on x="abbb", y="aab", p="ab" it reports 2, not 1.
    """
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    p = _symbols(p)
    n, m, r = len(x), len(y), len(p)
    L = np.zeros((n + 1, m + 1, r + 1), dtype=np.int32)
    for i in range(1, n + 1):
        xi = x[i - 1]
        for j in range(1, m + 1):
            if xi != y[j - 1]:
                for k in range(r + 1):
                    L[i, j, k] = max(L[i - 1, j, k], L[i, j - 1, k])
                continue
            for k in range(r + 1):
                if k >= 1 and xi == p[k - 1]:
                    if k == 1:
                        L[i, j, k] = L[i - 1, j - 1, k]
                    elif variant == 1:
                        L[i, j, k] = 1 + max(L[i - 1, j - 1, k - 1], L[i - 1, j - 1, k])
                    else:
                        L[i, j, k] = 1 + L[i - 1, j - 1, k]
                else:
                    L[i, j, k] = 1 + L[i - 1, j - 1, k]
    return ChenChaoTable(L, variant)
