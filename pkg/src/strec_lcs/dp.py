"""Constrained LCS excluding a pattern as a substring, by DP over automaton states.

``f[i, j, k]`` is the length of the longest common subsequence of ``x[:i]``
and ``y[:j]`` that avoids the pattern and ends in automaton state ``k``
(``0 <= k < r``).  The answer is ``max_k f[n, m, k]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numba
import numpy as np

from .automaton import MAX_LENGTH, ConstraintPattern, as_pattern
from .reference import join_like


class InconsistentTensorError(RuntimeError):
    """Backtrace reached a cell that no recurrence case explains."""


@dataclass(frozen=True, eq=False)
class DpTensor:
    """The filled ``(n+1, m+1, r)`` table together with the inputs that produced it."""

    values: np.ndarray
    x: object
    y: object
    pattern: ConstraintPattern

    def __getitem__(self, key):
        return self.values[key]

    @property
    def shape(self):
        return self.values.shape


@dataclass(frozen=True, eq=False)
class SolveOutcome:
    length: int
    best_state: int
    witness: Optional[object] = None
    tensor: Optional[DpTensor] = None


def _check_sizes(x, y):
    if len(x) > MAX_LENGTH or len(y) > MAX_LENGTH:
        raise ValueError("inputs longer than 2**31 - 1 symbols are not supported")


def _best_state(last) -> int:
    # argmax returns the first (smallest) maximizing state
    return int(np.argmax(last))


def _argmax_state(prev, sig, k: int, r: int) -> int:
    """Smallest t < r maximizing prev[t] subject to sig[t] == k, or -1."""
    tmp, best = -1, -1
    for t in range(r):
        if sig[t] == k and prev[t] > tmp:
            tmp, best = prev[t], t
    return best


def max_sigma(tensor: DpTensor, i: int, j: int, k: int) -> Optional[int]:
    """State t* feeding the match candidate of cell (i, j, k), or None if no t qualifies.

    Requires ``x[i-1] == y[j-1]``.  Ties go to the smallest t.
    """
    p = tensor.pattern
    r = len(p)
    ch = tensor.x[i - 1]
    if ch != tensor.y[j - 1]:
        raise ValueError(f"x_{i} != y_{j}: max_sigma is only defined on matching cells")
    sig = [p.sigma(t, ch) for t in range(r)]
    t = _argmax_state(tensor.values[i - 1, j - 1], sig, k, r)
    return None if t < 0 else t


def solve_naive(x, y, p, *, witness: bool = True) -> SolveOutcome:
    """Direct transcription of the recurrence, O(n m r^2) with failure-link sigma."""
    p = as_pattern(p)
    _check_sizes(x, y)
    n, m, r = len(x), len(y), len(p)
    f = [[[0] * r for _ in range(m + 1)] for _ in range(n + 1)]
    for i in range(1, n + 1):
        ch = x[i - 1]
        sig = [p.sigma(t, ch) for t in range(r)]
        up, row = f[i - 1], f[i]
        for j in range(1, m + 1):
            cell = row[j]
            if ch != y[j - 1]:
                a, b = up[j], row[j - 1]
                for k in range(r):
                    cell[k] = a[k] if a[k] > b[k] else b[k]
                continue
            diag = up[j - 1]
            for k in range(r):
                t = _argmax_state(diag, sig, k, r)
                best = diag[k]
                if t >= 0 and diag[t] + 1 > best:
                    best = diag[t] + 1
                cell[k] = best
    values = np.array(f, dtype=np.int32).reshape(n + 1, m + 1, r)
    return _finish(DpTensor(values, x, y, p), witness)


@numba.njit(cache=True, nogil=True)
def _fill_full(xc, yc, lam):  # pragma: no cover - compiled
    n, m, r = xc.shape[0], yc.shape[0], lam.shape[0]
    f = np.zeros((n + 1, m + 1, r), dtype=np.int32)
    for i in range(1, n + 1):
        a = xc[i - 1]
        for j in range(1, m + 1):
            for k in range(r):
                u, v = f[i - 1, j, k], f[i, j - 1, k]
                f[i, j, k] = u if u > v else v
            if a == yc[j - 1]:
                for k in range(r):
                    t = lam[k, a]
                    if t < r:
                        c = f[i - 1, j - 1, k] + 1
                        if c > f[i, j, t]:
                            f[i, j, t] = c
    return f


@numba.njit(cache=True, nogil=True)
def _fill_rows(xc, yc, lam):  # pragma: no cover - compiled
    n, m, r = xc.shape[0], yc.shape[0], lam.shape[0]
    prev = np.zeros((m + 1, r), dtype=np.int32)
    cur = np.zeros((m + 1, r), dtype=np.int32)
    for i in range(1, n + 1):
        a = xc[i - 1]
        for j in range(1, m + 1):
            for k in range(r):
                u, v = prev[j, k], cur[j - 1, k]
                cur[j, k] = u if u > v else v
            if a == yc[j - 1]:
                for k in range(r):
                    t = lam[k, a]
                    if t < r:
                        c = prev[j - 1, k] + 1
                        if c > cur[j, t]:
                            cur[j, t] = c
        prev, cur = cur, prev
    return prev[m].copy()


def _as_array(seq):
    if isinstance(seq, (bytes, bytearray)):
        return np.frombuffer(bytes(seq), dtype=np.uint8).astype(np.int64)
    if isinstance(seq, str):
        return np.frombuffer(seq.encode("utf-32-le"), dtype=np.uint32).astype(np.int64)
    return None


def _kernel_inputs(x, y, p: ConstraintPattern):
    """Integer codes for x and y plus the matching lambda table.

    Pattern symbols map to their lambda column.  Every other distinct symbol
    gets its own code past the last column, backed by an all-zero column, so
    equality between x and y is preserved.
    """
    table = p.transitions
    xa, ya = _as_array(x), _as_array(y)
    if xa is not None and ya is not None and type(x) is type(y) and type(x) is type(p.symbols):
        both = np.concatenate([xa, ya])
        uniq, inv = np.unique(both, return_inverse=True)
        syms = uniq.tolist() if isinstance(x, (bytes, bytearray)) else [chr(c) for c in uniq]
    else:
        syms_all = list(x) + list(y)
        uniq_map = {}
        inv = np.fromiter((uniq_map.setdefault(a, len(uniq_map)) for a in syms_all),
                          dtype=np.int64, count=len(syms_all))
        syms = list(uniq_map)
    base = len(table.alphabet) + 1
    code_of = np.empty(len(syms), dtype=np.int64)
    extra = 0
    for u, a in enumerate(syms):
        c = table.index.get(a)
        if c is None:
            c = base + extra
            extra += 1
        code_of[u] = c
    codes = code_of[inv]
    lam = table.entries
    if extra:
        lam = np.concatenate([lam, np.zeros((lam.shape[0], extra), dtype=lam.dtype)], axis=1)
    return codes[:len(x)].copy(), codes[len(x):].copy(), np.ascontiguousarray(lam)


def solve_optimized(x, y, p, *, witness: bool = True) -> SolveOutcome:
    """O(n m r) fill using the precomputed lambda table.

    With ``witness=False`` only two ``(m+1, r)`` layers are kept and the
    outcome carries neither tensor nor witness.
    """
    p = as_pattern(p)
    _check_sizes(x, y)
    xc, yc, lam = _kernel_inputs(x, y, p)
    if not witness:
        last = _fill_rows(xc, yc, lam)
        best = _best_state(last)
        return SolveOutcome(int(last[best]), best)
    return _finish(DpTensor(_fill_full(xc, yc, lam), x, y, p), True)


def _finish(tensor: DpTensor, witness: bool) -> SolveOutcome:
    last = tensor.values[-1, -1]
    best = _best_state(last)
    w = backtrace(tensor, len(tensor.x), len(tensor.y), best) if witness else None
    return SolveOutcome(int(last[best]), best, w, tensor)


def backtrace(tensor: DpTensor, i: int, j: int, k: int):
    """Recover a witness of length ``f[i, j, k]`` ending in state ``k``.

    Walks the same cases as the recursive formulation, iteratively so long
    inputs do not hit the interpreter's recursion limit.
    """
    f = tensor.values
    x, y = tensor.x, tensor.y
    out = []
    while i > 0 and j > 0 and f[i, j, k] > 0:
        if x[i - 1] == y[j - 1]:
            if f[i, j, k] == f[i - 1, j - 1, k]:
                i, j = i - 1, j - 1
                continue
            t = max_sigma(tensor, i, j, k)
            if t is None or f[i - 1, j - 1, t] + 1 != f[i, j, k]:
                raise InconsistentTensorError(f"no predecessor explains cell ({i}, {j}, {k})")
            out.append(x[i - 1])
            i, j, k = i - 1, j - 1, t
        elif f[i - 1, j, k] > f[i, j - 1, k]:
            i -= 1
        else:
            if f[i, j - 1, k] != f[i, j, k]:
                raise InconsistentTensorError(f"no predecessor explains cell ({i}, {j}, {k})")
            j -= 1
    out.reverse()
    return join_like(x, out)
