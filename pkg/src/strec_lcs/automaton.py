"""Pattern automaton: KMP prefix function, sigma transitions and the lambda table.

States are matched-prefix lengths ``0..r``.  A symbol sequence may be a
``str``, ``bytes`` or any sequence of hashable symbols.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MAX_LENGTH = 2**31 - 1


class EmptyPatternError(ValueError):
    """Raised when a constraint pattern has no symbols."""

    def __init__(self, msg="empty constraint pattern is infeasible"):
        super().__init__(msg)


def build_prefix_function(pattern) -> list[int]:
    """Return ``kmp[0..r]`` for *pattern*, with ``kmp[0] == -1``.

    ``kmp[i]`` is the length of the longest proper prefix of ``pattern[:i]``
    that is also a suffix of it.
    """
    r = len(pattern)
    if r == 0:
        raise EmptyPatternError()
    kmp = [0] * (r + 1)
    kmp[0] = -1
    k = 0
    for i in range(2, r + 1):
        # k == kmp[i-1] on entry; pattern is 0-based, so p_{k+1} is pattern[k]
        while k >= 0 and pattern[k] != pattern[i - 1]:
            k = kmp[k]
        k += 1
        kmp[i] = k
    return kmp


def sigma(pattern, kmp, k: int, ch) -> int:
    """State reached from matched-prefix length *k* after reading *ch*.

    Follows failure links until ``p_{k+1} == ch`` or the ``-1`` sentinel.
    Accepts ``k == r`` (a full match), which falls back through ``kmp[r]``.
    """
    r = len(pattern)
    while k >= 0 and (k == r or pattern[k] != ch):
        k = kmp[k]
    return k + 1


def sigma_string(pattern, kmp, s) -> int:
    """Length of the longest suffix of *s* that is a prefix of *pattern*."""
    k = 0
    for ch in s:
        k = sigma(pattern, kmp, k, ch)
    return k


@dataclass(frozen=True, eq=False)
class TransitionTable:
    """lambda(k, a) for states ``0..r-1``; symbols outside *alphabet* map to 0.

    Column ``c`` of ``entries`` holds symbol ``alphabet[c - 1]``; column 0 is the
    shared all-zero row for foreign symbols.
    """

    alphabet: tuple
    entries: np.ndarray
    index: dict = field(repr=False, compare=False, default_factory=dict)

    def __getitem__(self, key) -> int:
        k, a = key
        return int(self.entries[k, self.index.get(a, 0)])

    def code(self, a) -> int:
        return self.index.get(a, 0)

    def encode(self, seq) -> np.ndarray:
        """Map each symbol to its column; 0 for symbols absent from the table."""
        get = self.index.get
        return np.fromiter((get(a, 0) for a in seq), dtype=np.int32, count=len(seq))


def build_transition_table(pattern, alphabet=None, kmp=None) -> TransitionTable:
    """Precompute lambda(k, a) = sigma(P[1:k] + a) in O(r * |alphabet|).

    *alphabet* defaults to the distinct symbols of *pattern* in first-seen order
    and must cover every symbol of the pattern.
    """
    r = len(pattern)
    if r == 0:
        raise EmptyPatternError()
    if kmp is None:
        kmp = build_prefix_function(pattern)
    if alphabet is None:
        alphabet = tuple(dict.fromkeys(pattern))
    else:
        alphabet = tuple(dict.fromkeys(alphabet))
        missing = set(pattern) - set(alphabet)
        if missing:
            raise ValueError(f"alphabet is missing pattern symbols {sorted(map(repr, missing))}")
    index = {a: c + 1 for c, a in enumerate(alphabet)}

    lam = np.zeros((r, len(alphabet) + 1), dtype=np.int32)
    lam[0, index[pattern[0]]] = 1
    for t in range(1, r):
        nxt = index[pattern[t]]
        for c in range(1, len(alphabet) + 1):
            lam[t, c] = t + 1 if c == nxt else lam[kmp[t], c]
    return TransitionTable(alphabet, lam, index)


class ConstraintPattern:
    """A non-empty forbidden substring with its prefix function and lambda table."""

    __slots__ = ("symbols", "prefix", "transitions")

    def __init__(self, symbols, alphabet=None):
        if isinstance(symbols, ConstraintPattern):
            symbols = symbols.symbols
        if not isinstance(symbols, (str, bytes)):
            symbols = tuple(symbols)
        if len(symbols) == 0:
            raise EmptyPatternError()
        if len(symbols) > MAX_LENGTH:
            raise ValueError("pattern longer than 2**31 - 1 symbols")
        self.symbols = symbols
        self.prefix = build_prefix_function(symbols)
        self.transitions = build_transition_table(symbols, alphabet, self.prefix)

    def __len__(self):
        return len(self.symbols)

    def __repr__(self):
        return f"ConstraintPattern({self.symbols!r})"

    def __eq__(self, other):
        return isinstance(other, ConstraintPattern) and self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def sigma(self, k: int, ch) -> int:
        return sigma(self.symbols, self.prefix, k, ch)

    def sigma_string(self, s) -> int:
        return sigma_string(self.symbols, self.prefix, s)


def as_pattern(p, alphabet=None) -> ConstraintPattern:
    if isinstance(p, ConstraintPattern):
        return p
    return ConstraintPattern(p, alphabet)
