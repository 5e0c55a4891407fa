import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from strec_lcs import (
    ConstraintPattern,
    EmptyPatternError,
    InconsistentTensorError,
    backtrace,
    brute_force_oracle,
    max_sigma,
    plain_lcs,
    solve_naive,
    solve_optimized,
    validate_witness,
)
from strec_lcs.dp import DpTensor
from strec_lcs.reference import sigma_bruteforce

from conftest import words

SOLVERS = [solve_naive, solve_optimized]
instances = st.tuples(words(), words(), words(min_size=1, max_size=4))


@pytest.mark.parametrize("solve", SOLVERS)
def test_counterexample_is_one(solve, counterexample):
    out = solve(*counterexample)
    assert out.length == 1
    assert out.witness in ("a", "b")
    assert validate_witness(out.witness, *counterexample, out.length) == []


@pytest.mark.parametrize("solve", SOLVERS)
def test_examples(solve):
    assert solve("", "aab", "ab").length == 0
    assert solve("aab", "", "ab").length == 0
    out = solve("abc", "abc", "b")
    assert brute_force_oracle("abc", "abc", "b").length == 2
    assert (out.length, out.witness) == (2, "ac")


@pytest.mark.parametrize("solve", SOLVERS)
def test_empty_pattern(solve):
    with pytest.raises(EmptyPatternError):
        solve("a", "a", "")


def test_foreign_pattern_is_plain_lcs():
    assert solve_optimized("abcab", "bacba", "zz").length == plain_lcs("abcab", "bacba") == 3


def test_length_only_mode():
    out = solve_optimized("abbb", "aab", "ab", witness=False)
    assert (out.length, out.best_state, out.witness, out.tensor) == (1, 0, None, None)


def test_max_sigma_examples(counterexample):
    t = solve_naive(*counterexample).tensor
    # exhaustive over t in {0, 1}: sigma("" + a) = sigma("a" + a) = 1, both f = 0
    assert [sigma_bruteforce("ab", "ab"[:s] + "a") for s in range(2)] == [1, 1]
    assert max_sigma(t, 1, 1, 1) == 0
    # state 0 is unreachable by reading 'a' against pattern "ab"
    assert max_sigma(t, 1, 1, 0) is None
    with pytest.raises(ValueError):
        max_sigma(t, 1, 3, 0)


def test_max_sigma_ties_pick_smallest_state():
    # pattern "aab": reading 'a' from states 0 and 1 lands on 1 and 2; from 2 it stays at 2
    t = solve_naive("aa", "aa", "aab").tensor
    values = t.values.copy()
    values[1, 1, :] = [1, 1, 1]
    tensor = DpTensor(values, t.x, t.y, t.pattern)
    assert max_sigma(tensor, 2, 2, 2) == 1


def test_backtrace_zero_cell():
    t = solve_naive("ab", "ba", "ab").tensor
    assert backtrace(t, 0, 2, 0) == ""
    assert backtrace(t, 2, 2, 1) == ("a" if t.values[2, 2, 1] else "")


def test_backtrace_detects_inconsistent_tensor():
    t = solve_naive("aa", "aa", "b").tensor
    values = t.values.copy()
    values[2, 2, 0] = 5
    with pytest.raises(InconsistentTensorError):
        backtrace(DpTensor(values, t.x, t.y, t.pattern), 2, 2, 0)


def test_generic_sequences():
    out = solve_optimized((1, 2, 3, 2), (2, 1, 3, 2), (3, 2))
    assert out.length == brute_force_oracle((1, 2, 3, 2), (2, 1, 3, 2), (3, 2)).length
    assert isinstance(out.witness, tuple)
    out = solve_optimized(b"abbb", b"aab", b"ab")
    assert out.length == 1 and isinstance(out.witness, bytes)


def test_mixed_foreign_symbols_keep_equality():
    # 'x' and 'y' are outside the pattern but must still only match themselves
    assert solve_optimized("xy", "yx", "a").length == 1
    assert solve_optimized("xyxy", "xyxy", "a").length == 4


@settings(max_examples=300)
@given(instances)
def test_solvers_agree_with_oracle(inst):
    x, y, p = inst
    naive, opt = solve_naive(x, y, p), solve_optimized(x, y, p)
    expected = brute_force_oracle(x, y, p).length
    assert naive.length == opt.length == expected
    np.testing.assert_array_equal(naive.tensor.values, opt.tensor.values)
    assert solve_optimized(x, y, p, witness=False).length == expected
    for out in (naive, opt):
        assert validate_witness(out.witness, x, y, p, out.length) == []
        assert sigma_bruteforce(p, out.witness) == out.best_state
        last = out.tensor.values[-1, -1]
        assert out.length == last.max() and out.best_state == int(np.flatnonzero(last == last.max())[0])


@settings(max_examples=150)
@given(instances)
def test_tensor_invariants(inst):
    x, y, p = inst
    f = solve_optimized(x, y, p).tensor.values
    n, m = len(x), len(y)
    assert f.shape == (n + 1, m + 1, len(p))
    assert not f[0].any() and not f[:, 0].any()
    assert (np.diff(f, axis=0) >= 0).all() and (np.diff(f, axis=1) >= 0).all()
    i = np.arange(n + 1)[:, None, None]
    j = np.arange(m + 1)[None, :, None]
    assert (f >= 0).all() and (f <= np.minimum(i, j)).all()


@settings(max_examples=100)
@given(instances)
def test_witness_from_any_cell(inst):
    x, y, p = inst
    tensor = solve_naive(x, y, p).tensor
    f = tensor.values
    for i in range(len(x) + 1):
        for j in range(len(y) + 1):
            for k in range(len(p)):
                w = backtrace(tensor, i, j, k)
                assert len(w) == f[i, j, k]
                assert validate_witness(w, x[:i], y[:j], p) == []
                # f also counts runs that start inside a partial match, so the
                # witness's own state can only be at or below k
                assert sigma_bruteforce(p, w) <= k


@given(words(), words(), words(alphabet="xyz", min_size=1, max_size=4))
def test_disjoint_pattern_reduces_to_lcs(x, y, p):
    assert solve_optimized(x, y, p).length == plain_lcs(x, y)


@given(words(), words(), st.sampled_from("abcd"))
def test_single_symbol_pattern_deletes_it(x, y, a):
    assert solve_optimized(x, y, a).length == plain_lcs(x.replace(a, ""), y.replace(a, ""))


def test_long_input_backtrace_is_iterative():
    x = "ab" * 1500
    y = "ba" * 1500
    out = solve_optimized(x, y, "aa")
    assert validate_witness(out.witness, x, y, "aa", out.length) == []
    assert out.length == 2999
