import numpy as np
import pytest
from hypothesis import given

from strec_lcs import OracleSizeError, brute_force_oracle, chen_chao_solve, plain_lcs, validate_witness
from strec_lcs.reference import contains_substring, is_subsequence

from conftest import words

# Table 2: rows i = 1..4; for each i the planes k = 0, 1, 2 with columns j = 1..3
TABLE2 = np.array(
    [
        [[1, 1, 1], [0, 0, 0], [1, 1, 1]],
        [[1, 1, 2], [0, 0, 1], [1, 1, 2]],
        [[1, 1, 2], [0, 0, 1], [1, 1, 2]],
        [[1, 1, 2], [0, 0, 1], [1, 1, 2]],
    ]
)


@pytest.mark.parametrize("variant", [1, 2])
def test_chen_chao_reproduces_table2(counterexample, variant):
    table = chen_chao_solve(*counterexample, variant=variant)
    assert table.values.shape == (5, 4, 3)
    np.testing.assert_array_equal(table.values[1:, 1:, :].transpose(0, 2, 1), TABLE2)
    assert table.length == 2
    assert not table.values[0].any() and not table.values[:, 0].any()


def test_chen_chao_variant_checked():
    with pytest.raises(ValueError):
        chen_chao_solve("a", "a", "a", variant=3)


@pytest.mark.parametrize(
    "x, y, p, length, witness",
    [
        ("abbb", "aab", "ab", 1, "a"),
        ("abc", "abc", "d", 3, "abc"),
        ("ab", "ab", "ab", 1, "a"),
        ("", "abc", "a", 0, ""),
    ],
)
def test_oracle_examples(x, y, p, length, witness):
    res = brute_force_oracle(x, y, p)
    assert (res.length, res.witness) == (length, witness)


def test_oracle_guard():
    with pytest.raises(OracleSizeError):
        brute_force_oracle("a" * 16, "a" * 15, "b")
    assert brute_force_oracle("a" * 16, "a" * 15, "b", guard=40).length == 15


@pytest.mark.parametrize("x, y, expected", [("abbb", "aab", 2), ("", "abc", 0), ("abcab", "abcab", 5)])
def test_plain_lcs(x, y, expected):
    assert plain_lcs(x, y) == expected


@given(words(max_size=8), words(max_size=8), words(min_size=1, max_size=3))
def test_oracle_self_consistency(x, y, p):
    res = brute_force_oracle(x, y, p)
    assert res.length <= plain_lcs(x, y)
    assert validate_witness(res.witness, x, y, p, res.length) == []
    if not (set(p) <= set(x) and set(p) <= set(y)):
        assert res.length == plain_lcs(x, y)


def test_helpers():
    assert contains_substring("xaby", "ab") and not contains_substring("xayb", "ab")
    assert contains_substring((1, 2, 3), (2, 3))
    assert is_subsequence("ac", "abc") and not is_subsequence("ca", "abc")
    assert validate_witness("ab", "ab", "ab", "ab") == ["witness contains the pattern"]
    assert "witness length 1 != reported 2" in validate_witness("a", "a", "a", "b", 2)
