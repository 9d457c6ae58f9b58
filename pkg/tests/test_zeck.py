import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from phirep.errors import AdjacentOnes, NegativeIndex, ParseError
from phirep.zeck import (
    fib,
    fib_value,
    lucas,
    lucas_subset_decompose,
    lucas_value,
    luc_to_fib,
    luc_to_fib_shifted,
    zeck_decode,
    zeck_encode,
)

# plain tables, built by the recurrences only
FIB_TABLE = [0, 1]
while len(FIB_TABLE) < 120:
    FIB_TABLE.append(FIB_TABLE[-1] + FIB_TABLE[-2])
LUCAS_TABLE = [2, 1]
while len(LUCAS_TABLE) < 120:
    LUCAS_TABLE.append(LUCAS_TABLE[-1] + LUCAS_TABLE[-2])


def test_fib_lucas_examples():
    assert fib(6) == 8
    assert lucas(4) == 7
    assert fib(-2) == -1


def test_tables():
    for i in range(120):
        assert fib(i) == FIB_TABLE[i]
        assert lucas(i) == LUCAS_TABLE[i]
    for n in range(1, 60):
        assert fib(-n) == (-1) ** (n + 1) * fib(n)


def test_lucas_fibonacci_identity():
    for n in range(1, 91):
        assert lucas(n) == fib(n - 1) + fib(n + 1)


def test_lucas_negative_index():
    with pytest.raises(NegativeIndex):
        lucas(-1)


def test_weight_conventions():
    # rightmost Zeckendorf bit weighs F(2) = 1, next F(3) = 2
    assert zeck_decode("1") == 1
    assert zeck_decode("10") == 2
    assert zeck_decode("100") == 3
    # rightmost Lucas bit weighs L(0) = 2, next L(1) = 1, then L(2) = 3
    assert lucas_value("1") == 2
    assert lucas_value("10") == 1
    assert lucas_value("100") == 3


@pytest.mark.parametrize("n, w", [(11, "10100"), (0, ""), (5, "1000"), (1, "1"), (4, "101")])
def test_zeck_examples(n, w):
    assert zeck_encode(n) == w
    assert zeck_decode(w) == n


def brute_zeck(n):
    """Shortest 11-free word with Fibonacci value n, by enumeration."""
    for length in range(0, 12):
        for p in itertools.product("01", repeat=length):
            w = "".join(p)
            if "11" not in w and (not w or w[0] == "1") and fib_value(w) == n:
                return w
    raise AssertionError(n)


def test_encode_matches_enumeration():
    for n in range(0, 140):
        assert zeck_encode(n) == brute_zeck(n)


def test_decode_padded_and_invalid():
    assert zeck_decode("0010100") == 11
    with pytest.raises(AdjacentOnes):
        zeck_decode("0110")
    with pytest.raises(ParseError):
        zeck_decode("102")


def test_round_trip_million():
    for n in range(0, 1_000_001):
        w = zeck_encode(n)
        assert "11" not in w and not w.startswith("0")
        assert zeck_decode(w) == n


@given(st.integers(0, 10**60))
def test_round_trip_big(n):
    assert zeck_decode(zeck_encode(n)) == n


def brute_subsets(indices, limit):
    out = {}
    for r in range(len(indices) + 1):
        for combo in itertools.combinations(indices, r):
            s = sum(LUCAS_TABLE[i] for i in combo)
            if s <= limit:
                assert s not in out, "family is not uniquely decodable"
                out[s] = frozenset(combo)
    return out


def test_decompose_examples():
    assert lucas_subset_decompose(11, "odd", 1) == {5}
    assert lucas_subset_decompose(7, "even", 4) == {4}
    assert lucas_subset_decompose(0, "odd", 1) == frozenset()
    assert lucas_subset_decompose(0, "even", 4) == frozenset()
    assert lucas_subset_decompose(2, "odd", 1) is None
    assert lucas_subset_decompose(-1, "even", 4) is None


@pytest.mark.parametrize("parity, start", [("odd", 1), ("even", 4), ("even", 0), ("odd", 3)])
def test_decompose_matches_brute_force(parity, start):
    limit = 10_000
    indices = [i for i in range(start, 40, 2) if LUCAS_TABLE[i] <= limit]
    table = brute_subsets(indices, limit)
    for m in range(limit + 1):
        assert lucas_subset_decompose(m, parity, start) == table.get(m), m


def test_decompose_bad_parity():
    with pytest.raises(ValueError):
        lucas_subset_decompose(3, "prime", 1)


@pytest.mark.parametrize("w, z", [("10", "1"), ("100", "100"), ("1", "10"), ("", ""), ("1111", "10010")])
def test_luc_to_fib_examples(w, z):
    assert luc_to_fib(w) == z
    assert luc_to_fib_shifted(w) == z


@pytest.mark.slow
def test_luc_to_fib_all_words_to_length_20():
    # the Lucas value is accumulated digit by digit from the table
    for length in range(0, 21):
        weights = [LUCAS_TABLE[length - 1 - j] for j in range(length)]
        for p in itertools.product((0, 1), repeat=length):
            value = sum(w for w, b in zip(weights, p) if b)
            word = "".join(map(str, p))
            got = luc_to_fib_shifted(word)
            assert fib_value(got) == value and "11" not in got
            if length <= 12:
                assert luc_to_fib(word) == got
