import pytest
from hypothesis import given
from hypothesis import strategies as st

from burstcodes.bitseq import (
    BitString,
    concat,
    format_lines,
    interleave_merge,
    parse_lines,
    residue_length,
    runs,
    subsequence,
)
from burstcodes.errors import FormatError, RangeError, ShapeError

from conftest import all_strings, bitstrings


@pytest.mark.parametrize(
    "x, r, expected",
    [
        # positions {1, 3, 5} and {2, 4, 6} of 1 1 0 1 0 0
        ("110100", (1, 6, 2), "100"),
        ("110100", (2, 6, 2), "110"),
        ("1", (1, 1, 1), "1"),
        ("0110101", (3, 7, 3), "10"),
    ],
)
def test_subsequence_examples(x, r, expected):
    assert subsequence(x, *r) == expected


@pytest.mark.parametrize("r", [(0, 3, 1), (2, 7, 1), (3, 2, 1), (1, 3, 0)])
def test_subsequence_out_of_range(r):
    with pytest.raises(RangeError):
        subsequence("110100", *r)


@pytest.mark.parametrize(
    "residues, step, n, expected",
    [
        (["100", "110"], 2, 6, "110100"),
        (["101", "100"], 2, 6, "110010"),
        (["0110"], 1, 4, "0110"),
        (["1", "0", "1"], 3, 3, "101"),
        (["10", "1", ""], 3, 2 + 1, None),
    ],
)
def test_interleave_examples(residues, step, n, expected):
    if expected is None:
        with pytest.raises(ShapeError):
            interleave_merge(residues, step, n)
    else:
        assert interleave_merge(residues, step, n) == expected


def test_interleave_rejects_wrong_count():
    with pytest.raises(ShapeError):
        interleave_merge(["1"], 2, 2)


@pytest.mark.parametrize("n", range(1, 11))
def test_interleave_roundtrip_exhaustive(n):
    for x in all_strings(n):
        for step in range(1, n + 1):
            parts = [subsequence(x, i, n, step) for i in range(1, step + 1)]
            assert interleave_merge(parts, step, n) == x


@given(bitstrings(1, 16), st.data())
def test_interleave_roundtrip_property(x, data):
    n = len(x)
    step = data.draw(st.integers(1, n))
    parts = [x[i - 1 :: step] for i in range(1, step + 1)]
    assert [len(p) for p in parts] == [residue_length(i, n, step) for i in range(1, step + 1)]
    assert interleave_merge(parts, step, n) == x


@given(bitstrings(1, 20))
def test_identity_subsequence(x):
    assert subsequence(x, 1, len(x)) == x


@pytest.mark.parametrize("x, y, xy", [("01", "10", "0110"), ("", "101", "101"), ("00", "111", "00111")])
def test_concat(x, y, xy):
    assert concat(x, y) == xy
    assert BitString(x) + BitString(y) == xy


def test_bitstring_basics():
    b = BitString("0110")
    assert len(b) == 4 and b.bit(1) == 0 and b.bit(2) == 1
    assert b == "0110" and hash(b) == hash("0110")
    assert b.weight == 2
    assert BitString([1, 0, 1]) == "101"
    assert BitString.from_int(5, 4) == "0101" and BitString("0101").to_int() == 5
    with pytest.raises(FormatError):
        BitString("012")
    with pytest.raises(FormatError):
        BitString([0, 2])


def test_runs():
    assert runs("0011101") == [(0, 2), (1, 3), (0, 1), (1, 1)]
    assert runs("") == []


def test_line_format():
    text = ["# comment\n", "0101\n", "\n", "  11 \n"]
    assert parse_lines(text) == ["0101", "11"]
    assert format_lines(["01", BitString("1")]) == "01\n1\n"
    with pytest.raises(FormatError, match="line 2"):
        parse_lines(["01", "0a1"])
