import pytest
from hypothesis import given
from hypothesis import strategies as st

from burstcodes.bitseq import runs
from burstcodes.channel import apply_burst, ball_exact, ball_upto, burst_interval, is_burst_code
from burstcodes.errors import RangeError, ShapeError

from conftest import all_strings, bitstrings, naive_ball


@pytest.mark.parametrize(
    "x, ell, kp, expected",
    [
        ("0110", 1, 2, "00"),
        ("000000", 2, 3, "000"),
        ("01010011000110", 4, 2, "010111000110"),
        ("0110", 0, 4, ""),
    ],
)
def test_apply_burst(x, ell, kp, expected):
    assert apply_burst(x, ell, kp) == expected


@pytest.mark.parametrize("ell, kp", [(-1, 1), (3, 2), (0, 0), (0, 5)])
def test_apply_burst_invalid(ell, kp):
    with pytest.raises(RangeError):
        apply_burst("0110", ell, kp)


@pytest.mark.parametrize(
    "x, k, expected",
    [
        ("00", 1, {"0"}),
        ("01", 1, {"0", "1"}),
        ("0110", 2, {"10", "00", "01"}),
    ],
)
def test_ball_exact(x, k, expected):
    assert ball_exact(x, k) == expected


def test_periodic_string_has_singleton_ball():
    # longer bursts can collapse non-constant strings too
    assert ball_exact("0101", 2) == {"01"}


def test_ball_upto_examples():
    assert ball_upto("0110", 2) == {"110", "010", "011", "10", "00", "01"}
    assert ball_upto("0110101", 1) == ball_exact("0110101", 1)
    assert len(ball_upto("0" * 9, 4)) == 4
    with pytest.raises(RangeError):
        ball_exact("01", 3)


def test_is_burst_code_examples(example_code):
    assert is_burst_code(example_code, 2)
    assert is_burst_code(["0110"], 2)
    assert not is_burst_code(["00", "01"], 1)
    with pytest.raises(ShapeError):
        is_burst_code(["00", "011"], 1)


def _pairwise_disjoint(words, k):
    balls = [set().union(*(naive_ball(w, j) for j in range(1, k + 1))) for w in words]
    return all(not (balls[a] & balls[b]) for a in range(len(balls)) for b in range(a))


@given(st.lists(bitstrings(6, 6), min_size=1, max_size=5, unique=True), st.integers(1, 3))
def test_is_burst_code_matches_pairwise(words, k):
    assert is_burst_code(words, k) == _pairwise_disjoint(words, k)


@pytest.mark.parametrize("n", range(1, 11))
def test_ball_sizes_exhaustive(n):
    for x in all_strings(n):
        for k in range(1, n + 1):
            ball = ball_exact(x, k)
            assert ball == naive_ball(x, k)
            assert 1 <= len(ball) <= n - k + 1
        # one deletion: one output per run
        assert len(ball_exact(x, 1)) == len(runs(x))


@given(bitstrings(2, 14), st.data())
def test_burst_lands_in_ball(x, data):
    k = data.draw(st.integers(1, len(x)))
    ell = data.draw(st.integers(0, len(x) - k))
    y = apply_burst(x, ell, k)
    assert y in ball_exact(x, k)
    lo, hi = burst_interval(x, y)
    assert lo <= ell <= hi


@given(bitstrings(3, 12), st.data())
def test_ball_monotone(x, data):
    k = data.draw(st.integers(1, len(x) - 1))
    assert ball_upto(x, k) <= ball_upto(x, k + 1)


@pytest.mark.parametrize("n", [6, 8])
def test_burst_interval_exhaustive(n):
    # every admissible ell, found by brute force, forms the returned interval
    for x in all_strings(n):
        for kp in range(1, 4):
            for y in naive_ball(x, kp):
                ells = [e for e in range(n - kp + 1) if x[:e] + x[e + kp :] == y]
                assert burst_interval(x, y) == (ells[0], ells[-1])
                assert ells == list(range(ells[0], ells[-1] + 1))


def test_burst_interval_rejects():
    assert burst_interval("0110", "11") is None
    assert burst_interval("0110", "0110") == (0, 4)
    assert burst_interval("01", "011") is None
