"""Shared strategies and brute-force reference implementations."""

import itertools

import hypothesis.strategies as st
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


def bitstrings(min_size=0, max_size=16):
    return st.text(alphabet="01", min_size=min_size, max_size=max_size)


def all_strings(n):
    return ["".join(t) for t in itertools.product("01", repeat=n)]


def naive_ball(x, k):
    """Every output of one burst of exactly ``k`` deletions, by slicing."""
    return {x[:i] + x[i + k :] for i in range(len(x) - k + 1)}


def naive_dense(x, p, delta):
    """Window-by-window density test."""
    n = len(x)
    return all(p in x[i : i + delta] for i in range(n - delta + 1))


def naive_starts(x, p):
    return [i + 1 for i in range(len(x) - len(p) + 1) if x[i : i + len(p)] == p]


@pytest.fixture(scope="session")
def example_code():
    return ["01010011000110", "10000111110011", "10010011100111"]


# Acceptance verdicts, echoed in the terminal summary so they survive output capture.
ACCEPTANCE: dict = {}


def record(criterion, ok, detail):
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE[criterion] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[key])
