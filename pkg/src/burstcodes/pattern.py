"""Pattern indicators, gap vectors and pattern-dense strings.

The codes in this package are built around the marker ``p = 0^k 1^k``.
A string is ``(p, delta)``-dense when every window of ``delta`` consecutive
symbols contains a full occurrence of ``p``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bitseq import BitString, BitsLike, _s
from .errors import RangeError, ResourceLimitError, ShapeError

__all__ = [
    "burst_pattern",
    "default_delta",
    "PatternParams",
    "pattern_positions",
    "indicator",
    "count_patterns",
    "gap_vector",
    "is_dense",
    "dense_count_exact",
    "dense_fraction_mc",
    "DensityEstimate",
    "dense_lower_bound",
    "nondense_bound",
]

EXHAUSTIVE_LIMIT = 24


def burst_pattern(k: int) -> BitString:
    """The marker ``0^k 1^k``."""
    if k < 1:
        raise RangeError("k must be positive")
    return BitString._trusted("0" * k + "1" * k)


def ceil_log2(n: int) -> int:
    if n < 1:
        raise RangeError("logarithm of a non-positive length")
    return (n - 1).bit_length()


def default_delta(n: int, k: int) -> int:
    """``k * 2^(2k+1) * ceil(log2 n)``, floored at ``2k + 1`` for tiny ``n``."""
    return max(k * 2 ** (2 * k + 1) * ceil_log2(n), 2 * k + 1)


@dataclass(frozen=True)
class PatternParams:
    """Burst length bound ``k`` and density ``delta`` for the marker ``0^k 1^k``."""

    k: int
    delta: int

    def __post_init__(self):
        if self.k < 1:
            raise RangeError("k must be positive")
        if self.delta <= 2 * self.k:
            raise RangeError(f"delta={self.delta} must exceed the pattern length {2 * self.k}")

    @classmethod
    def for_length(cls, n: int, k: int) -> "PatternParams":
        return cls(k, default_delta(n, k))

    @property
    def pattern(self) -> BitString:
        return burst_pattern(self.k)


def _positions(s: str, p: str) -> list[int]:
    # 1-based starts; overlapping occurrences are all reported.
    out = []
    i = s.find(p)
    while i >= 0:
        out.append(i + 1)
        i = s.find(p, i + 1)
    return out


def _check_lengths(s: str, p: str):
    if not p or len(p) > len(s):
        raise ShapeError(f"pattern of length {len(p)} does not fit in length {len(s)}")


def pattern_positions(x: BitsLike, p: BitsLike) -> list[int]:
    """1-based start positions of every occurrence of ``p`` in ``x``."""
    s, ps = _s(x), _s(p)
    _check_lengths(s, ps)
    return _positions(s, ps)


def indicator(x: BitsLike, p: BitsLike) -> BitString:
    s, ps = _s(x), _s(p)
    _check_lengths(s, ps)
    out = ["0"] * len(s)
    for i in _positions(s, ps):
        out[i - 1] = "1"
    return BitString._trusted("".join(out))


def count_patterns(x: BitsLike, p: BitsLike) -> int:
    return len(pattern_positions(x, p))


def _gaps(positions: list[int], n: int) -> tuple[int, ...]:
    prev = 0
    out = []
    for q in positions:
        out.append(q - prev)
        prev = q
    out.append(n + 1 - prev)
    return tuple(out)


def gap_vector(x: BitsLike, p: BitsLike) -> tuple[int, ...]:
    """Distances between consecutive ones of ``(1, indicator(x, p), 1)``.

    The entries always sum to ``|x| + 1``.
    """
    s = _s(x)
    return _gaps(pattern_positions(s, p), len(s))


def _dense_from_positions(positions: list[int], n: int, m: int, delta: int) -> bool:
    if n < delta:
        return True
    if not positions:
        return False
    reach = delta - m + 1
    if positions[0] > reach or positions[-1] < n - delta + 1:
        return False
    prev = positions[0]
    for q in positions[1:]:
        if q - prev > reach:
            return False
        prev = q
    return True


def is_dense(x: BitsLike, p: BitsLike, delta: int) -> bool:
    """Every length-``delta`` window of ``x`` contains a full copy of ``p``.

    Strings shorter than ``delta`` have no window and are dense.
    """
    s, ps = _s(x), _s(p)
    if delta <= len(ps):
        raise RangeError(f"delta={delta} must exceed the pattern length {len(ps)}")
    if len(s) < len(ps):
        return len(s) < delta
    return _dense_from_positions(_positions(s, ps), len(s), len(ps), delta)


def _dense_mask_ints(values: np.ndarray, n: int, ps: str, delta: int) -> np.ndarray:
    # values hold n-bit strings, position 1 in the most significant bit
    m = len(ps)
    if n < delta:
        return np.ones(values.shape, dtype=bool)
    pval = int(ps, 2)
    pmask = (1 << m) - 1
    last = np.zeros(values.shape, dtype=np.int32)
    dense = np.ones(values.shape, dtype=bool)
    for j in range(1, n - m + 2):
        occ = ((values >> (n - j - m + 1)) & pmask) == pval
        last[occ] = j
        i = j - (delta - m)
        if i >= 1:
            dense &= last >= i
    return dense


def dense_count_exact(n: int, p: BitsLike, delta: int, limit: int = EXHAUSTIVE_LIMIT) -> int:
    """Number of ``(p, delta)``-dense strings of length ``n``, by enumeration."""
    ps = _s(p)
    if delta <= len(ps):
        raise RangeError(f"delta={delta} must exceed the pattern length {len(ps)}")
    if n > limit:
        raise ResourceLimitError(f"n={n} exceeds the exhaustive limit {limit}")
    if n < delta:
        return 2**n
    total = 0
    chunk = 1 << 20
    for start in range(0, 2**n, chunk):
        values = np.arange(start, min(start + chunk, 2**n), dtype=np.uint32)
        total += int(_dense_mask_ints(values, n, ps, delta).sum())
    return total


@dataclass(frozen=True)
class DensityEstimate:
    n: int
    delta: int
    samples: int
    seed: int
    dense: int

    @property
    def fraction(self) -> float:
        return self.dense / self.samples

    @property
    def nondense_fraction(self) -> float:
        return 1.0 - self.fraction

    @property
    def stderr(self) -> float:
        """Binomial standard error of the estimated fraction."""
        q = self.fraction
        return math.sqrt(q * (1.0 - q) / self.samples)


def _dense_rows(bits: np.ndarray, ps: str, delta: int) -> np.ndarray:
    rows, n = bits.shape
    m = len(ps)
    if n < delta:
        return np.ones(rows, dtype=bool)
    occ = np.ones((rows, n - m + 1), dtype=bool)
    for t, c in enumerate(ps):
        occ &= bits[:, t : t + n - m + 1] == (c == "1")
    cs = np.zeros((rows, n - m + 2), dtype=np.int32)
    np.cumsum(occ, axis=1, out=cs[:, 1:])
    # window i (1-based) may hold a pattern start in [i, i + delta - m]
    width = delta - m + 1
    counts = cs[:, width : n - delta + 1 + width] - cs[:, : n - delta + 1]
    return (counts > 0).all(axis=1)


def dense_fraction_mc(
    n: int, p: BitsLike, delta: int, samples: int, seed: int, batch: int = 1024
) -> DensityEstimate:
    """Monte Carlo estimate of the fraction of dense strings of length ``n``."""
    ps = _s(p)
    if samples < 1:
        raise RangeError("samples must be positive")
    if delta <= len(ps):
        raise RangeError(f"delta={delta} must exceed the pattern length {len(ps)}")
    rng = np.random.default_rng(seed)
    nbytes = -(-n // 8)
    dense = 0
    done = 0
    while done < samples:
        rows = min(batch, samples - done)
        raw = rng.integers(0, 256, size=(rows, nbytes), dtype=np.uint8)
        bits = np.unpackbits(raw, axis=1)[:, :n].astype(bool)
        dense += int(_dense_rows(bits, ps, delta).sum())
        done += rows
    return DensityEstimate(n, delta, samples, seed, dense)


def nondense_bound(n: int) -> float:
    """``n^(1 - log2 e)``: the union bound on the non-dense fraction."""
    return n ** (1.0 - math.log2(math.e))


def dense_lower_bound(n: int) -> float:
    """``2^n (1 - n^(1 - log2 e))`` lower bound on the number of dense strings."""
    return 2.0**n * (1.0 - nondense_bound(n))
