"""The assembled burst-deletion-correcting code and its decoder.

A codeword is a dense string that belongs to the locating code and whose
residue subsequences ``x_[i, n]_k'`` (for every ``1 <= i <= k' <= k``) lie in
shifted VT codes of modulus ``delta``.  Decoding locates the burst, then
repairs each residue subsequence, which lost exactly one symbol, with the
shifted VT decoder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

from .bitseq import BitString, BitsLike, _s, residue_length
from .channel import burst_interval
from .errors import (
    AmbiguityError,
    DecodeFailure,
    DomainError,
    RangeError,
    ResourceLimitError,
    ShapeError,
)
from .locator import LocSyndromes, _gap_vt, locate
from .pattern import EXHAUSTIVE_LIMIT, PatternParams, _dense_from_positions, _positions
from .vtcodes import _svt_candidates, _vt

__all__ = [
    "CodeParams",
    "SyndromeSet",
    "CodeInstance",
    "residue_pairs",
    "extract_syndromes",
    "member",
    "decode",
    "bucket_codewords",
    "enumerate_code",
    "search_best",
    "SearchResult",
    "syndrome_space_size",
]


def residue_pairs(k: int) -> list[tuple[int, int]]:
    """``(i, k')`` for ``1 <= i <= k' <= k`` in ``(k', i)`` lexicographic order."""
    return [(i, kp) for kp in range(1, k + 1) for i in range(1, kp + 1)]


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    delta: int

    def __post_init__(self):
        if self.n < 1 or self.k < 1 or self.k > self.n:
            raise RangeError(f"need 1 <= k <= n, got n={self.n}, k={self.k}")
        if self.delta <= 2 * self.k:
            raise RangeError(f"delta={self.delta} must exceed 2k={2 * self.k}")

    @property
    def pattern_params(self) -> PatternParams:
        return PatternParams(self.k, self.delta)

    @property
    def n_pairs(self) -> int:
        return self.k * (self.k + 1) // 2


@dataclass(frozen=True, order=True)
class SyndromeSet:
    """``(c0, c1, v, b)`` with ``v`` and ``b`` listed in :func:`residue_pairs` order."""

    c0: int
    c1: int
    v: tuple[int, ...]
    b: tuple[int, ...]

    def v_at(self, i: int, kp: int) -> int:
        return self.v[kp * (kp - 1) // 2 + i - 1]

    def b_at(self, i: int, kp: int) -> int:
        return self.b[kp * (kp - 1) // 2 + i - 1]

    def check(self, params: CodeParams) -> None:
        """Raise :class:`RangeError` unless every residue is in range for ``params``."""
        t = params.n_pairs
        if len(self.v) != t or len(self.b) != t:
            raise RangeError(f"expected {t} residue pairs for k={params.k}")
        if not 0 <= self.c0 < 4 or not 0 <= self.c1 < 2 * params.n:
            raise RangeError(f"(c0, c1)=({self.c0}, {self.c1}) out of range")
        if any(not 0 <= v < params.delta for v in self.v) or any(b not in (0, 1) for b in self.b):
            raise RangeError("residue outside its modulus")

    @property
    def loc(self) -> tuple[int, int]:
        return (self.c0, self.c1)


@dataclass(frozen=True)
class CodeInstance:
    params: CodeParams
    syndromes: SyndromeSet

    def __post_init__(self):
        self.syndromes.check(self.params)


def _key(s: str, n: int, k: int, delta: int, p: str) -> Optional[tuple]:
    # Flat syndrome tuple (c0, c1, v..., b...) or None for non-dense s.
    pos = _positions(s, p)
    if not _dense_from_positions(pos, n, 2 * k, delta):
        return None
    vs = []
    bs = []
    for kp in range(1, k + 1):
        for i in range(kp):
            sub = s[i::kp]
            vs.append(_vt(sub) % delta)
            bs.append(sub.count("1") & 1)
    return (len(pos) % 4, _gap_vt(pos, n) % (2 * n), tuple(vs), tuple(bs))


def extract_syndromes(x: BitsLike, params: CodeParams) -> SyndromeSet:
    """The unique syndrome set under which the dense string ``x`` is a codeword."""
    s = _s(x)
    if len(s) != params.n:
        raise ShapeError(f"length {len(s)} does not match n={params.n}")
    key = _key(s, params.n, params.k, params.delta, "0" * params.k + "1" * params.k)
    if key is None:
        raise DomainError("string is not (p, delta)-dense")
    return SyndromeSet(*key)


def member(x: BitsLike, code: CodeInstance) -> bool:
    s = _s(x)
    pr = code.params
    if len(s) != pr.n:
        raise ShapeError(f"length {len(s)} does not match n={pr.n}")
    key = _key(s, pr.n, pr.k, pr.delta, "0" * pr.k + "1" * pr.k)
    sy = code.syndromes
    return key is not None and key == (sy.c0, sy.c1, sy.v, sy.b)


def _residue_window(lo: int, hi: int, i: int, kp: int, length: int) -> tuple[int, int]:
    # Burst after ell deletes x-positions ell+1..ell+k'; residue i loses the
    # one congruent to i, whose index in x_[i, n]_k' is (t - i) // k' + 1.
    qlo = -(-(lo + 1 - i) // kp) + 1
    qhi = (hi + kp - i) // kp + 1
    return max(qlo, 1), min(qhi, length)


def decode(y: BitsLike, code: CodeInstance) -> BitString:
    """Recover the codeword ``x`` from ``y`` in its ``B_{<=k}`` ball.

    Every candidate window from the locator is tried; a reconstruction is
    accepted only if it is a codeword and ``y`` is a burst image of it.
    """
    t = _s(y)
    pr, sy = code.params, code.syndromes
    n, delta = pr.n, pr.delta
    kp = n - len(t)
    if kp == 0:
        if member(t, code):
            return BitString._trusted(t)
        raise DecodeFailure("received string has full length but is not a codeword")
    if not 1 <= kp <= pr.k:
        raise DecodeFailure(f"length deficit {kp} outside [0, {pr.k}]")
    res = locate(t, pr.pattern_params, LocSyndromes(sy.c0, sy.c1, n))
    key = (sy.c0, sy.c1, sy.v, sy.b)
    p = "0" * pr.k + "1" * pr.k
    found: set[str] = set()
    for lo, hi in res.candidates:
        parts = []
        for i in range(1, kp + 1):
            length = residue_length(i, n, kp)
            qlo, qhi = _residue_window(lo, hi, i, kp, length)
            if qlo > qhi:
                break
            sols = _svt_candidates(t[i - 1 :: kp], sy.v_at(i, kp), sy.b_at(i, kp), delta, qlo, qhi)
            if len(sols) != 1:
                if len(sols) > 1:
                    raise AmbiguityError(f"residue {i}: {len(sols)} shifted VT solutions")
                break
            parts.append(sols.pop())
        else:
            out = [""] * n
            for i, part in enumerate(parts):
                out[i::kp] = part
            x = "".join(out)
            if x not in found and _key(x, n, pr.k, delta, p) == key and burst_interval(x, t):
                found.add(x)
    if not found:
        raise DecodeFailure("no candidate window yields a consistent codeword")
    if len(found) > 1:
        raise AmbiguityError(f"{len(found)} codewords explain the received string")
    return BitString._trusted(found.pop())


def _all_strings(n: int, limit: int) -> Iterator[str]:
    if n > limit:
        raise ResourceLimitError(f"n={n} exceeds the exhaustive limit {limit}")
    fmt = f"0{n}b"
    for value in range(2**n):
        yield format(value, fmt)


def bucket_codewords(params: CodeParams, limit: int = EXHAUSTIVE_LIMIT) -> dict[SyndromeSet, list[BitString]]:
    """Partition all dense strings of length ``n`` by their syndrome set."""
    n, k, delta = params.n, params.k, params.delta
    p = "0" * k + "1" * k
    raw: dict[tuple, list[str]] = {}
    for s in _all_strings(n, limit):
        key = _key(s, n, k, delta, p)
        if key is not None:
            raw.setdefault(key, []).append(s)
    return {
        SyndromeSet(*key): [BitString._trusted(w) for w in words]
        for key, words in sorted(raw.items())
    }


def enumerate_code(code: CodeInstance, limit: int = EXHAUSTIVE_LIMIT) -> list[BitString]:
    """All codewords of ``code`` in increasing order."""
    pr, sy = code.params, code.syndromes
    p = "0" * pr.k + "1" * pr.k
    key = (sy.c0, sy.c1, sy.v, sy.b)
    return [
        BitString._trusted(s)
        for s in _all_strings(pr.n, limit)
        if _key(s, pr.n, pr.k, pr.delta, p) == key
    ]


def syndrome_space_size(params: CodeParams) -> int:
    """Number of distinct syndrome sets: ``4 * 2n * delta^T * 2^T`` with ``T = k(k+1)/2``."""
    t = params.n_pairs
    return 4 * 2 * params.n * params.delta**t * 2**t


@dataclass(frozen=True)
class SearchResult:
    params: CodeParams
    best: Optional[SyndromeSet]
    cardinality: int
    dense_count: int
    nonempty_buckets: int

    @property
    def redundancy(self) -> float:
        return self.params.n - math.log2(self.cardinality) if self.cardinality else math.inf

    @property
    def pigeonhole_bound(self) -> float:
        """Average bucket size, a lower bound on the best one."""
        return self.dense_count / syndrome_space_size(self.params)

    @property
    def pigeonhole_redundancy(self) -> float:
        """Redundancy of a bucket of average size."""
        if not self.dense_count:
            return math.inf
        return self.params.n - math.log2(self.pigeonhole_bound)

    @property
    def asymptotic_redundancy(self) -> float:
        """``log n + T log delta + T + 4``; valid once half of all strings are dense."""
        t = self.params.n_pairs
        return math.log2(self.params.n) + t * math.log2(self.params.delta) + t + 4


def search_best(
    params: CodeParams,
    buckets: Optional[dict[SyndromeSet, list[BitString]]] = None,
    limit: int = EXHAUSTIVE_LIMIT,
) -> SearchResult:
    """Largest syndrome bucket; ties go to the lexicographically smallest set."""
    if buckets is None:
        buckets = bucket_codewords(params, limit)
    best, size = None, 0
    for syn in sorted(buckets):
        if len(buckets[syn]) > size:
            best, size = syn, len(buckets[syn])
    dense = sum(len(words) for words in buckets.values())
    return SearchResult(params, best, size, dense, len(buckets))
