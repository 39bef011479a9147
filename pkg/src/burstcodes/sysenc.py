"""Systematic encoding of information words into burst-correcting codewords.

The codeword is ``(E(u), E(S1(u)), R(S1(S1(u))))`` where ``E`` makes a string
pattern-dense, ``S1(w)`` is the serialized syndrome set of ``E(w)`` and ``R``
repeats each bit ``k + 1`` times.  Decoding runs right to left: the
repetition segment survives any burst, its syndromes correct the middle
segment, and the middle segment's payload corrects the first.

Densifier
---------
``E`` cuts its input into blocks of ``delta - 4k + 1`` bits and appends the
marker ``0^k 1^k`` after every block.  Consecutive markers start at most
``delta - 2k + 1`` apart, so every window of ``delta`` symbols holds a whole
marker.  The overhead is ``2k`` bits per block, i.e. linear in the input
length, not the constant overhead achievable with sequence replacement.

Syndrome layout
---------------
Fixed-width big-endian fields: ``c0`` (2 bits), ``c1`` (``ceil(log2 2n)``
bits), every ``v_{i,k'}`` (``ceil(log2 delta)`` bits each) and then every
``b_{i,k'}`` (1 bit each), pairs in ``(k', i)`` lexicographic order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .bitseq import BitString, BitsLike, _s
from .burstcode import CodeInstance, CodeParams, SyndromeSet, decode, extract_syndromes
from .channel import burst_interval
from .errors import (
    AmbiguityError,
    DecodeFailure,
    EncodeError,
    FormatError,
    RangeError,
    ShapeError,
)
from .pattern import ceil_log2, default_delta

__all__ = [
    "PipelineParams",
    "densify",
    "undensify",
    "densified_length",
    "syndrome_width",
    "serialize_syndromes",
    "deserialize_syndromes",
    "syndrome_bits",
    "repetition_encode",
    "repetition_decode",
    "encode",
    "pipeline_decode",
]


def densified_length(length: int, k: int, delta: int) -> int:
    block = delta - 4 * k + 1
    return length + 2 * k * -(-length // block)


def syndrome_width(n: int, k: int, delta: int) -> int:
    t = k * (k + 1) // 2
    return 2 + ceil_log2(2 * n) + t * ceil_log2(delta) + t


@dataclass(frozen=True)
class PipelineParams:
    """Information length ``d``, burst bound ``k`` and density ``delta``.

    ``delta`` defaults to ``k * 2^(2k+1) * ceil(log2 d)``.
    """

    d: int
    k: int
    delta: Optional[int] = None
    m1: int = field(init=False)
    m2: int = field(init=False)
    m3: int = field(init=False)

    def __post_init__(self):
        if self.d < 1 or self.k < 1:
            raise RangeError("d and k must be positive")
        if self.delta is None:
            object.__setattr__(self, "delta", default_delta(self.d, self.k))
        if self.delta < 4 * self.k:
            raise RangeError(f"the marker densifier needs delta >= 4k, got {self.delta}")
        k, delta = self.k, self.delta
        m1 = densified_length(self.d, k, delta)
        m2 = densified_length(syndrome_width(m1, k, delta), k, delta)
        object.__setattr__(self, "m1", m1)
        object.__setattr__(self, "m2", m2)
        object.__setattr__(self, "m3", (k + 1) * syndrome_width(m2, k, delta))

    @property
    def block(self) -> int:
        return self.delta - 4 * self.k + 1

    @property
    def marker(self) -> str:
        return "0" * self.k + "1" * self.k

    @property
    def length(self) -> int:
        return self.m1 + self.m2 + self.m3

    @property
    def redundancy(self) -> int:
        return self.length - self.d

    @property
    def widths(self) -> tuple[int, int]:
        """Bit widths of ``S1(u)`` and ``S1(S1(u))``."""
        k, delta = self.k, self.delta
        return syndrome_width(self.m1, k, delta), syndrome_width(self.m2, k, delta)

    def target_redundancy(self) -> float:
        """``log n + T log log n`` with ``n`` the codeword length (no constant term)."""
        n = self.length
        return math.log2(n) + self.k * (self.k + 1) / 2 * math.log2(math.log2(n))


def densify(u: BitsLike, params: PipelineParams) -> BitString:
    """Append the marker after every block of ``params.block`` bits."""
    s = _s(u)
    L, p = params.block, params.marker
    return BitString._trusted("".join(s[i : i + L] + p for i in range(0, len(s), L)))


def undensify(x: BitsLike, params: PipelineParams) -> BitString:
    """Strip the markers inserted by :func:`densify`."""
    s = _s(x)
    L, p = params.block, params.marker
    out = []
    pos = 0
    while pos < len(s):
        rest = len(s) - pos
        take = L if rest >= L + len(p) else rest - len(p)
        if take < 1 or s[pos + take : pos + take + len(p)] != p:
            raise FormatError(f"no marker after the block at position {pos + 1}")
        out.append(s[pos : pos + take])
        pos += take + len(p)
    return BitString._trusted("".join(out))


def _field(value: int, width: int, name: str) -> str:
    if not 0 <= value < 2**width:
        raise EncodeError(f"{name}={value} does not fit in {width} bits")
    return format(value, f"0{width}b") if width else ""


def serialize_syndromes(syn: SyndromeSet, n: int, k: int, delta: int) -> BitString:
    """Fixed-width binary form of a syndrome set for length ``n``."""
    t = k * (k + 1) // 2
    if len(syn.v) != t or len(syn.b) != t:
        raise EncodeError(f"expected {t} residue pairs")
    if not 0 <= syn.c0 < 4 or not 0 <= syn.c1 < 2 * n:
        raise EncodeError(f"(c0, c1)=({syn.c0}, {syn.c1}) out of range for n={n}")
    if any(not 0 <= v < delta for v in syn.v) or any(b not in (0, 1) for b in syn.b):
        raise EncodeError("residue outside its modulus")
    wv = ceil_log2(delta)
    parts = [_field(syn.c0, 2, "c0"), _field(syn.c1, ceil_log2(2 * n), "c1")]
    parts += [_field(v, wv, "v") for v in syn.v]
    parts += ["1" if b else "0" for b in syn.b]
    return BitString._trusted("".join(parts))


def deserialize_syndromes(bits: BitsLike, n: int, k: int, delta: int) -> SyndromeSet:
    s = _s(bits)
    width = syndrome_width(n, k, delta)
    if len(s) != width:
        raise FormatError(f"syndrome field has {len(s)} bits, expected {width}")
    t = k * (k + 1) // 2
    w1, wv = ceil_log2(2 * n), ceil_log2(delta)

    def take(pos, w):
        return int(s[pos : pos + w], 2) if w else 0

    c0 = take(0, 2)
    c1 = take(2, w1)
    pos = 2 + w1
    v = tuple(take(pos + j * wv, wv) for j in range(t))
    pos += t * wv
    b = tuple(int(c) for c in s[pos : pos + t])
    if c1 >= 2 * n or any(x >= delta for x in v):
        raise FormatError("decoded residue outside its modulus")
    return SyndromeSet(c0, c1, v, b)


def syndrome_bits(w: BitsLike, params: PipelineParams) -> BitString:
    """``S1(w)``: serialized syndromes of the densified ``w``."""
    x = densify(w, params)
    syn = extract_syndromes(x, CodeParams(len(x), params.k, params.delta))
    return serialize_syndromes(syn, len(x), params.k, params.delta)


def repetition_encode(u: BitsLike, k: int) -> BitString:
    return BitString._trusted("".join(c * (k + 1) for c in _s(u)))


def repetition_decode(y: BitsLike, m: int, k: int) -> BitString:
    """Undo ``(k+1)``-fold repetition after one burst of up to ``k`` deletions.

    Whatever the burst position, symbol ``j(k+1) - k'`` of ``y`` (1-based)
    comes from the ``j``-th block.
    """
    s = _s(y)
    kp = (k + 1) * m - len(s)
    if not 0 <= kp <= k:
        raise ShapeError(f"length deficit {kp} outside [0, {k}]")
    return BitString._trusted("".join(s[j * (k + 1) - kp - 1] for j in range(1, m + 1)))


def encode(u: BitsLike, params: PipelineParams) -> BitString:
    s = _s(u)
    if len(s) != params.d:
        raise ShapeError(f"information word has length {len(s)}, expected {params.d}")
    s1 = syndrome_bits(s, params)
    s2 = syndrome_bits(s1, params)
    return BitString._trusted(
        densify(s, params)._s + densify(s1, params)._s + repetition_encode(s2, params.k)._s
    )


def _segment(y: str, params: PipelineParams, syn_bits: str, m: int) -> str:
    syn = deserialize_syndromes(syn_bits, m, params.k, params.delta)
    code = CodeInstance(CodeParams(m, params.k, params.delta), syn)
    return undensify(decode(y, code), params)._s


# Failures that rule out one burst split; ambiguity is never one of them.
_REJECT = (DecodeFailure, FormatError, RangeError, ShapeError)


def pipeline_decode(y: BitsLike, params: PipelineParams) -> BitString:
    """Recover ``u`` from a string in the burst ball of ``encode(u)``.

    The split of the burst across segment boundaries is unknown, so every
    split consistent with a single contiguous burst is tried and the result
    is kept only if ``encode(u)`` maps onto ``y``.
    """
    t = _s(y)
    k, m1, m2, m3 = params.k, params.m1, params.m2, params.m3
    kp = params.length - len(t)
    if not 0 <= kp <= k:
        raise DecodeFailure(f"length deficit {kp} outside [0, {k}]", stage="length")
    _, w2 = params.widths
    s2 = repetition_decode(t[len(t) - (m3 - kp) :], w2, k)._s

    found: set[str] = set()
    errors: list[str] = []
    for e1 in range(kp + 1):
        for e2 in range(kp - e1 + 1):
            e3 = kp - e1 - e2
            if e1 and e3 and e2 != m2:
                continue
            start = m1 - e1
            try:
                s1 = _segment(t[start : start + m2 - e2], params, s2, m2)
            except _REJECT as exc:
                errors.append(f"split ({e1},{e2},{e3}) segment 2: {exc}")
                continue
            try:
                u = _segment(t[:start], params, s1, m1)
            except _REJECT as exc:
                errors.append(f"split ({e1},{e2},{e3}) segment 1: {exc}")
                continue
            if u in found:
                continue
            if len(u) == params.d and burst_interval(encode(u, params), t) is not None:
                found.add(u)
            else:
                errors.append(f"split ({e1},{e2},{e3}): re-encoding does not match")
    if not found:
        raise DecodeFailure("no burst split verifies: " + "; ".join(errors), stage="verify")
    if len(found) > 1:
        raise AmbiguityError(f"{len(found)} information words explain the received string")
    return BitString._trusted(found.pop())
