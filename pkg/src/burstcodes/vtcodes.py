"""VT and parity checksums, and shifted VT codes.

A shifted VT code fixes ``VT(x) mod p`` and the weight parity.  It cannot
correct an arbitrary deletion, but it can once the deleted position is known
to lie in a window of at most ``p`` consecutive positions: two codewords that
explain the same received string must have their deletions at least ``p``
positions apart.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bitseq import BitString, BitsLike, _s
from .errors import AmbiguityError, DecodeFailure, RangeError, ShapeError

__all__ = [
    "vt_checksum",
    "parity_checksum",
    "SvtParams",
    "svt_member",
    "svt_decode",
]


def vt_checksum(a: Iterable[int] | BitString | str) -> int:
    """``sum(i * a_i)`` over 1-based positions.  Strings are read as 0/1 sequences."""
    if isinstance(a, (BitString, str)):
        s = _s(a)
        return sum(i for i, c in enumerate(s, start=1) if c == "1")
    return sum(i * ai for i, ai in enumerate(a, start=1))


def parity_checksum(a: Iterable[int] | BitString | str) -> int:
    """Plain sum of the entries (the weight, for binary input)."""
    if isinstance(a, (BitString, str)):
        return _s(a).count("1")
    return sum(a)


def _vt(s: str) -> int:
    return sum(i for i, c in enumerate(s, start=1) if c == "1")


@dataclass(frozen=True)
class SvtParams:
    """Residue ``v`` modulo ``p``, weight parity ``b`` and code length ``n``.

    ``p`` is not bounded by ``n + 1`` here: the burst code applies a single
    modulus to residue subsequences much shorter than it.
    """

    v: int
    b: int
    p: int
    n: int

    def __post_init__(self):
        if self.p < 1 or not 0 <= self.v < self.p:
            raise RangeError(f"need 0 <= v < p, got v={self.v}, p={self.p}")
        if self.b not in (0, 1):
            raise RangeError(f"b must be a bit, got {self.b}")
        if self.n < 0:
            raise RangeError("negative length")


def svt_member(x: BitsLike, s: SvtParams) -> bool:
    t = _s(x)
    if len(t) != s.n:
        raise ShapeError(f"length {len(t)} does not match code length {s.n}")
    return _vt(t) % s.p == s.v and t.count("1") % 2 == s.b


def _svt_candidates(y: str, v: int, b: int, p: int, lo: int, hi: int) -> set[str]:
    bit = (b - y.count("1")) % 2
    c = "1" if bit else "0"
    vt_y = _vt(y)
    # ones in y at positions >= lo; inserting before y_q shifts those right
    suffix = y.count("1", lo - 1)
    found = set()
    for q in range(lo, hi + 1):
        if (vt_y + suffix + q * bit - v) % p == 0:
            found.add(y[: q - 1] + c + y[q - 1 :])
        if q <= len(y) and y[q - 1] == "1":
            suffix -= 1
    return found


def svt_decode(y: BitsLike, s: SvtParams, window: tuple[int, int]) -> BitString:
    """Recover ``x`` in the shifted VT code from one deletion inside ``window``.

    ``window = (lo, hi)`` bounds the 1-based position of the deleted symbol in
    ``x``; it may hold at most ``s.p`` positions.  Reinsertions that land in
    the same run give the same ``x`` and are not counted twice.
    """
    t = _s(y)
    if len(t) != s.n - 1:
        raise ShapeError(f"received length {len(t)}, expected {s.n - 1}")
    lo, hi = max(window[0], 1), min(window[1], s.n)
    if lo > hi:
        raise RangeError(f"window {window} does not meet [1, {s.n}]")
    if hi - lo + 1 > s.p:
        raise RangeError(f"window of {hi - lo + 1} positions exceeds modulus {s.p}")
    found = _svt_candidates(t, s.v, s.b, s.p, lo, hi)
    if not found:
        raise DecodeFailure("no codeword is consistent with the window")
    if len(found) > 1:
        raise AmbiguityError(f"{len(found)} codewords are consistent with the window")
    return BitString._trusted(found.pop())
