"""The burst deletion channel and its output balls.

These are the brute-force oracles that every decoder in the package is
checked against, so they favour obviousness over speed.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .bitseq import BitString, BitsLike, _s
from .errors import RangeError, ShapeError

__all__ = [
    "apply_burst",
    "ball_exact",
    "ball_upto",
    "is_burst_code",
    "burst_interval",
]


def apply_burst(x: BitsLike, ell: int, length: int) -> BitString:
    """Delete ``length`` consecutive symbols after keeping a prefix of ``ell``.

    Returns ``(x_[1, ell], x_[ell+length+1, n])``.
    """
    s = _s(x)
    if length < 1 or not 0 <= ell <= len(s) - length:
        raise RangeError(f"invalid burst (ell={ell}, length={length}) for length {len(s)}")
    return BitString._trusted(s[:ell] + s[ell + length :])


def _ball(s: str, k: int) -> set[str]:
    return {s[:i] + s[i + k :] for i in range(len(s) - k + 1)}


def ball_exact(x: BitsLike, k: int) -> set[BitString]:
    """All outputs of one burst of exactly ``k`` deletions."""
    s = _s(x)
    if not 1 <= k <= len(s):
        raise RangeError(f"burst length {k} outside [1, {len(s)}]")
    return {BitString._trusted(t) for t in _ball(s, k)}


def ball_upto(x: BitsLike, k: int) -> set[BitString]:
    """Union of :func:`ball_exact` over burst lengths ``1..k``."""
    s = _s(x)
    if not 1 <= k <= len(s):
        raise RangeError(f"burst length {k} outside [1, {len(s)}]")
    out: set[str] = set()
    for kp in range(1, k + 1):
        out |= _ball(s, kp)
    return {BitString._trusted(t) for t in out}


def is_burst_code(codewords: Iterable[BitsLike], k: int) -> bool:
    """True iff the ``B_{<=k}`` balls of distinct codewords are pairwise disjoint.

    Every ball output is recorded with its owner; the first output claimed by
    two different codewords is a witness of intersection.
    """
    words = {_s(c) for c in codewords}
    lengths = {len(w) for w in words}
    if len(lengths) > 1:
        raise ShapeError(f"codewords of mixed lengths {sorted(lengths)}")
    if not words:
        return True
    n = lengths.pop()
    if not 1 <= k <= n:
        raise RangeError(f"burst length {k} outside [1, {n}]")
    owner: dict[str, str] = {}
    for w in words:
        for kp in range(1, k + 1):
            for out in _ball(w, kp):
                prev = owner.setdefault(out, w)
                if prev != w:
                    return False
    return True


def burst_interval(x: BitsLike, y: BitsLike) -> Optional[tuple[int, int]]:
    """Range ``[lo, hi]`` of every ``ell`` with ``apply_burst(x, ell, |x|-|y|) == y``.

    The admissible ``ell`` always form an interval.  Returns ``None`` when
    ``y`` is not a single-burst image of ``x``.  Runs in linear time.
    """
    sx, sy = _s(x), _s(y)
    n, m = len(sx), len(sy)
    kp = n - m
    if kp < 0:
        return None
    if kp == 0:
        return (0, n) if sx == sy else None
    lcp = 0
    while lcp < m and sx[lcp] == sy[lcp]:
        lcp += 1
    lcs = 0
    while lcs < m and sx[n - 1 - lcs] == sy[m - 1 - lcs]:
        lcs += 1
    lo, hi = max(0, m - lcs), min(lcp, m)
    return (lo, hi) if lo <= hi else None
