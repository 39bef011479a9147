"""Locating code: find a burst of deletions up to a window of ``delta`` positions.

A codeword is a dense string whose pattern count is fixed modulo 4 and whose
gap vector has a fixed VT residue modulo ``2n``.  From the received string
alone the decoder learns how the pattern count changed (-1, 0, 1 or 2) and
the VT deficit of the gap vector, which pins down the gap the burst hit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitseq import BitsLike, _s
from .errors import DecodeFailure, RangeError, ShapeError
from .pattern import PatternParams, _dense_from_positions, _gaps, _positions

__all__ = [
    "LocSyndromes",
    "LocateResult",
    "loc_syndromes",
    "loc_member",
    "locate",
]


@dataclass(frozen=True)
class LocSyndromes:
    """Pattern count residue ``c0`` (mod 4) and gap-vector VT residue ``c1`` (mod 2n)."""

    c0: int
    c1: int
    n: int

    def __post_init__(self):
        if not 0 <= self.c0 < 4:
            raise RangeError(f"c0={self.c0} outside [0, 4)")
        if self.n < 1 or not 0 <= self.c1 < 2 * self.n:
            raise RangeError(f"c1={self.c1} outside [0, {2 * self.n})")


@dataclass(frozen=True)
class LocateResult:
    """Burst length and candidate windows for the kept-prefix length ``ell``.

    Each candidate ``(lo, hi)`` is an inclusive range of ``ell`` values such
    that, for the true codeword, the received string is
    ``(x_[1, ell], x_[ell+length+1, n])`` for some ``ell`` in one of them.
    ``case`` names the change in pattern count ``n_p(x) - n_p(y)``: ``"1"``
    for 0, ``"2"`` for -1, ``"3"`` for +1 and ``"4"`` for +2.  ``tags`` gives
    the burst type behind each candidate (``"1.i"`` and ``"1.ii"`` split
    case 1 into untouched and destroyed-then-recreated patterns).
    """

    length: int
    candidates: tuple[tuple[int, int], ...]
    case: str
    tags: tuple[str, ...] = ()


_CASE_NAMES = {0: "1", -1: "2", 1: "3", 2: "4"}


def _gap_vt(positions: list[int], n: int) -> int:
    # VT of the gap vector, telescoped: (r + 1)(n + 1) - sum of starts
    return (len(positions) + 1) * (n + 1) - sum(positions)


def loc_syndromes(x: BitsLike, params: PatternParams) -> LocSyndromes:
    s = _s(x)
    pos = _positions(s, "0" * params.k + "1" * params.k)
    n = len(s)
    return LocSyndromes(len(pos) % 4, _gap_vt(pos, n) % (2 * n), n)


def loc_member(x: BitsLike, params: PatternParams, syn: LocSyndromes) -> bool:
    s = _s(x)
    if len(s) != syn.n:
        raise ShapeError(f"length {len(s)} does not match code length {syn.n}")
    n = len(s)
    pos = _positions(s, "0" * params.k + "1" * params.k)
    return (
        _dense_from_positions(pos, n, 2 * params.k, params.delta)
        and len(pos) % 4 == syn.c0
        and _gap_vt(pos, n) % (2 * n) == syn.c1
    )


def locate(y: BitsLike, params: PatternParams, syn: LocSyndromes) -> LocateResult:
    """Candidate windows for a burst of ``syn.n - |y|`` deletions.

    Write ``u`` for the number of patterns left of the burst, ``D`` for the
    patterns it destroys and ``C`` for the one it may create.  The VT deficit
    of the gap vector then satisfies, modulo ``2n``,

        deficit = (D - C)(n + 1) + k'(u + 1 + C) - (destroyed starts) + C * c

    where ``c`` is the start of the created pattern in ``y``.  For every
    gap index ``j = u + 1`` of ``y`` this identity either fixes the unknown
    starts (and hence a short window for ``ell``) or rules ``j`` out.
    """
    t = _s(y)
    k, delta = params.k, params.delta
    n = syn.n
    kp = n - len(t)
    if not 1 <= kp <= k:
        raise RangeError(f"burst length {kp} outside [1, {k}]")
    m = len(t)
    pos = _positions(t, "0" * k + "1" * k)
    r = len(pos)
    mod = 2 * n
    d = (syn.c0 - r) % 4
    if d == 3:
        d = -1
    dvt = (syn.c1 - _gap_vt(pos, m)) % mod

    # S[j] = start of the (j-1)-st pattern of y, S[1] = 0, S[r+2] = m + 1
    S = [0, 0] + pos + [m + 1]

    found: list[tuple[int, int, str]] = []
    if d == 0:
        for j in range(1, r + 2):
            # nothing destroyed or created; the burst sits inside gap j
            if (kp * j - dvt) % mod == 0:
                lo = S[j] + 2 * k - 1 if j >= 2 else 0
                found.append((lo, S[j + 1] - 1, "1.i"))
        for j in range(1, r + 1):
            # pattern j of x destroyed, pattern j of y created across the junction
            c = S[j + 1]
            dest = (kp * (j + 1) + c - dvt) % mod
            found.append((max(c, dest - kp), min(c + 2 * k - 2, dest + 2 * k - 2), "1.ii"))
    elif d == -1:
        for j in range(1, r + 1):
            c = S[j + 1]
            if (kp * (j + 1) + c - (n + 1) - dvt) % mod == 0:
                found.append((c, c + 2 * k - 2, "2"))
    elif d == 1:
        for j in range(1, r + 2):
            dest = (n + 1 + kp * j - dvt) % mod
            if (S[j] + 2 * k if j >= 2 else 1) <= dest <= S[j + 1] + kp - 2 * k:
                found.append((dest - kp, dest + 2 * k - 2, "3"))
    elif kp >= 2:
        for j in range(1, r + 2):
            both = (2 * (n + 1) + kp * j - dvt) % mod
            # first start in [ell-2k+2, ell+k'-2k], second in [ell+2, ell+k']
            lo = -(-(both + 2 * k - 2 * kp) // 2)
            hi = (both + 2 * k - 4) // 2
            found.append((max(lo, S[j] + 2 * k - 1 if j >= 2 else 0), hi, "4"))

    cands: list[tuple[int, int]] = []
    tags: list[str] = []
    for lo, hi, tag in found:
        lo, hi = max(lo, 0), min(hi, m)
        # windows never exceed delta positions; split the rare longer ones
        while lo <= hi:
            part = (lo, min(hi, lo + delta - 1))
            if part not in cands:
                cands.append(part)
                tags.append(tag)
            lo = part[1] + 1
    if not cands:
        raise DecodeFailure("no locating case is consistent with the received string")
    return LocateResult(kp, tuple(cands), _CASE_NAMES[d], tuple(tags))
