"""Immutable binary strings with 1-based strided access.

All positions in this package are 1-based, so ``x.bit(1)`` is the first
symbol.  Internally a :class:`BitString` is backed by a ``str`` of ASCII
``'0'``/``'1'`` characters, which keeps slicing, hashing and pattern search
cheap in CPython.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence, Union

from .errors import FormatError, RangeError, ShapeError

__all__ = [
    "BitString",
    "BitsLike",
    "as_bits",
    "subsequence",
    "interleave_merge",
    "concat",
    "runs",
    "parse_lines",
    "format_lines",
]

_TRANS = str.maketrans("", "", "01")


class BitString:
    """A finite binary sequence.

    Accepts a ``str`` of ``0``/``1`` characters, another ``BitString`` or any
    iterable of integers in ``{0, 1}``.  Instances compare equal to the
    corresponding ASCII string and hash the same way.
    """

    __slots__ = ("_s",)

    def __init__(self, bits: "BitsLike" = ""):
        if isinstance(bits, BitString):
            s = bits._s
        elif isinstance(bits, str):
            s = bits
            if s.translate(_TRANS):
                raise FormatError(f"not a binary string: {bits!r}")
        else:
            try:
                s = "".join("1" if _bit(b) else "0" for b in bits)
            except TypeError as exc:
                raise FormatError(f"cannot interpret {bits!r} as bits") from exc
        object.__setattr__(self, "_s", s)

    @classmethod
    def _trusted(cls, s: str) -> "BitString":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_s", s)
        return obj

    @classmethod
    def from_int(cls, value: int, n: int) -> "BitString":
        """Big-endian ``n``-bit representation: position 1 is the MSB."""
        if value < 0 or value >> n:
            raise RangeError(f"{value} does not fit in {n} bits")
        return cls._trusted(format(value, f"0{n}b") if n else "")

    def __setattr__(self, name, value):
        raise AttributeError("BitString is immutable")

    def __len__(self) -> int:
        return len(self._s)

    def __iter__(self) -> Iterator[int]:
        return (1 if c == "1" else 0 for c in self._s)

    def __eq__(self, other) -> bool:
        if isinstance(other, BitString):
            return self._s == other._s
        if isinstance(other, str):
            return self._s == other
        return NotImplemented

    def __lt__(self, other: "BitString") -> bool:
        return (len(self._s), self._s) < (len(other._s), other._s)

    def __hash__(self) -> int:
        return hash(self._s)

    def __add__(self, other: "BitsLike") -> "BitString":
        return concat(self, other)

    def __str__(self) -> str:
        return self._s

    def __repr__(self) -> str:
        return f"BitString('{self._s}')"

    def bit(self, i: int) -> int:
        """Symbol at 1-based position ``i``."""
        if not 1 <= i <= len(self._s):
            raise RangeError(f"position {i} outside [1, {len(self._s)}]")
        return 1 if self._s[i - 1] == "1" else 0

    def to01(self) -> str:
        return self._s

    def to_int(self) -> int:
        return int(self._s, 2) if self._s else 0

    def to_list(self) -> list[int]:
        return list(self)

    @property
    def weight(self) -> int:
        return self._s.count("1")


BitsLike = Union[BitString, str, Sequence[int], Iterable[int]]


def _bit(b) -> bool:
    if b in (0, 1):
        return bool(b)
    raise FormatError(f"symbol {b!r} is not a bit")


def as_bits(x: BitsLike) -> BitString:
    return x if isinstance(x, BitString) else BitString(x)


def _s(x: BitsLike) -> str:
    # Raw ASCII form; used on hot paths to skip wrapping.
    if isinstance(x, BitString):
        return x._s
    return BitString(x)._s


def subsequence(x: BitsLike, start: int, end: int, step: int = 1) -> BitString:
    """Return ``(x_start, x_{start+step}, ...)`` up to position ``end``.

    >>> str(subsequence("110100", 1, 6, 2))
    '100'
    """
    s = _s(x)
    if step < 1 or start < 1 or end < start or end > len(s):
        raise RangeError(f"invalid strided range [{start}, {end}]_{step} for length {len(s)}")
    return BitString._trusted(s[start - 1 : end : step])


def residue_length(i: int, n: int, step: int) -> int:
    """Number of positions in ``[i, n]_step`` (zero when ``i > n``)."""
    return 0 if i > n else (n - i) // step + 1


def interleave_merge(residues: Sequence[BitsLike], step: int, n: int) -> BitString:
    """Inverse of splitting a length-``n`` string into its ``step`` residues.

    ``residues[i - 1]`` must hold the symbols at positions ``[i, n]_step``.
    """
    if step < 1 or len(residues) != step:
        raise ShapeError(f"expected {step} residues, got {len(residues)}")
    parts = [_s(r) for r in residues]
    for i, part in enumerate(parts, start=1):
        if len(part) != residue_length(i, n, step):
            raise ShapeError(
                f"residue {i} has length {len(part)}, expected {residue_length(i, n, step)}"
            )
    out = [""] * n
    for i, part in enumerate(parts):
        out[i::step] = part
    return BitString._trusted("".join(out))


def concat(x: BitsLike, y: BitsLike) -> BitString:
    return BitString._trusted(_s(x) + _s(y))


def runs(x: BitsLike) -> list[tuple[int, int]]:
    """Run-length decomposition as ``(symbol, length)`` pairs."""
    s = _s(x)
    out: list[tuple[int, int]] = []
    i = 0
    while i < len(s):
        j = i
        while j < len(s) and s[j] == s[i]:
            j += 1
        out.append((int(s[i]), j - i))
        i = j
    return out


def parse_lines(lines: Iterable[str]) -> list[BitString]:
    """Parse the line format: one string per line, ``#`` comments and blanks skipped."""
    out = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(BitString(line))
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    return out


def format_lines(strings: Iterable[BitsLike]) -> str:
    return "".join(_s(x) + "\n" for x in strings)
