"""Bit-exact label primitives.

All layouts are most-significant-bit first.  A :class:`BitString` is an
immutable ``(value, length)`` pair, so labels hash and compare cheaply and
stay compact even at tens of thousands of bits.  Readers go through a
:class:`BitCursor`, which raises :class:`LabelDecodeError` instead of
reading past the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import gmpy2
import numpy as np

from .bounds import trit_width


class LabelDecodeError(ValueError):
    """A bit sequence is not a well-formed label."""


@dataclass(frozen=True)
class BitString:
    value: int
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.value < 0 or self.value >> self.length:
            raise ValueError(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def from_str(cls, bits: str) -> "BitString":
        if bits and set(bits) - {"0", "1"}:
            raise ValueError(f"not a bit string: {bits!r}")
        return cls(int(bits, 2) if bits else 0, len(bits))

    @classmethod
    def from_bits(cls, bits) -> "BitString":
        """Build from an array-like of 0/1 values."""
        arr = np.asarray(bits, dtype=np.uint8)
        if arr.size == 0:
            return EMPTY
        packed = np.packbits(arr)
        pad = 8 * packed.size - arr.size
        return cls(int.from_bytes(packed.tobytes(), "big") >> pad, int(arr.size))

    @classmethod
    def concat(cls, parts: Iterable["BitString"]) -> "BitString":
        value = 0
        length = 0
        for part in parts:
            value = (value << part.length) | part.value
            length += part.length
        return cls(value, length)

    @classmethod
    def from_hex(cls, hexdigits: str, length: int) -> "BitString":
        nbytes = (length + 7) // 8
        if len(hexdigits) != 2 * nbytes:
            raise ValueError(f"expected {2 * nbytes} hex digits for {length} bits")
        raw = int(hexdigits, 16) if hexdigits else 0
        pad = 8 * nbytes - length
        if raw & ((1 << pad) - 1):
            raise ValueError("non-zero padding bits")
        return cls(raw >> pad, length)

    def to_hex(self) -> str:
        """Hex dump, MSB first, zero-padded on the right to whole bytes."""
        nbytes = (self.length + 7) // 8
        if nbytes == 0:
            return ""
        return (self.value << (8 * nbytes - self.length)).to_bytes(nbytes, "big").hex()

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b") if self.length else ""

    def __add__(self, other: "BitString") -> "BitString":
        return BitString.concat((self, other))

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.value >> (self.length - 1 - i)) & 1

    def flip(self, i: int) -> "BitString":
        if not 0 <= i < self.length:
            raise IndexError(i)
        return BitString(self.value ^ (1 << (self.length - 1 - i)), self.length)

    def cursor(self) -> "BitCursor":
        return BitCursor(self)


EMPTY = BitString(0, 0)


class BitCursor:
    """Sequential reader over a :class:`BitString`."""

    def __init__(self, source: BitString):
        self.source = source
        self._bits = str(source)
        self.position = 0

    @property
    def remaining(self) -> int:
        return len(self._bits) - self.position

    def at_end(self) -> bool:
        return self.position == len(self._bits)

    def _take(self, width: int) -> str:
        if width > self.remaining:
            raise LabelDecodeError(
                f"needed {width} bits at position {self.position}, {self.remaining} left"
            )
        chunk = self._bits[self.position:self.position + width]
        self.position += width
        return chunk

    def read_bit(self) -> int:
        return int(self._take(1))

    def read_bits(self, count: int) -> np.ndarray:
        chunk = self._take(count)
        return np.frombuffer(chunk.encode(), dtype=np.uint8) - ord("0")

    def read_fixed(self, width: int) -> int:
        chunk = self._take(width)
        return int(chunk, 2) if chunk else 0

    def read_gamma(self) -> int:
        one = self._bits.find("1", self.position)
        if one < 0:
            raise LabelDecodeError("unterminated gamma prefix")
        zeros = one - self.position
        self.position = one
        return int(self._take(zeros + 1), 2)

    def read_runs(self, m: int) -> list[int]:
        bits = self._bits
        out = []
        pos = self.position
        for _ in range(m):
            if pos >= len(bits) or bits[pos] != "1":
                raise LabelDecodeError(f"expected a run start at position {pos}")
            nxt = bits.find("1", pos + 1)
            if nxt < 0:
                nxt = len(bits)
            out.append(nxt - pos - 1)
            pos = nxt
        # a run's zeros are bounded by the next run start, not by the label
        # end, so the final run can only be delimited by what follows
        self.position = pos
        return out

    def read_trits(self, m: int) -> np.ndarray:
        value = self.read_fixed(trit_width(m))
        if m == 0:
            return np.zeros(0, dtype=np.int8)
        if value >= 3**m:
            raise LabelDecodeError(f"packed value {value} exceeds 3^{m}")
        digits = gmpy2.digits(gmpy2.mpz(value), 3).rjust(m, "0")
        return (np.frombuffer(digits.encode(), dtype=np.uint8) - ord("0")).astype(np.int8)


def write_fixed(value: int, width: int) -> BitString:
    if width < 0:
        raise ValueError("negative width")
    if value < 0 or value >> width:
        raise ValueError(f"{value} does not fit in {width} bits")
    return BitString(int(value), width)


def read_fixed(cursor: BitCursor, width: int) -> int:
    return cursor.read_fixed(width)


def write_gamma(value: int) -> BitString:
    """Elias gamma: ``floor(log2 v)`` zeros, then ``v`` in binary."""
    if value < 1:
        raise ValueError(f"gamma code needs value >= 1, got {value}")
    return BitString(int(value), 2 * (int(value).bit_length() - 1) + 1)


def read_gamma(cursor: BitCursor) -> int:
    return cursor.read_gamma()


def encode_runs(magnitudes: Sequence[int]) -> BitString:
    """One ``1`` followed by ``b`` zeros for each magnitude ``b``."""
    mags = np.asarray(magnitudes, dtype=np.int64)
    if mags.size == 0:
        return EMPTY
    if (mags < 0).any():
        raise ValueError("run magnitudes must be non-negative")
    starts = np.arange(mags.size, dtype=np.int64)
    starts[1:] += np.cumsum(mags[:-1])
    bits = np.zeros(int(mags.size + mags.sum()), dtype=np.uint8)
    bits[starts] = 1
    return BitString.from_bits(bits)


def decode_runs(cursor: BitCursor, m: int) -> list[int]:
    """Read exactly ``m`` runs.

    The last run extends up to the next ``1`` or the end of input, so a run
    field has to be the final field of a label or be followed by a ``1``.
    """
    return cursor.read_runs(m)


def pack_trits(trits) -> BitString:
    """Pack base-3 digits (first digit most significant) into one field."""
    arr = np.asarray(trits, dtype=np.int64)
    if arr.size == 0:
        return EMPTY
    if ((arr < 0) | (arr > 2)).any():
        raise ValueError("trits must be in {0, 1, 2}")
    digits = (arr.astype(np.uint8) + ord("0")).tobytes().decode()
    return BitString(int(gmpy2.mpz(digits, 3)), trit_width(arr.size))


def unpack_trits(cursor: BitCursor, m: int) -> np.ndarray:
    return cursor.read_trits(m)
