"""Deterministic random number generator for reproducible healing runs.

SplitMix64 (Steele, Lea, Flood 2014).  Chosen over ``random.Random`` so the
exact stream is pinned by this file alone and can be reimplemented in other
languages from the constants below.  All randomized algorithms in this
package draw through this class only.
"""

from __future__ import annotations

from typing import Sequence, TypeVar

T = TypeVar("T")

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class Rng:
    """SplitMix64 stream seeded with a non-negative integer."""

    __slots__ = ("_state",)

    def __init__(self, seed: int = 0):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        """Uniform-enough integer in [0, n).  Modulo bias is irrelevant for
        the tiny candidate sets used here and keeps the stream portable."""
        if n <= 0:
            raise ValueError("randrange needs n > 0")
        return self.next_u64() % n

    def choice(self, seq: Sequence[T]) -> T:
        """Pick one element.  Callers pass pre-sorted sequences so the result
        is a pure function of (seed, call count)."""
        if not seq:
            raise ValueError("choice on empty sequence")
        return seq[self.randrange(len(seq))]

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]
