"""Deterministic, platform-independent pseudo-random generation.

The generator is SplitMix64: a 64-bit counter advanced by the golden-gamma
increment, passed through a two-round xor/multiply finalizer.  The constants
below are the standard published ones; the sequence depends only on the seed,
never on the host platform or Python build.

Bounded draws use rejection sampling, so they are unbiased as well as
reproducible.
"""

from __future__ import annotations

MASK64 = 0xFFFFFFFFFFFFFFFF
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_MULT_1 = 0xBF58476D1CE4E5B9
MIX_MULT_2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """SplitMix64 finalizer on a 64-bit word."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * MIX_MULT_1) & MASK64
    z = ((z ^ (z >> 27)) * MIX_MULT_2) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Stream of 64-bit words from a seed."""

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN_GAMMA) & MASK64
        return mix64(self._state)

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n), unbiased via rejection."""
        if n <= 0:
            raise ValueError("randbelow requires n >= 1")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    def uniform_int(self, lo: int, hi: int) -> int:
        """Uniform integer in the inclusive range [lo, hi]."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.randbelow(hi - lo + 1)


def derive_seed(master: int, *indices: int) -> int:
    """Stable sub-seed from a master seed and an index path.

    Used to give every (experiment cell, trial) its own independent stream so
    aggregation order and worker count never change the results.
    """
    state = mix64(master)
    for index in indices:
        state = mix64(state ^ mix64((index + 1) & MASK64))
    return state
