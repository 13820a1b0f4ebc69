"""SplitMix64 pseudorandom stream.

All randomness in the simulator (puzzle generation, slips, per-episode seed
derivation) goes through this generator so that traces are reproducible
bit-for-bit from a 64-bit seed.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """The SplitMix64 output finalizer applied to a 64-bit word."""
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def splitmix64(seed: int) -> int:
    """First output of a SplitMix64 stream seeded with `seed`."""
    return mix64((seed + GOLDEN_GAMMA) & MASK64)


class SplitMix64:
    """Stateful SplitMix64 stream.

    >>> rng = SplitMix64(0)
    >>> hex(rng.next_u64())
    '0xe220a8397b1dcdaf'
    """

    __slots__ = ("state",)

    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def random(self) -> float:
        """Uniform float in [0, 1) built from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection (no modulo bias)."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in the closed range [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def coin(self) -> bool:
        """One fair bit, taken from the most significant bit of a draw."""
        return bool(self.next_u64() >> 63)

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle (descending index)."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
