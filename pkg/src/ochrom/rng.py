"""Seeded deterministic PRNG for reproducible graph corpora.

splitmix64: state advances by the golden-gamma constant, output is a
finalizing mix of the state.  Chosen because the algorithm is short enough
to document bit-for-bit, so independently written generators can reproduce
the same corpora from the same seeds.
"""

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """64-bit splitmix64 generator."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, p: float) -> bool:
        """True with probability p, decided by integer threshold comparison."""
        return self.next_u64() < int(p * 2**64)

    def choice(self, k: int) -> int:
        """Uniform-ish integer in [0, k); modulo bias is negligible for tiny k."""
        return self.next_u64() % k
