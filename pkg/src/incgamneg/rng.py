"""SplitMix64: a tiny, fully specified 64-bit generator.

Given a seed ``s``, the generator keeps ``state = s mod 2**64`` and yields

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

with all arithmetic mod 2**64.  Uniform doubles use the top 53 bits.
Any implementation following this recipe reproduces the same sample points.
"""

from __future__ import annotations

import math

_MASK = (1 << 64) - 1


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = int(seed) & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform in ``[0, 1)``."""
        return (self.next_u64() >> 11) * 2.0**-53

    def uniform(self, lo: float, hi: float) -> float:
        """Uniform in ``[lo, hi)`` (up to rounding of the affine map)."""
        return lo + (hi - lo) * self.random()

    def randint(self, lo: int, hi: int) -> int:
        """Integer in ``[lo, hi]``; modulo bias is below 2**-40 for spans < 2**24."""
        return lo + self.next_u64() % (hi - lo + 1)


def sample_points(
    n: int, seed: int, a_range=(-500.0, 500.0), z_range=(-500.0, 0.0)
) -> list[tuple[float, float]]:
    """``n`` points ``(a, z)``; ``z`` never reaches the upper end ``z_range[1]``."""
    g = SplitMix64(seed)
    out = []
    for _ in range(n):
        a = g.uniform(*a_range)
        z = g.uniform(*z_range)
        if z >= z_range[1]:
            z = math.nextafter(z_range[1], -math.inf)
        out.append((a, z))
    return out
