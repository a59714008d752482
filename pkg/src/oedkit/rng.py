"""Self-contained deterministic random number generation.

All stochastic pieces of oedkit (random SPD test matrices, factorial noise,
Latin hypercube starts) draw from SplitMix64 so that results are bitwise
reproducible across platforms and numpy versions.

SplitMix64 constants (Steele, Lea & Flood's standard parameters):
    state increment  0x9E3779B97F4A7C15
    mix multiplier 1 0xBF58476D1CE4E5B9
    mix multiplier 2 0x94D049BB133111EB
"""

from __future__ import annotations

import math

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """64-bit SplitMix generator with uniform/normal/permutation helpers."""

    def __init__(self, seed: int):
        self._state = seed & _MASK
        self._spare_normal: float | None = None

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Uniform on [0, 1) with 53-bit resolution."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform_symmetric(self) -> float:
        """Uniform on [-1, 1)."""
        return 2.0 * self.uniform() - 1.0

    def uniform_in(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.uniform()

    def normal(self) -> float:
        """Standard normal via Box-Muller; caches the paired deviate."""
        if self._spare_normal is not None:
            z = self._spare_normal
            self._spare_normal = None
            return z
        # u1 > 0 so the log is finite
        u1 = 1.0 - self.uniform()
        u2 = self.uniform()
        r = math.sqrt(-2.0 * math.log(u1))
        self._spare_normal = r * math.sin(2.0 * math.pi * u2)
        return r * math.cos(2.0 * math.pi * u2)

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.next_u64() % (i + 1)
            items[i], items[j] = items[j], items[i]


def latin_hypercube(n: int, bounds, seed: int) -> list[list[float]]:
    """n seeded Latin hypercube points inside a box.

    Each dimension is split into n equal strata; one point is jittered
    uniformly inside each stratum and strata are permuted per dimension.
    """
    rng = SplitMix64(seed)
    dims = len(bounds)
    cols = []
    for d in range(dims):
        lo, hi = bounds[d]
        strata = list(range(n))
        rng.shuffle(strata)
        width = (hi - lo) / n
        cols.append([lo + (s + rng.uniform()) * width for s in strata])
    return [[cols[d][k] for d in range(dims)] for k in range(n)]
