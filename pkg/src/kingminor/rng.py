"""Deterministic random streams.

The repo-wide generator is SplitMix64: 64-bit state advanced by the golden
gamma, one xor-multiply mixing pass per output. One algorithm is compiled
once in ``_kernels`` and used both from Python (graph generators, tests) and
inside the annealing loop. Independent streams for sub-jobs are derived by
drawing a fresh 64-bit seed from the parent stream (``spawn``), so parallel
workers never share state.
"""

from __future__ import annotations

import numpy as np

from . import _kernels

_MASK = (1 << 64) - 1


class Stream:
    """A single SplitMix64 stream."""

    def __init__(self, seed: int):
        self._state = np.array([np.uint64(int(seed) & _MASK)], dtype=np.uint64)

    @property
    def state(self) -> np.ndarray:
        """The raw uint64[1] state array, shareable with compiled kernels."""
        return self._state

    def u64(self) -> int:
        return int(_kernels.rng_next(self._state))

    def random(self) -> float:
        """Uniform float in [0, 1)."""
        return float(_kernels.rng_f64(self._state))

    def below(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        return int(_kernels.rng_below(self._state, n))

    def spawn(self) -> "Stream":
        """Derive an independent child stream."""
        return Stream(self.u64())

    def shuffle(self, seq: list) -> None:
        """In-place Fisher-Yates."""
        for k in range(len(seq) - 1, 0, -1):
            r = self.below(k + 1)
            seq[k], seq[r] = seq[r], seq[k]
