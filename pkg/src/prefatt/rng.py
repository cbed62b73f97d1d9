"""Seeded random source shared by every stochastic component.

One PRNG family is fixed for the whole project (numpy's PCG64) so that a
64-bit seed gives the same draw sequence everywhere. Draws are buffered in
blocks; the per-call cost matters because generation loops consume one to
three variates per edge.
"""

import numpy as np

_UNIFORM_BLOCK = 8192
_NORMAL_BLOCK = 4096


class RandomSource:
    """Deterministic stream of uniforms and derived variates.

    Two instances built from the same seed produce identical sequences.
    Independent replications should use ``RandomSource(base_seed + i)``.
    """

    def __init__(self, seed):
        if seed < 0 or int(seed) != seed:
            raise ValueError("seed must be a non-negative integer")
        self.seed = int(seed)
        self._gen = np.random.Generator(np.random.PCG64(self.seed))
        self._uni = []
        self._uni_pos = 0
        self._norm = []
        self._norm_pos = 0

    def uniform(self):
        """One draw from U[0, 1)."""
        i = self._uni_pos
        buf = self._uni
        if i >= len(buf):
            buf = self._gen.random(_UNIFORM_BLOCK).tolist()
            self._uni = buf
            i = 0
        self._uni_pos = i + 1
        return buf[i]

    def standard_normal(self):
        i = self._norm_pos
        buf = self._norm
        if i >= len(buf):
            buf = self._gen.standard_normal(_NORMAL_BLOCK).tolist()
            self._norm = buf
            i = 0
        self._norm_pos = i + 1
        return buf[i]

    def pareto(self, shape, scale):
        """Pareto variate with density shape*scale^shape / x^(shape+1), x >= scale.

        Inverse-CDF transform on a buffered uniform; the survival draw is
        taken from (0, 1] so the result is always finite.
        """
        if shape <= 0 or scale <= 0:
            raise ValueError("pareto needs shape > 0 and scale > 0")
        u = 1.0 - self.uniform()
        return scale * u ** (-1.0 / shape)

    def truncated_normal(self, mean, stddev):
        """Normal(mean, stddev^2) draw with negative results replaced by 0.0."""
        if stddev < 0:
            raise ValueError("stddev must be >= 0")
        if stddev == 0:
            return mean if mean > 0 else 0.0
        x = mean + stddev * self.standard_normal()
        return x if x > 0 else 0.0
