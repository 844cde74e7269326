"""Deterministic sampling of small exact scalars.

Genericity arguments (random points on a variety, random subspaces, random
congruences) all draw from this generator.  Seeding is explicit everywhere
so that every run, test, and emitted certificate is reproducible, and the
sampled numerators and denominators are kept small so exact arithmetic
stays fast.
"""

from __future__ import annotations

import random
from fractions import Fraction

from orthopair.scalar import GaussianRational


class SeededScalars:
    """A stream of small rational and Gaussian-rational scalars."""

    def __init__(self, seed: int = 0):
        self.seed = seed
        self._rng = random.Random(seed)

    def integer(self, lo: int = -4, hi: int = 4) -> int:
        return self._rng.randint(lo, hi)

    def fraction(self) -> Fraction:
        return Fraction(self._rng.randint(-4, 4), self._rng.choice((1, 2, 3)))

    def rational(self) -> GaussianRational:
        """A real scalar."""
        return GaussianRational(self.fraction())

    def scalar(self) -> GaussianRational:
        """A complex scalar."""
        return GaussianRational(self.fraction(), self.fraction())

    def nonzero_scalar(self) -> GaussianRational:
        while True:
            c = self.scalar()
            if not c.is_zero():
                return c

    def vector(self, n: int) -> list:
        return [self.scalar() for _ in range(n)]

    def nonzero_vector(self, n: int) -> list:
        while True:
            v = self.vector(n)
            if any(not x.is_zero() for x in v):
                return v

    def choice(self, seq):
        return self._rng.choice(seq)

    def sample(self, seq, k: int):
        return self._rng.sample(seq, k)

    def shuffled(self, seq) -> list:
        out = list(seq)
        self._rng.shuffle(out)
        return out
