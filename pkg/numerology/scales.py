"""Scale bookkeeping: V(N, p, q) = V^{(2,2)}_{p,q}(δ) with δ = N^{−1/2}."""
import math
from dataclasses import dataclass
from fractions import Fraction

from lab.exceptions import ParameterError
from monomials.exact import as_fraction


@dataclass(frozen=True)
class ScaleParams:
    delta: Fraction

    def __post_init__(self):
        delta = as_fraction(self.delta)
        if not 0 < delta <= 1:
            raise ParameterError(f"delta must lie in (0, 1], got {delta}")
        object.__setattr__(self, "delta", delta)

    @classmethod
    def from_N(cls, N):
        root = math.isqrt(N) if N >= 1 else 0
        if root * root != N or N < 1:
            raise ParameterError(f"N = {N} is not a positive perfect square")
        return cls(Fraction(1, root))

    @property
    def N(self):
        """δ^{−2} when that is an integer, else None."""
        value = 1 / self.delta ** 2
        return value.numerator if value.denominator == 1 else None

    @property
    def squares_per_side(self):
        """δ-squares tiling [0,1]² along one side, when δ^{−1} is an integer."""
        value = 1 / self.delta
        return value.numerator if value.denominator == 1 else None
