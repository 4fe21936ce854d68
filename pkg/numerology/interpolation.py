"""
Interpolation coefficients of the cubic iteration.

α₁, α₂, β₂ are the unique solutions of

    1/(2p/9) = α₁/(5p/9) + (1−α₁)/2
    1/(5p/9) = α₂/p + (1−α₂)/8
    1/8      = (1−β₂)/2 + β₂/(5p/9)

and all three lie in (0, 1) exactly when p > 72/5.
"""
from dataclasses import dataclass
from fractions import Fraction

from lab.exceptions import ParameterError
from monomials.exact import as_fraction

P_FLOOR = Fraction(72, 5)


@dataclass(frozen=True)
class InterpolationCoeffs:
    p: Fraction
    alpha1: Fraction
    alpha2: Fraction
    beta2: Fraction

    def residuals(self):
        p = self.p
        return (
            1 / (2 * p / 9) - (self.alpha1 / (5 * p / 9) + (1 - self.alpha1) / 2),
            1 / (5 * p / 9) - (self.alpha2 / p + (1 - self.alpha2) / 8),
            Fraction(1, 8) - ((1 - self.beta2) / 2 + self.beta2 / (5 * p / 9)),
        )

    @property
    def rho0(self):
        """(1−α₂)β₂, the per-step ratio of the γ and τ sequences."""
        return (1 - self.alpha2) * self.beta2

    def as_dict(self):
        return {
            "p": str(self.p),
            "alpha1": str(self.alpha1),
            "alpha2": str(self.alpha2),
            "beta2": str(self.beta2),
        }


def check_p(p):
    p = as_fraction(p)
    if p <= P_FLOOR:
        raise ParameterError(f"p must exceed 72/5, got {p}")
    return p


def solve_alphas(p):
    p = check_p(p)
    return InterpolationCoeffs(
        p=p,
        alpha1=5 * (p - 9) / (5 * p - 18),
        alpha2=(5 * p - 72) / (5 * p - 40),
        beta2=15 * p / (4 * (5 * p - 18)),
    )
