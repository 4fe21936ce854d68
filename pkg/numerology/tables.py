"""
Critical exponents and ball-inflation index constraints.

Decoupling exponents here are affine in 1/p (or 1/q), so each branch is an
ExponentLine evaluated at x = 1/p and critical points are line crossings.
"""
from dataclasses import dataclass
from fractions import Fraction

from counting.exponents import ExponentLine
from lab.exceptions import ParameterError
from monomials.exact import as_fraction

HOLDER_INDEX = Fraction(8, 3)

# S_{2,2}, l^p L^p: 1/2 − 1/p up to the crossover, 1 − 5/p after it
PARABOLOID_SMALL = ExponentLine("1/2-1/p", Fraction(-1), Fraction(1, 2))
PARABOLOID_LARGE = ExponentLine("1-5/p", Fraction(-5), Fraction(1))
# S_{2,2}, l^q L^8 and the multilinear comparison exponents
PARABOLOID_L8 = ExponentLine("1/2-1/q", Fraction(-1), Fraction(1, 2))
LAMBDA_ONE = ExponentLine("5/16-1/(2q)", Fraction(-1, 2), Fraction(5, 16))
LAMBDA_TWO = ExponentLine("1/2-1/q", Fraction(-1), Fraction(1, 2))


def _at(line, p):
    return line.at(1 / as_fraction(p))


def equalising_index(first, second):
    """The index p at which two exponents affine in 1/p agree."""
    x = first.crossing(second)
    if x is None or x <= 0:
        raise ParameterError(f"{first.label} and {second.label} never agree at a finite index")
    return 1 / x


def paraboloid_exponent(p):
    """Sharp l^p L^p decoupling exponent of the paraboloid S_{2,2}."""
    p = as_fraction(p)
    if p < 2:
        raise ParameterError(f"p must be at least 2, got {p}")
    line = PARABOLOID_SMALL if p <= equalising_index(PARABOLOID_SMALL, PARABOLOID_LARGE) else PARABOLOID_LARGE
    return _at(line, p)


def lambda_one(q):
    return _at(LAMBDA_ONE, q)


def lambda_two(q):
    return _at(LAMBDA_TWO, q)


def holder_gap(q):
    """λ₂,q − (1/2 − 1/(2q) − 3/16), non-negative exactly when q ≥ 8/3."""
    q = as_fraction(q)
    return lambda_two(q) - (Fraction(1, 2) - 1 / (2 * q) - Fraction(3, 16))


def cubic_exponent(p=20):
    """2(1/2 − 1/p), the l^p L^p exponent of S_{2,3} at its critical p = 20."""
    return 2 * (Fraction(1, 2) - 1 / as_fraction(p))


def _row(name, exponent, domain, critical_point=None, value=None, check=None):
    return {
        "name": name,
        "exponent": exponent,
        "domain": domain,
        "critical_point": critical_point,
        "value": value,
        "check": check,
    }


def critical_exponent_table(q_samples=(Fraction(2), Fraction(8, 3), Fraction(3), Fraction(40, 9), Fraction(8))):
    crossover = equalising_index(PARABOLOID_SMALL, PARABOLOID_LARGE)
    equality = equalising_index(LAMBDA_ONE, LAMBDA_TWO)
    holder = {str(as_fraction(q)): holder_gap(q) >= 0 for q in q_samples}
    rows = [
        _row("S22 l^p L^p (small p)", PARABOLOID_SMALL.label, f"2 <= p <= {crossover}",
             crossover, paraboloid_exponent(crossover)),
        _row("S22 l^p L^p (large p)", PARABOLOID_LARGE.label, f"p >= {crossover}",
             crossover, _at(PARABOLOID_LARGE, crossover)),
        _row("S22 l^q L^8", PARABOLOID_L8.label, f"{HOLDER_INDEX} <= q <= 8",
             HOLDER_INDEX, _at(PARABOLOID_L8, HOLDER_INDEX)),
        _row("lambda_1,q", LAMBDA_ONE.label, f"q >= {HOLDER_INDEX}", equality, lambda_one(equality)),
        _row("lambda_2,q", LAMBDA_TWO.label, f"q >= {HOLDER_INDEX}", equality, lambda_two(equality)),
        _row("S23 l^20 L^20", "2(1/2-1/p)", "p = 20", Fraction(20), cubic_exponent(20)),
        _row("1/2-1/(2q)-3/16 <= 1/2-1/q", "lambda_1,q", f"q >= {HOLDER_INDEX}", equality, None, holder),
    ]
    return rows


@dataclass(frozen=True)
class BallInflation:
    l: int
    n: int
    p: Fraction

    @property
    def d0(self):
        return self.l * (self.l + 3) // 2

    @property
    def p_min(self):
        """Smallest p for which the Lebesgue index reaches 8/3."""
        return Fraction(16 * self.n, 3 * self.l * (self.l + 3))

    @property
    def lebesgue_index(self):
        """l(l+3)p/(2n), the largest usable l^q index."""
        return self.l * (self.l + 3) * self.p / (2 * self.n)

    @property
    def q_window(self):
        """[8/3, 2p/n]: usable indices for both inflations (l = 1 is the binding case)."""
        return HOLDER_INDEX, 2 * self.p / self.n

    @property
    def admissible(self):
        return self.p >= self.p_min

    @property
    def window_nonempty(self):
        low, high = self.q_window
        return low <= high

    def as_dict(self):
        low, high = self.q_window
        return {
            "l": self.l,
            "n": self.n,
            "p": self.p,
            "d0": self.d0,
            "p_min": self.p_min,
            "q_max": self.lebesgue_index,
            "q_window": [low, high],
            "admissible": self.admissible,
            "window_nonempty": self.window_nonempty,
        }


def ball_inflation_constraints(l, n, p):
    if l not in (1, 2):
        raise ParameterError(f"l must be 1 or 2, got {l}")
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    p = as_fraction(p)
    if p <= 0:
        raise ParameterError(f"p must be positive, got {p}")
    return BallInflation(l, n, p)
