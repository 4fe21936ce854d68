"""
Exponent bookkeeping for J_{s,d,k}(N).

The lower bound is N^E with E = max(sd, max_j (2s−1)j + d − K_{j,k}).
Written in x = 2s every term is a line, so the regimes of s are the pieces
of the upper envelope of d+1 lines over x ∈ [2, ∞).
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from lab.exceptions import ParameterError, UnsupportedCaseError
from monomials.systems import kappa

DIAGONAL = "diagonal"
PROVED_CASES = ((2, 2), (2, 3))


class BoundExponent(NamedTuple):
    exponent: Fraction
    dominating: tuple


@dataclass(frozen=True)
class ExponentLine:
    """exponent(x) = slope·x + intercept; x = 2s for the counting bounds."""

    label: str
    slope: Fraction
    intercept: Fraction

    def at(self, x):
        return self.slope * x + self.intercept

    def crossing(self, other):
        """x where the two lines meet; None for parallel lines."""
        if other.slope == self.slope:
            return None
        return (self.intercept - other.intercept) / (other.slope - self.slope)


@dataclass(frozen=True)
class Regime:
    lower: Fraction
    upper: Fraction | None
    lower_closed: bool
    dominating: tuple

    def contains(self, x):
        above = x >= self.lower if self.lower_closed else x > self.lower
        return above and (self.upper is None or x <= self.upper)

    def as_dict(self):
        return {
            "lower": str(self.lower),
            "upper": None if self.upper is None else str(self.upper),
            "lower_closed": self.lower_closed,
            "dominating": list(self.dominating),
        }


def _validate(d, k):
    if d < 1:
        raise ParameterError(f"d must be positive, got {d}")
    if k < 2:
        raise ParameterError(f"k must be at least 2, got {k}")


def exponent_lines(d, k):
    _validate(d, k)
    lines = [ExponentLine(DIAGONAL, Fraction(d, 2), Fraction(0))]
    for j in range(1, d + 1):
        lines.append(ExponentLine(f"j={j}", Fraction(j), d - j - kappa(j, k)))
    return lines


def lower_bound_exponent(d, k, s):
    if s < 1:
        raise ParameterError(f"s must be positive, got {s}")
    lines = exponent_lines(d, k)
    values = [(line.at(2 * s), line.label) for line in lines]
    best = max(value for value, _ in values)
    return BoundExponent(best, tuple(label for value, label in values if value == best))


def upper_bound_exponent(d, k, s):
    """Exponent of the proved upper bound; ε-losses are not tracked."""
    _validate(d, k)
    if d != 1 and (d, k) not in PROVED_CASES:
        raise UnsupportedCaseError(f"upper bound for d={d}, k={k} is conjectural only")
    return lower_bound_exponent(d, k, s).exponent


def _leader(lines, x):
    # highest value at x, ties to the steeper line (it stays on top to the right)
    return max(lines, key=lambda line: (line.at(x), line.slope))


def regime_analysis(d, k, start=Fraction(2)):
    """Pieces of the upper envelope over 2s ∈ [start, ∞)."""
    lines = exponent_lines(d, k)
    regimes = []
    x = Fraction(start)
    closed = True
    current = _leader(lines, x)
    while True:
        crossings = [(current.crossing(other), other) for other in lines if other.slope > current.slope]
        crossings = [(point, other) for point, other in crossings if point > x]
        coinciding = tuple(
            line.label for line in lines
            if line.slope == current.slope and line.intercept == current.intercept
        )
        if not crossings:
            regimes.append(Regime(x, None, closed, coinciding))
            return regimes
        point = min(p for p, _ in crossings)
        regimes.append(Regime(x, point, closed, coinciding))
        current = _leader([o for p, o in crossings if p == point], point + 1)
        x, closed = point, False
