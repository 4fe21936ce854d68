"""
The Brascamp–Lieb dimension condition for the spaces W^{(l)}(r_j, s_j).

For M points and a subspace V ⊂ Q^9 the condition reads

    dim V ≤ (n / (d₀·M)) · Σ_j rank M_V^{(l)}(r_j, s_j)

with d₀ = 2 for l = 1 and d₀ = 5 for l = 2.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from lab.exceptions import ParameterError
from monomials.exact import as_fraction
from monomials.systems import derivative_matrix, enumerate_indices

from .subspaces import Subspace, exact_rank

logger = logging.getLogger(__name__)

MIN_POINTS = 5
RANK_SHARE = 1 - Fraction(1, 1000)


@dataclass(frozen=True)
class PointConfig:
    points: tuple
    square_side: Fraction | None = None

    def __post_init__(self):
        points = tuple(tuple(as_fraction(x) for x in point) for point in self.points)
        for point in points:
            if len(point) != 2 or not all(0 <= x <= 1 for x in point):
                raise ParameterError(f"point {[str(x) for x in point]} is not in [0,1]²")
        object.__setattr__(self, "points", points)
        if self.square_side is not None:
            object.__setattr__(self, "square_side", as_fraction(self.square_side))

    def __len__(self):
        return len(self.points)

    @classmethod
    def from_squares(cls, squares, K):
        """Centres of the squares (i, j) ∈ Col_K, side 1/K."""
        return cls([(Fraction(2 * i + 1, 2 * K), Fraction(2 * j + 1, 2 * K)) for i, j in squares], Fraction(1, K))

    @classmethod
    def random(cls, count, rng, denominator=97):
        return cls([
            (Fraction(int(x), denominator), Fraction(int(y), denominator))
            for x, y in rng.integers(0, denominator + 1, size=(count, 2))
        ])

    @classmethod
    def from_json(cls, data):
        if isinstance(data, list):
            data = {"points": data}
        return cls([tuple(point) for point in data["points"]], data.get("square_side"))

    def as_dict(self):
        return {
            "points": [[str(x) for x in point] for point in self.points],
            "square_side": None if self.square_side is None else str(self.square_side),
        }


@dataclass(frozen=True)
class BLOutcome:
    dim: int
    rank_sum: int
    bound: Fraction
    subspace: Subspace

    @property
    def holds(self):
        return self.dim <= self.bound

    @property
    def tight(self):
        return self.dim == self.bound

    def as_dict(self):
        return {
            "dim": self.dim,
            "rank_sum": self.rank_sum,
            "bound": self.bound,
            "subspace": self.subspace.as_dict(),
        }


def _left_product(basis, values):
    """V^T·M(point) for a frame V and an evaluated matrix M(point)."""
    columns = list(zip(*values))
    return [[sum(a * b for a, b in zip(vector, column)) for column in columns] for vector in basis]


def bl_condition_check(points, l, subspace_samples, seed, extra_subspaces=(), d=2, k=3):
    """Sample subspaces of every dimension in turn and report the violations."""
    if not isinstance(points, PointConfig):
        points = PointConfig(points)
    if len(points) < MIN_POINTS:
        raise ParameterError(f"the condition is checked for at least {MIN_POINTS} points, got {len(points)}")
    system = enumerate_indices(d, k)
    matrix = derivative_matrix(system, l)
    n, d0, M = system.n, matrix.cols, len(points)
    evaluated = [
        [[as_fraction(x) for x in row] for row in matrix.evaluate(point).tolist()]
        for point in points.points
    ]

    def outcome(subspace):
        ranks = [exact_rank(_left_product(subspace.basis, values)) for values in evaluated]
        return BLOutcome(subspace.dim, sum(ranks), Fraction(n, d0 * M) * sum(ranks), subspace)

    subspaces = list(extra_subspaces)
    for sample in range(subspace_samples):
        rng = np.random.default_rng((seed, sample))
        subspaces.append(Subspace.random(n, sample % n + 1, rng))

    outcomes = [outcome(subspace) for subspace in subspaces]
    violations = [o for o in outcomes if not o.holds]
    if violations:
        logger.warning("%d of %d subspaces violate the dimension condition", len(violations), len(outcomes))
    return {
        "l": l,
        "d0": d0,
        "points": M,
        "checked": len(outcomes),
        "tight": sum(o.tight for o in outcomes),
        "violations": [o.as_dict() for o in violations],
    }


def bl_rank_implication(m):
    """(9/5)(1 − 1/1000)(⌊5m/9⌋ + 1) ≥ m: enough full-rank points imply the condition."""
    if not 1 <= m <= 9:
        raise ParameterError(f"dim V must lie in 1..9, got {m}")
    return Fraction(9, 5) * RANK_SHARE * (math.floor(Fraction(5 * m, 9)) + 1) >= m
