"""
Heuristic ν-transversality of squares in Col_K.

m ≥ 5 squares are ν-transverse when, for every polynomial Q of degree ≤ D with
unit ℓ¹ coefficient norm, at least [m/5] + 1 of them keep |Q| ≥ ν. The probe
replaces "every Q" by a sampled family and each infimum by a minimum over a
sub-grid of the closed square, so the estimate can only overshoot the true ν.
"""
import logging
from dataclasses import dataclass

import numpy as np

from lab.exceptions import ParameterError

logger = logging.getLogger(__name__)

HEURISTIC_LABEL = "heuristic estimate — not a certificate"
MIN_SQUARES = 5
EXPENSIVE_DEGREE = 2


def full_collection(K):
    return [(i, j) for i in range(K) for j in range(K)]


def monomial_exponents(degree):
    return [(a, total - a) for total in range(degree + 1) for a in range(total, -1, -1)]


def _monomial_name(a, b):
    factors = [name if e == 1 else f"{name}^{e}" for name, e in (("r", a), ("s", b)) if e]
    return "*".join(factors) or "1"


def _basis_values(exponents, r, s):
    return np.stack([r ** a * s ** b for a, b in exponents])


def _validate(squares, K):
    if K < 1:
        raise ParameterError(f"K must be positive, got {K}")
    squares = [tuple(int(x) for x in square) for square in squares]
    if len(squares) < MIN_SQUARES:
        raise ParameterError(f"transversality needs at least {MIN_SQUARES} squares, got {len(squares)}")
    if len(set(squares)) != len(squares):
        raise ParameterError("squares must be distinct")
    for i, j in squares:
        if not (0 <= i < K and 0 <= j < K):
            raise ParameterError(f"square ({i}, {j}) is not in Col_{K}")
    return squares


def _candidates(exponents, centres, K, poly_samples, seed):
    """Random, interpolating and axis-line polynomials, in that order."""
    width = len(exponents)
    kinds, rows = [], []

    random_stream = np.random.default_rng((seed, 0))
    for _ in range(poly_samples):
        kinds.append("random")
        rows.append(random_stream.normal(size=width))

    # Q vanishing at up to width − 1 square centres
    interpolation_stream = np.random.default_rng((seed, 1))
    nodes = min(len(centres), width - 1)
    for _ in range(poly_samples):
        chosen = interpolation_stream.choice(len(centres), size=nodes, replace=False)
        system = _basis_values(exponents, centres[chosen, 0], centres[chosen, 1]).T
        kinds.append("interpolant")
        rows.append(np.linalg.svd(system)[2][-1])

    constant, r_index, s_index = exponents.index((0, 0)), exponents.index((1, 0)), exponents.index((0, 1))
    for index, variable in ((r_index, "r"), (s_index, "s")):
        for c in range(K + 1):
            line = np.zeros(width)
            line[index], line[constant] = 1.0, -c / K
            kinds.append(f"{variable}={c}/{K}")
            rows.append(line)

    coefficients = np.array(rows)
    return kinds, coefficients / np.abs(coefficients).sum(axis=1, keepdims=True)


@dataclass(frozen=True)
class SquareProbeResult:
    K: int
    degree_bound: int
    squares: list
    estimate: float
    worst_kind: str
    worst_coefficients: dict
    flagged: list
    candidates: int
    point_samples: int
    seed: int

    @property
    def threshold_count(self):
        return len(self.squares) // 5 + 1

    def as_dict(self):
        return {
            "label": HEURISTIC_LABEL,
            "K": self.K,
            "degree_bound": self.degree_bound,
            "m": len(self.squares),
            "t": self.threshold_count,
            "nu_estimate": self.estimate,
            "worst_polynomial": {"kind": self.worst_kind, "coefficients": self.worst_coefficients},
            "flagged": [list(square) for square in self.flagged],
            "candidates": self.candidates,
            "point_samples": self.point_samples,
            "seed": self.seed,
        }


def square_transversality_probe(squares, K, degree_bound=2, poly_samples=200, point_samples=8, seed=7):
    squares = _validate(squares, K)
    if degree_bound < 1:
        raise ParameterError(f"degree bound must be at least 1, got {degree_bound}")
    if point_samples < 2:
        raise ParameterError(f"need at least 2 sub-grid points per side, got {point_samples}")
    if degree_bound > EXPENSIVE_DEGREE:
        logger.warning("degree bound %d: %d monomials per candidate", degree_bound, (degree_bound + 1) * (degree_bound + 2) // 2)

    exponents = monomial_exponents(degree_bound)
    corners = np.array(squares, dtype=float)
    centres = (corners + 0.5) / K
    offsets = np.linspace(0.0, 1.0, point_samples)
    u, v = np.meshgrid(offsets, offsets, indexing="ij")
    r = (corners[:, 0, None] + u.ravel()[None, :]) / K
    s = (corners[:, 1, None] + v.ravel()[None, :]) / K
    basis = _basis_values(exponents, r.ravel(), s.ravel())

    kinds, coefficients = _candidates(exponents, centres, K, poly_samples, seed)
    values = np.abs(coefficients @ basis).reshape(len(kinds), len(squares), -1)
    infima = values.min(axis=2)
    t = len(squares) // 5 + 1
    per_candidate = np.sort(infima, axis=1)[:, t - 1]
    worst = int(np.argmin(per_candidate))
    flagged = [squares[i] for i in np.argsort(infima[worst], kind="stable")[:t]]
    logger.info("ν estimate %.3g from %d candidates (worst: %s)", per_candidate[worst], len(kinds), kinds[worst])

    return SquareProbeResult(
        K=K,
        degree_bound=degree_bound,
        squares=squares,
        estimate=float(per_candidate[worst]),
        worst_kind=kinds[worst],
        worst_coefficients={
            _monomial_name(a, b): float(c) for (a, b), c in zip(exponents, coefficients[worst]) if c != 0
        },
        flagged=flagged,
        candidates=len(kinds),
        point_samples=point_samples,
        seed=seed,
    )
