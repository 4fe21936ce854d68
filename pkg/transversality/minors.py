"""
Non-vanishing minors of restricted derivative matrices.

For V ⊂ Q^n with basis v_1..v_m, M_V = (v_1 … v_m)^T · M^{(l)} is an m × C(d+l,l)−1
matrix of polynomials. A minor of M_V does not vanish identically iff its
determinant is a nonzero polynomial; a nonzero value at any rational point
proves that, so random points accept and the symbolic determinant decides.
"""
import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

import numpy as np
from sympy import Poly

from lab.conf import lab_setting
from lab.exceptions import ParameterError
from monomials.exact import as_fraction
from monomials.polymatrix import evaluate_poly, poly_to_json
from monomials.systems import derivative_matrix, enumerate_indices

from .subspaces import DEFAULT_BOX, Subspace, exact_rank

logger = logging.getLogger(__name__)

POINT_DENOMINATOR = 1009


class MinorOrder(NamedTuple):
    order: int
    feasible: bool


def required_minor_order(dimV, d, k, l):
    """⌊dimV·(C(d+l,l)−1)/(C(d+k,k)−1)⌋ + 1, flagged infeasible above min(dimV, columns)."""
    n = math.comb(d + k, k) - 1
    columns = math.comb(d + l, l) - 1
    if not 1 <= dimV <= n:
        raise ParameterError(f"dim V must lie in 1..{n}, got {dimV}")
    order = dimV * columns // n + 1
    return MinorOrder(order, order <= min(dimV, columns))


def restrict_matrix(matrix, subspace):
    if subspace.n != matrix.rows:
        raise ParameterError(f"subspace lives in Q^{subspace.n}, matrix has {matrix.rows} rows")
    return matrix.left_multiply(subspace.basis, row_labels=[f"v{i + 1}" for i in range(subspace.dim)])


@dataclass(frozen=True)
class MinorCertificate:
    rows: tuple
    cols: tuple
    determinant: Poly
    witness: tuple
    value: Fraction

    @property
    def order(self):
        return len(self.rows)

    def verify(self):
        """Re-evaluate the stored determinant at the witness."""
        recomputed = as_fraction(evaluate_poly(self.determinant, self.determinant.gens, self.witness))
        return len(self.rows) == len(self.cols) and recomputed == self.value != 0

    def to_json(self):
        return {
            "rows": list(self.rows),
            "cols": list(self.cols),
            "order": self.order,
            "gens": [str(g) for g in self.determinant.gens],
            "determinant": poly_to_json(self.determinant),
            "witness": [str(x) for x in self.witness],
            "value": str(self.value),
        }


def _random_point(rng, dimension):
    return tuple(Fraction(int(x), POINT_DENOMINATOR) for x in rng.integers(1, POINT_DENOMINATOR, size=dimension))


def _grid_witness(poly):
    """A point of {0..D}^g where a nonzero polynomial of total degree D does not vanish."""
    D = poly.total_degree()
    for point in itertools.product(range(D + 1), repeat=len(poly.gens)):
        value = as_fraction(evaluate_poly(poly, poly.gens, point))
        if value != 0:
            return tuple(Fraction(x) for x in point), value
    raise ParameterError("zero polynomial has no witness")


def _index_pairs(matrix, order):
    for cols in itertools.combinations(range(matrix.cols), order):
        for rows in itertools.combinations(range(matrix.rows), order):
            yield rows, cols


def find_nonvanishing_minor(matrix, order, seed=None, attempts=2):
    """
    Search minors columns-first in lexicographic order. Returns a MinorCertificate,
    or None when every minor of this order is the zero polynomial.
    """
    if not 1 <= order <= min(matrix.rows, matrix.cols):
        raise ParameterError(f"order {order} is not available in a {matrix.rows}x{matrix.cols} matrix")
    rng = np.random.default_rng(seed)
    points = [_random_point(rng, len(matrix.gens)) for _ in range(attempts)]
    evaluated = [matrix.evaluate(point) for point in points]

    for rows, cols in _index_pairs(matrix, order):
        for point, values in zip(points, evaluated):
            value = values.extract(list(rows), list(cols)).det()
            if value != 0:
                determinant = matrix.submatrix(rows, cols).determinant()
                return MinorCertificate(rows, cols, determinant, point, as_fraction(value))

    logger.debug("no random acceptance for order %d; expanding determinants", order)
    for rows, cols in _index_pairs(matrix, order):
        determinant = matrix.submatrix(rows, cols).determinant()
        if not determinant.is_zero:
            witness, value = _grid_witness(determinant)
            return MinorCertificate(rows, cols, determinant, witness, value)
    return None


@dataclass
class DimensionReport:
    dim: int
    order: int
    feasible: bool
    trials: int = 0
    certified: int = 0
    failures: list = field(default_factory=list)
    certificates: list = field(default_factory=list)

    def as_dict(self):
        return {
            "dim": self.dim,
            "order": self.order,
            "feasible": self.feasible,
            "skipped": not self.feasible,
            "trials": self.trials,
            "certified": self.certified,
            "failures": self.failures,
            "certificates": self.certificates,
        }


def _conjecture_trial(matrix, order, seed, l, dim, trial, box):
    rng = np.random.default_rng((seed, l, dim, trial))
    subspace = Subspace.random(matrix.rows, dim, rng, box)
    certificate = find_nonvanishing_minor(restrict_matrix(matrix, subspace), order, seed=rng)
    return subspace, certificate


def verify_conjecture_samples(l, dims, trials, seed, d=2, k=3, *, box=DEFAULT_BOX, workers=None):
    """Certify non-vanishing minors of the required order on random subspaces."""
    if seed < 0 or trials < 1:
        raise ParameterError("seed must be non-negative and trials positive")
    system = enumerate_indices(d, k)
    matrix = derivative_matrix(system, l)
    workers = lab_setting("THREADS", workers)
    reports = []
    for dim in dims:
        order, feasible = required_minor_order(dim, d, k, l)
        report = DimensionReport(dim, order, feasible)
        reports.append(report)
        if not feasible:
            logger.warning("dim V=%d needs order %d in %s with l=%d; skipped", dim, order, system.label, l)
            continue
        with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
            outcomes = pool.map(
                lambda trial: _conjecture_trial(matrix, order, seed, l, dim, trial, box),
                range(trials),
            )
            for subspace, certificate in outcomes:
                report.trials += 1
                if certificate is not None and certificate.verify():
                    report.certified += 1
                    report.certificates.append(certificate.to_json())
                else:
                    logger.warning("no order-%d minor on subspace %s", order, subspace.basis)
                    report.failures.append(subspace.as_dict())
        logger.info("dim V=%d: %d/%d certified", dim, report.certified, report.trials)
    return reports


def rank_preserved(matrix, subspace, recombination, points):
    """Exact ranks of M_V and M_{AV} agree at every point."""
    original = restrict_matrix(matrix, subspace)
    mixed = restrict_matrix(matrix, subspace.recombine(recombination))
    return all(
        exact_rank(original.evaluate(p).tolist()) == exact_rank(mixed.evaluate(p).tolist())
        for p in points
    )
