"""
Second-order Taylor projections on the cubic surface.

For ξ = (a, b), P_ξ f is the Taylor polynomial of order two of f at ξ and
π₁₂ keeps its S₁ ⊕ S₂ part, written in the basis (r, s, r², rs, s²):

    r:  ∂r f − a∂rr f − b∂rs f        r²: ∂rr f / 2
    s:  ∂s f − a∂rs f − b∂ss f        rs: ∂rs f
                                       s²: ∂ss f / 2

with every derivative taken at ξ. On S₁ ⊕ S₂ the projection is the identity.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from lab.exceptions import ParameterError
from monomials.exact import as_fraction

from .subspaces import Subspace, exact_rank

logger = logging.getLogger(__name__)

QUADRATIC_BASIS = ("r", "s", "r^2", "r*s", "s^2")
CUBIC_BASIS = ("r^3", "r^2*s", "r*s^2", "s^3")
CUBIC_EXPONENTS = ((3, 0), (2, 1), (1, 2), (0, 3))
# ∂r, ∂s, ∂rr, ∂rs, ∂ss
DERIVATIVE_ORDERS = ((1, 0), (0, 1), (2, 0), (1, 1), (0, 2))


def _partial(alpha, beta, xi):
    """∂^β (r^α₁ s^α₂) at ξ."""
    if any(b > a for a, b in zip(alpha, beta)):
        return Fraction(0)
    coefficient = math.prod(math.perm(a, b) for a, b in zip(alpha, beta))
    return coefficient * math.prod(x ** (a - b) for x, a, b in zip(xi, alpha, beta))


def cubic_derivatives(xi, coefficients):
    """(∂r f, ∂s f, ∂rr f, ∂rs f, ∂ss f)(ξ) for f = Σ c_i·(i-th cubic monomial)."""
    return tuple(
        sum(c * _partial(alpha, beta, xi) for c, alpha in zip(coefficients, CUBIC_EXPONENTS))
        for beta in DERIVATIVE_ORDERS
    )


def _project_cubic(xi, coefficients):
    a, b = xi
    fr, fs, frr, frs, fss = cubic_derivatives(xi, coefficients)
    return (
        fr - a * frr - b * frs,
        fs - a * frs - b * fss,
        frr / 2,
        frs,
        fss / 2,
    )


def _check_xi(xi):
    if len(xi) != 2:
        raise ParameterError(f"ξ must have two coordinates, got {len(xi)}")
    return tuple(as_fraction(x) for x in xi)


def taylor_projection(xi, f):
    """
    π₁₂P_ξ f in the basis (r, s, r², rs, s²). f is a cubic monomial name
    ("r^3", "r^2*s", "r*s^2", "s^3"), a length-5 vector on S₁ ⊕ S₂, a length-4
    vector on S₃, or a length-9 vector on S₁ ⊕ S₂ ⊕ S₃.
    """
    xi = _check_xi(xi)
    if isinstance(f, str):
        if f not in CUBIC_BASIS:
            raise ParameterError(f"unknown cubic monomial {f!r}; expected one of {', '.join(CUBIC_BASIS)}")
        coefficients = [Fraction(int(name == f)) for name in CUBIC_BASIS]
        return _project_cubic(xi, coefficients)
    vector = [as_fraction(c) for c in f]
    if len(vector) == 5:
        return tuple(vector)
    if len(vector) == 4:
        return _project_cubic(xi, vector)
    if len(vector) == 9:
        cubic = _project_cubic(xi, vector[5:])
        return tuple(x + y for x, y in zip(vector[:5], cubic))
    raise ParameterError(f"expected 4, 5 or 9 coefficients, got {len(vector)}")


def generator_rows(xi):
    """Three vectors spanning π₁₂P_ξ(S₃) when a ≠ 0 and b ≠ 0."""
    a, b = _check_xi(xi)
    return [
        [a, 0, -1, 0, 0],
        [0, b, 0, 0, -1],
        [-b, -a, 0, 2, 0],
    ]


def quotient_coordinates(xi, v):
    """v modulo the generator span: (v₁ + a v₃ + b v₄/2, v₂ + b v₅ + a v₄/2)."""
    a, b = _check_xi(xi)
    v = [as_fraction(x) for x in v]
    return v[0] + a * v[2] + b * v[3] / 2, v[1] + b * v[4] + a * v[3] / 2


def on_single_vector_locus(xi, v):
    return quotient_coordinates(xi, v) == (0, 0)


def on_triple_locus(xi, vectors):
    return exact_rank([list(column) for column in zip(*(quotient_coordinates(xi, v) for v in vectors))]) < 2


@dataclass
class LemmaCheck:
    name: str
    expected_rank: int
    trials: int = 0
    full_rank: int = 0
    drops: list = field(default_factory=list)

    def record(self, rank, xi, vectors, on_locus):
        self.trials += 1
        if rank == self.expected_rank:
            self.full_rank += 1
            return
        logger.warning("%s: rank %d at ξ=%s (on locus: %s)", self.name, rank, xi, on_locus)
        self.drops.append({
            "xi": [str(x) for x in xi],
            "vectors": [[str(x) for x in v] for v in vectors],
            "rank": rank,
            "on_locus": on_locus,
        })

    def as_dict(self):
        return {
            "expected_rank": self.expected_rank,
            "trials": self.trials,
            "full_rank": self.full_rank,
            "drops": self.drops,
        }


def _random_xi(rng):
    """a, b nonzero rationals with small heights."""
    values = []
    for _ in range(2):
        numerator = int(rng.integers(1, 100)) * (1 if rng.random() < 0.5 else -1)
        values.append(Fraction(numerator, int(rng.integers(1, 100))))
    return tuple(values)


def _independent_rows(rng, count, width):
    return [list(v) for v in Subspace.random(width, count, rng).basis]


def appendix_lemma_checks(seed, trials):
    """Exact ranks of the projected cubic spaces at random ξ with a, b ≠ 0."""
    if trials < 1:
        raise ParameterError(f"trials must be positive, got {trials}")
    rng = np.random.default_rng(seed)
    generators = LemmaCheck("generators", 3)
    single = LemmaCheck("single_vector", 4)
    triple = LemmaCheck("three_vectors", 5)
    pair = LemmaCheck("cubic_pair", 2)

    for _ in range(trials):
        xi = _random_xi(rng)
        gens = generator_rows(xi)

        # the images must fill the three-dimensional generator span exactly
        images = [taylor_projection(xi, name) for name in CUBIC_BASIS]
        span_rank = exact_rank(images + gens)
        rank = exact_rank(images) if span_rank == 3 else span_rank
        generators.record(rank, xi, images, 0 in xi)

        (v,) = _independent_rows(rng, 1, 5)
        single.record(exact_rank(gens + [v]), xi, [v], on_single_vector_locus(xi, v))

        vectors = _independent_rows(rng, 3, 5)
        triple.record(exact_rank(gens + vectors), xi, vectors, on_triple_locus(xi, vectors))

        f1, f2 = _independent_rows(rng, 2, 4)
        projected = [taylor_projection(xi, f1), taylor_projection(xi, f2)]
        derivative_rank = exact_rank([cubic_derivatives(xi, f1), cubic_derivatives(xi, f2)])
        pair.record(exact_rank(projected), xi, [f1, f2], derivative_rank < 2)

    return {check.name: check for check in (generators, single, triple, pair)}
