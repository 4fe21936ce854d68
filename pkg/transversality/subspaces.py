"""
Exact rational subspaces of Q^n.

Linear algebra runs on sympy DomainMatrix over QQ; vectors are tuples of
Fractions.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from lab.exceptions import ParameterError
from monomials.exact import as_fraction

logger = logging.getLogger(__name__)

DEFAULT_BOX = 9
MAX_DRAWS = 1000


def domain_matrix(rows):
    """A non-empty list of rational rows as a DomainMatrix over QQ."""
    fractions = [[as_fraction(x) for x in row] for row in rows]
    return DomainMatrix.from_list([[(x.numerator, x.denominator) for x in row] for row in fractions], QQ)


def exact_rank(rows):
    if not rows:
        return 0
    return domain_matrix(rows).rank()


def _to_fraction(element):
    return Fraction(int(element.numerator), int(element.denominator))


def nullspace(rows, n):
    """Basis of {x ∈ Q^n : row·x = 0 for every row}."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    kernel = domain_matrix(rows).nullspace()
    return [tuple(_to_fraction(x) for x in row) for row in kernel.to_list()]


@dataclass(frozen=True)
class Subspace:
    n: int
    basis: tuple

    def __post_init__(self):
        basis = tuple(tuple(as_fraction(x) for x in vector) for vector in self.basis)
        if not 1 <= len(basis) <= self.n:
            raise ParameterError(f"subspace dimension must lie in 1..{self.n}, got {len(basis)}")
        if any(len(vector) != self.n for vector in basis):
            raise ParameterError(f"basis vectors must have {self.n} coordinates")
        if exact_rank(basis) != len(basis):
            raise ParameterError("basis vectors are linearly dependent")
        object.__setattr__(self, "basis", basis)

    @property
    def dim(self):
        return len(self.basis)

    @classmethod
    def full(cls, n):
        return cls(n, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def coordinate(cls, n, indices):
        """span(e_i : i ∈ indices), indices counted from 0."""
        return cls(n, [[int(i == j) for j in range(n)] for i in indices])

    @classmethod
    def random(cls, n, dim, rng, box=DEFAULT_BOX):
        """Integer entries uniform in [−box, box], redrawn until independent."""
        if not 1 <= dim <= n:
            raise ParameterError(f"subspace dimension must lie in 1..{n}, got {dim}")
        for _ in range(MAX_DRAWS):
            rows = rng.integers(-box, box + 1, size=(dim, n)).tolist()
            if exact_rank(rows) == dim:
                return cls(n, rows)
        raise ParameterError(f"no independent {dim}-frame in {MAX_DRAWS} draws from [−{box}, {box}]")

    def recombine(self, matrix):
        """The same subspace with basis A·basis for an invertible dim × dim matrix A."""
        if exact_rank(matrix) != self.dim or any(len(row) != self.dim for row in matrix):
            raise ParameterError("recombination matrix must be invertible")
        weights = [[as_fraction(x) for x in row] for row in matrix]
        return Subspace(self.n, [
            [sum(w * vector[j] for w, vector in zip(row, self.basis)) for j in range(self.n)]
            for row in weights
        ])

    def as_dict(self):
        return {"n": self.n, "dim": self.dim, "basis": [[str(x) for x in v] for v in self.basis]}

    @classmethod
    def from_dict(cls, data):
        return cls(int(data["n"]), data["basis"])


def orthogonal_complement(vectors, n):
    """The complement of span(vectors) in Q^n under the standard inner product."""
    basis = nullspace([list(v) for v in vectors], n)
    if not basis:
        raise ParameterError("the vectors span Q^n; the complement is trivial")
    return Subspace(n, basis)
