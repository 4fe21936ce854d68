"""
Parsell–Vinogradov systems.

A system of degree k in d variables collects every monomial t^α with
1 ≤ |α| ≤ k. Its moment map Φ sends t to the vector of these monomials,
so the system has n = C(d+k, k) − 1 coordinates.

Indices are ordered by total degree, ties by descending lexicographic order
of the exponent tuple. For d = 2 the coordinates therefore read
(r, s, r², rs, s², r³, r²s, rs², s³).
"""
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np
import sympy
from sympy import QQ, Poly

from lab.exceptions import ParameterError

from .exact import as_fraction
from .polymatrix import PolyMatrix

logger = logging.getLogger(__name__)

# numpy frequency tables are int64; leave headroom for s-fold sums
_INT64_HEADROOM = 2 ** 53


def canonical_key(alpha):
    return (sum(alpha), tuple(-a for a in alpha))


def multi_indices(d, top):
    """All α ∈ Z_{≥0}^d with 1 ≤ |α| ≤ top, in canonical order."""
    return tuple(sorted(
        (alpha for alpha in itertools.product(range(top + 1), repeat=d) if 1 <= sum(alpha) <= top),
        key=canonical_key,
    ))


def variable_symbols(d):
    if d == 1:
        return (sympy.Symbol("t"),)
    if d == 2:
        return sympy.symbols("r s")
    return sympy.symbols(f"t1:{d + 1}")


def monomial_label(alpha, gens):
    factors = [str(g) if a == 1 else f"{g}^{a}" for g, a in zip(gens, alpha) if a]
    return "*".join(factors) or "1"


def derivative_label(beta, gens):
    return "∂" + "".join(str(g) * b for g, b in zip(gens, beta))


@dataclass(frozen=True)
class MonomialSystem:
    d: int
    k: int
    indices: tuple
    linear: bool = False

    def __str__(self):
        return self.label

    @property
    def n(self):
        return len(self.indices)

    @property
    def label(self):
        if self.linear:
            return f"PV(d={self.d},k={self.k},linear)"
        return f"PV(d={self.d},k={self.k})"

    @cached_property
    def degrees(self):
        return tuple(sum(alpha) for alpha in self.indices)

    @cached_property
    def symbols(self):
        return variable_symbols(self.d)

    def describe(self):
        return {
            "system": self.label,
            "d": self.d,
            "k": self.k,
            "n": self.n,
            "indices": [list(alpha) for alpha in self.indices],
        }

    def points(self, N):
        """{1..N}^d in lexicographic order."""
        return itertools.product(range(1, N + 1), repeat=self.d)

    def frequency_matrix(self, N):
        """Φ(t) for every t ∈ {1..N}^d, one int64 row per point."""
        if N < 1:
            raise ParameterError(f"N must be positive, got {N}")
        if N ** self.k >= _INT64_HEADROOM:
            raise ParameterError(f"N^k = {N ** self.k} is too large for fixed-width frequencies")
        grid = np.array(list(self.points(N)), dtype=np.int64).reshape(-1, self.d)
        exponents = np.array(self.indices, dtype=np.int64)
        return np.prod(grid[:, None, :] ** exponents[None, :, :], axis=2)


@lru_cache(maxsize=None)
def _build_system(d, k, linear):
    system = MonomialSystem(d, k, multi_indices(d, k), linear)
    logger.debug("built %s with n=%d", system.label, system.n)
    return system


def enumerate_indices(d, k, *, linear=False):
    """The system of degree k in d variables; k = 1 only as the linear fixture."""
    if not isinstance(d, int) or d < 1:
        raise ParameterError(f"d must be a positive integer, got {d!r}")
    if linear:
        if k != 1:
            raise ParameterError(f"the linear fixture has k = 1, got k = {k!r}")
    elif not isinstance(k, int) or k < 2:
        raise ParameterError(f"k must be an integer ≥ 2, got {k!r}")
    return _build_system(d, k, linear)


def kappa(j, k):
    """K_{j,k} = (jk/(j+1))·C(k+j, j)."""
    if j < 1:
        raise ParameterError(f"j must be positive, got {j}")
    if k < 2:
        raise ParameterError(f"k must be at least 2, got {k}")
    return Fraction(j * k, j + 1) * math.comb(k + j, j)


def phi_eval(system, t):
    """Φ(t); integer input stays integer, rationals stay exact."""
    if len(t) != system.d:
        raise ParameterError(f"point has {len(t)} coordinates, {system.label} needs {system.d}")
    values = [v if isinstance(v, int) else as_fraction(v) for v in t]
    return tuple(
        math.prod(x ** a for x, a in zip(values, alpha))
        for alpha in system.indices
    )


def _monomial_derivative(alpha, beta, gens):
    if any(b > a for a, b in zip(alpha, beta)):
        return Poly(0, *gens, domain=QQ)
    coefficient = math.prod(math.perm(a, b) for a, b in zip(alpha, beta))
    exponent = tuple(a - b for a, b in zip(alpha, beta))
    return Poly.from_dict({exponent: coefficient}, *gens, domain=QQ)


def derivative_orders(system, l):
    return multi_indices(system.d, l)


def derivative_matrix(system, l):
    """
    M^{(l)}: n rows, one column ∂^β Φ per β with 1 ≤ |β| ≤ l, columns in
    canonical order (for d = 2, l = 2: ∂r, ∂s, ∂rr, ∂rs, ∂ss).
    """
    if l not in (1, 2):
        raise ParameterError(f"derivative order l must be 1 or 2, got {l!r}")
    if l >= system.k:
        raise ParameterError(f"derivative order l={l} must be below k={system.k}")
    gens = system.symbols
    columns = derivative_orders(system, l)
    entries = [
        [_monomial_derivative(alpha, beta, gens) for beta in columns]
        for alpha in system.indices
    ]
    return PolyMatrix(
        entries,
        gens,
        row_labels=[monomial_label(alpha, gens) for alpha in system.indices],
        column_labels=[derivative_label(beta, gens) for beta in columns],
    )
