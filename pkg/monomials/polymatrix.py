"""
Matrices of polynomials with exact rational coefficients.

Entries are sympy `Poly` objects over QQ sharing one generator tuple
(``(t,)``, ``(r, s)`` or ``(t1, ..., td)``). Determinants are expanded
fraction-free in the polynomial ring; evaluations are exact.
"""
from functools import reduce

import sympy
from sympy import QQ, Poly
from sympy.polys.matrices import DomainMatrix

from lab.exceptions import ParameterError

from .exact import as_fraction, as_rational


def zero_poly(gens):
    return Poly(0, *gens, domain=QQ)


def poly_to_json(poly):
    """Sparse exponent form: {"2,1": "3/2", ...}; the zero polynomial is {}."""
    return {
        ",".join(str(e) for e in monom): str(as_fraction(coeff))
        for monom, coeff in poly.terms()
        if coeff != 0
    }


def poly_from_json(data, gens):
    rep = {
        tuple(int(e) for e in key.split(",")): as_rational(value)
        for key, value in data.items()
    }
    if not rep:
        return zero_poly(gens)
    return Poly.from_dict(rep, *gens, domain=QQ)


def evaluate_poly(poly, gens, point):
    if len(point) != len(gens):
        raise ParameterError(f"point has {len(point)} coordinates, expected {len(gens)}")
    substitution = {gen: as_rational(value) for gen, value in zip(gens, point)}
    return sympy.Rational(poly.eval(substitution))


class PolyMatrix:
    """A rows × cols matrix of polynomials over QQ."""

    def __init__(self, entries, gens, *, row_labels=None, column_labels=None):
        self.gens = tuple(gens)
        self._entries = [list(row) for row in entries]
        self.rows = len(self._entries)
        self.cols = len(self._entries[0]) if self._entries else 0
        if any(len(row) != self.cols for row in self._entries):
            raise ParameterError("polynomial matrix rows have different lengths")
        self.row_labels = tuple(row_labels) if row_labels else tuple(f"row{i + 1}" for i in range(self.rows))
        self.column_labels = (
            tuple(column_labels) if column_labels else tuple(f"col{j + 1}" for j in range(self.cols))
        )

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols}, gens={self.gens})"

    def __getitem__(self, index):
        i, j = index
        return self._entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (
            self.gens == other.gens
            and self.shape == other.shape
            and all(a == b for a, b in zip(self.flat(), other.flat()))
        )

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def degree(self):
        return max((p.total_degree() for p in self.flat() if not p.is_zero), default=0)

    def flat(self):
        return [p for row in self._entries for p in row]

    def row(self, i):
        return list(self._entries[i])

    def column(self, j):
        return [row[j] for row in self._entries]

    # ── Exact evaluation ─────────────────────────────────────────────────

    def evaluate(self, point):
        """The rational matrix M(point) as a sympy Matrix."""
        values = [evaluate_poly(p, self.gens, point) for p in self.flat()]
        return sympy.Matrix(self.rows, self.cols, values)

    def rank_at(self, point):
        return self.evaluate(point).rank()

    # ── Structure ────────────────────────────────────────────────────────

    def submatrix(self, rows, cols):
        return PolyMatrix(
            [[self._entries[i][j] for j in cols] for i in rows],
            self.gens,
            row_labels=[self.row_labels[i] for i in rows],
            column_labels=[self.column_labels[j] for j in cols],
        )

    def left_multiply(self, matrix, *, row_labels=None):
        """A·M for a rational matrix A given as a list of rows."""
        if any(len(row) != self.rows for row in matrix):
            raise ParameterError(f"left factor must have {self.rows} columns")
        zero = zero_poly(self.gens)
        product = []
        for coefficients in matrix:
            weights = [as_rational(c) for c in coefficients]
            product.append([
                reduce(
                    lambda acc, term: acc + term,
                    (self._entries[m][j].mul_ground(w) for m, w in enumerate(weights) if w != 0),
                    zero,
                )
                for j in range(self.cols)
            ])
        return PolyMatrix(product, self.gens, row_labels=row_labels, column_labels=self.column_labels)

    def determinant(self):
        """Fraction-free determinant in QQ[gens]."""
        if self.rows != self.cols:
            raise ParameterError(f"determinant of a non-square {self.rows}x{self.cols} matrix")
        ring = QQ.poly_ring(*self.gens)
        elements = [[ring.from_sympy(p.as_expr()) for p in row] for row in self._entries]
        det = DomainMatrix(elements, self.shape, ring).det()
        return Poly(ring.to_sympy(det), *self.gens, domain=QQ)

    def to_json(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "gens": [str(g) for g in self.gens],
            "row_labels": list(self.row_labels),
            "column_labels": list(self.column_labels),
            "entries": [[poly_to_json(p) for p in row] for row in self._entries],
        }
