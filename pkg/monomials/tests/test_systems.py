import math
import random
from fractions import Fraction

import sympy
from django.test import SimpleTestCase

from lab.exceptions import ParameterError
from monomials.systems import (
    derivative_matrix,
    enumerate_indices,
    kappa,
    multi_indices,
    phi_eval,
)


def _independent_count(d, k):
    # monomials of exact degree m in d variables: C(m+d-1, d-1)
    return sum(math.comb(m + d - 1, d - 1) for m in range(1, k + 1))


class EnumerateIndicesTests(SimpleTestCase):
    def test_one_variable_degree_two(self):
        system = enumerate_indices(1, 2)
        self.assertEqual(system.indices, ((1,), (2,)))
        self.assertEqual(system.n, 2)

    def test_two_variables_degree_two(self):
        system = enumerate_indices(2, 2)
        self.assertEqual(system.indices, ((1, 0), (0, 1), (2, 0), (1, 1), (0, 2)))
        self.assertEqual(system.n, 5)

    def test_two_variables_degree_three_has_nine_coordinates(self):
        system = enumerate_indices(2, 3)
        self.assertEqual(system.n, 9)
        self.assertEqual(system.indices[5:], ((3, 0), (2, 1), (1, 2), (0, 3)))
        self.assertEqual(str(system), "PV(d=2,k=3)")

    def test_counts_match_stars_and_bars(self):
        for d in range(1, 5):
            for k in range(2, 6):
                system = enumerate_indices(d, k)
                self.assertEqual(system.n, math.comb(d + k, k) - 1)
                self.assertEqual(system.n, _independent_count(d, k))

    def test_order_is_by_degree_without_duplicates(self):
        system = enumerate_indices(3, 4)
        degrees = [sum(alpha) for alpha in system.indices]
        self.assertEqual(degrees, sorted(degrees))
        self.assertEqual(len(set(system.indices)), system.n)

    def test_rejects_bad_parameters(self):
        with self.assertRaises(ParameterError):
            enumerate_indices(0, 2)
        with self.assertRaises(ParameterError):
            enumerate_indices(2, 1)

    def test_linear_fixture(self):
        system = enumerate_indices(1, 1, linear=True)
        self.assertEqual(system.indices, ((1,),))
        self.assertTrue(system.linear)
        with self.assertRaises(ParameterError):
            enumerate_indices(1, 2, linear=True)

    def test_frequency_matrix(self):
        system = enumerate_indices(1, 2)
        self.assertEqual(system.frequency_matrix(2).tolist(), [[1, 1], [2, 4]])
        self.assertEqual(enumerate_indices(2, 3).frequency_matrix(3).shape, (9, 9))


class KappaTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(kappa(1, 2), 3)
        self.assertEqual(kappa(2, 3), 20)
        self.assertEqual(kappa(3, 2), 15)

    def test_first_and_third_closed_forms(self):
        for k in range(2, 7):
            self.assertEqual(kappa(1, k), Fraction(k * (k + 1), 2))
            self.assertEqual(kappa(3, k), Fraction(k * (k + 1) * (k + 2) * (k + 3), 8))

    def test_positive_integer_in_working_range(self):
        for j in range(1, 5):
            for k in range(2, 7):
                value = kappa(j, k)
                self.assertEqual(value.denominator, 1)
                self.assertGreater(value, 0)

    def test_rejects_bad_parameters(self):
        with self.assertRaises(ParameterError):
            kappa(0, 3)
        with self.assertRaises(ParameterError):
            kappa(1, 1)


class PhiEvalTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(phi_eval(enumerate_indices(2, 3), (1, 2)), (1, 2, 1, 2, 4, 1, 2, 4, 8))
        self.assertEqual(phi_eval(enumerate_indices(2, 3), (0, 0)), (0,) * 9)
        self.assertEqual(phi_eval(enumerate_indices(1, 2), (3,)), (3, 9))

    def test_integer_input_is_integer_output(self):
        values = phi_eval(enumerate_indices(2, 3), (5, -7))
        self.assertTrue(all(isinstance(v, int) for v in values))

    def test_matches_direct_big_integer_powers(self):
        rng = random.Random(11)
        system = enumerate_indices(3, 4)
        for _ in range(20):
            t = tuple(rng.randint(-10 ** 6, 10 ** 6) for _ in range(3))
            expected = tuple(pow(t[0], a) * pow(t[1], b) * pow(t[2], c) for a, b, c in system.indices)
            self.assertEqual(phi_eval(system, t), expected)

    def test_rational_input_is_exact(self):
        values = phi_eval(enumerate_indices(1, 2), (Fraction(1, 3),))
        self.assertEqual(values, (Fraction(1, 3), Fraction(1, 9)))

    def test_length_mismatch(self):
        with self.assertRaises(ParameterError):
            phi_eval(enumerate_indices(2, 2), (1,))


class DerivativeMatrixTests(SimpleTestCase):
    def setUp(self):
        self.r, self.s = sympy.symbols("r s")

    def _column(self, matrix, j):
        return [p.as_expr() for p in matrix.column(j)]

    def test_second_order_rr_column(self):
        matrix = derivative_matrix(enumerate_indices(2, 3), 2)
        self.assertEqual(matrix.shape, (9, 5))
        self.assertEqual(matrix.column_labels[2], "∂rr")
        self.assertEqual(self._column(matrix, 2), [0, 0, 2, 0, 0, 6 * self.r, 2 * self.s, 0, 0])

    def test_first_order_r_column(self):
        matrix = derivative_matrix(enumerate_indices(2, 3), 1)
        self.assertEqual(matrix.shape, (9, 2))
        r, s = self.r, self.s
        self.assertEqual(
            self._column(matrix, 0),
            [1, 0, 2 * r, s, 0, 3 * r ** 2, 2 * r * s, s ** 2, 0],
        )

    def test_quadratic_surface_normals(self):
        matrix = derivative_matrix(enumerate_indices(2, 2), 1)
        r, s = self.r, self.s
        self.assertEqual(self._column(matrix, 0), [1, 0, 2 * r, s, 0])
        self.assertEqual(self._column(matrix, 1), [0, 1, 0, r, 2 * s])

    def test_entries_have_degree_at_most_k(self):
        self.assertLessEqual(derivative_matrix(enumerate_indices(2, 3), 2).degree, 3)

    def test_rejects_bad_orders(self):
        with self.assertRaises(ParameterError):
            derivative_matrix(enumerate_indices(2, 3), 3)
        with self.assertRaises(ParameterError):
            derivative_matrix(enumerate_indices(2, 2), 2)

    def test_columns_match_interpolated_derivatives(self):
        # Recover derivatives of Φ along lines t + h·e by exact interpolation.
        system = enumerate_indices(2, 3)
        matrix = derivative_matrix(system, 2)
        h = sympy.Symbol("h")
        rng = random.Random(5)

        def line_polys(t, direction):
            nodes = [Fraction(i) for i in range(system.k + 2)]
            samples = [
                phi_eval(system, tuple(a + x * e for a, e in zip(t, direction)))
                for x in nodes
            ]
            return [
                sympy.Poly(
                    sympy.interpolate(
                        [(sympy.Rational(x.numerator, x.denominator), sympy.Rational(v[i].numerator, v[i].denominator))
                         for x, v in zip(nodes, samples)],
                        h,
                    ),
                    h,
                )
                for i in range(system.n)
            ]

        for _ in range(3):
            t = (Fraction(rng.randint(-9, 9), rng.randint(1, 9)), Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
            at_t = matrix.evaluate(t)
            along_r = line_polys(t, (1, 0))
            along_s = line_polys(t, (0, 1))
            along_diag = line_polys(t, (1, 1))
            for i in range(system.n):
                d_r = along_r[i].coeff_monomial(h)
                d_s = along_s[i].coeff_monomial(h)
                d_rr = 2 * along_r[i].coeff_monomial(h ** 2)
                d_ss = 2 * along_s[i].coeff_monomial(h ** 2)
                d_rs = (2 * along_diag[i].coeff_monomial(h ** 2) - d_rr - d_ss) / 2
                self.assertEqual(list(at_t.row(i)), [d_r, d_s, d_rr, d_rs, d_ss])


class MultiIndexTests(SimpleTestCase):
    def test_derivative_orders_for_two_variables(self):
        self.assertEqual(multi_indices(2, 2), ((1, 0), (0, 1), (2, 0), (1, 1), (0, 2)))
        self.assertEqual(multi_indices(2, 1), ((1, 0), (0, 1)))
