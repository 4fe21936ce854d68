from fractions import Fraction

from django.test import SimpleTestCase

from lab.exceptions import ParameterError
from numerology.scales import ScaleParams
from numerology.tables import (
    ball_inflation_constraints,
    critical_exponent_table,
    holder_gap,
    lambda_one,
    lambda_two,
    paraboloid_exponent,
)


class BallInflationTests(SimpleTestCase):
    def test_worst_case_window(self):
        inflation = ball_inflation_constraints(1, 9, 20)
        self.assertEqual(inflation.lebesgue_index, Fraction(40, 9))
        self.assertEqual(inflation.p_min, 12)
        self.assertEqual(inflation.q_window, (Fraction(8, 3), Fraction(40, 9)))
        self.assertTrue(inflation.admissible)
        self.assertTrue(inflation.window_nonempty)

    def test_second_inflation(self):
        inflation = ball_inflation_constraints(2, 9, 20)
        self.assertEqual(inflation.p_min, Fraction(24, 5))
        self.assertEqual(inflation.lebesgue_index, Fraction(100, 9))
        self.assertEqual(inflation.d0, 5)

    def test_threshold_is_holder_index(self):
        for l in (1, 2):
            inflation = ball_inflation_constraints(l, 9, Fraction(16 * 9, 3 * l * (l + 3)))
            self.assertEqual(inflation.lebesgue_index, Fraction(8, 3))

    def test_small_p(self):
        inflation = ball_inflation_constraints(1, 9, 10)
        self.assertFalse(inflation.admissible)
        self.assertFalse(inflation.window_nonempty)

    def test_invalid_parameters(self):
        with self.assertRaises(ParameterError):
            ball_inflation_constraints(3, 9, 20)
        with self.assertRaises(ParameterError):
            ball_inflation_constraints(1, 0, 20)


class CriticalTableTests(SimpleTestCase):
    def setUp(self):
        self.rows = {row["name"]: row for row in critical_exponent_table()}

    def test_paraboloid_crossover(self):
        row = self.rows["S22 l^p L^p (small p)"]
        self.assertEqual(row["critical_point"], 8)
        self.assertEqual(row["value"], Fraction(3, 8))
        self.assertEqual(self.rows["S22 l^p L^p (large p)"]["value"], Fraction(3, 8))
        self.assertEqual(paraboloid_exponent(4), Fraction(1, 4))
        self.assertEqual(paraboloid_exponent(10), Fraction(1, 2))

    def test_lambda_equality_at_holder_index(self):
        self.assertEqual(self.rows["lambda_1,q"]["critical_point"], Fraction(8, 3))
        self.assertEqual(lambda_one(Fraction(8, 3)), Fraction(1, 8))
        self.assertEqual(lambda_two(Fraction(8, 3)), Fraction(1, 8))
        self.assertLess(lambda_one(4), lambda_two(4))

    def test_cubic_exponent(self):
        self.assertEqual(self.rows["S23 l^20 L^20"]["value"], Fraction(9, 10))

    def test_holder_inequality(self):
        check = self.rows["1/2-1/(2q)-3/16 <= 1/2-1/q"]["check"]
        self.assertEqual(check, {"2": False, "8/3": True, "3": True, "40/9": True, "8": True})
        self.assertEqual(holder_gap(Fraction(8, 3)), 0)


class ScaleParamsTests(SimpleTestCase):
    def test_from_perfect_square(self):
        scale = ScaleParams.from_N(16)
        self.assertEqual(scale.delta, Fraction(1, 4))
        self.assertEqual(scale.N, 16)
        self.assertEqual(scale.squares_per_side, 4)

    def test_non_integer_bookkeeping(self):
        scale = ScaleParams(Fraction(2, 3))
        self.assertIsNone(scale.N)
        self.assertIsNone(scale.squares_per_side)

    def test_rejects(self):
        for N in (15, 0, -4):
            with self.assertRaises(ParameterError):
                ScaleParams.from_N(N)
        with self.assertRaises(ParameterError):
            ScaleParams(0)
