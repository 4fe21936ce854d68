from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from lab.exceptions import ParameterError
from monomials.systems import derivative_matrix, enumerate_indices
from transversality.brascamp_lieb import PointConfig, bl_condition_check, bl_rank_implication
from transversality.subspaces import Subspace, orthogonal_complement

CUBIC = enumerate_indices(2, 3)


class PointConfigTests(SimpleTestCase):
    def test_square_centres(self):
        config = PointConfig.from_squares([(0, 0), (1, 2)], 4)
        self.assertEqual(config.points, ((Fraction(1, 8), Fraction(1, 8)), (Fraction(3, 8), Fraction(5, 8))))
        self.assertEqual(config.square_side, Fraction(1, 4))

    def test_from_json(self):
        config = PointConfig.from_json({"points": [["1/2", "1/3"], [0, 1]], "square_side": "1/8"})
        self.assertEqual(config.points, ((Fraction(1, 2), Fraction(1, 3)), (Fraction(0), Fraction(1))))
        self.assertEqual(config.as_dict()["square_side"], "1/8")
        self.assertEqual(len(PointConfig.from_json([["1/5", "2/5"]])), 1)

    def test_out_of_range(self):
        with self.assertRaises(ParameterError):
            PointConfig([(2, 0)])
        with self.assertRaises(ParameterError):
            PointConfig([(Fraction(1, 2),)])


class ConditionTests(SimpleTestCase):
    def test_coincident_points_violate(self):
        point = (Fraction(1, 3), Fraction(1, 2))
        columns = list(zip(*derivative_matrix(CUBIC, 1).evaluate(point).tolist()))
        complement = orthogonal_complement(columns, 9)
        self.assertEqual(complement.dim, 7)
        result = bl_condition_check([point] * 5, 1, 0, seed=1, extra_subspaces=[complement])
        self.assertEqual(result["checked"], 1)
        (violation,) = result["violations"]
        self.assertEqual((violation["dim"], violation["rank_sum"], violation["bound"]), (7, 0, 0))

    def test_general_position_second_order(self):
        points = PointConfig.random(10, np.random.default_rng(5))
        result = bl_condition_check(points, 2, 45, seed=5)
        self.assertEqual((result["d0"], result["points"], result["checked"]), (5, 10, 45))
        self.assertEqual(result["violations"], [])
        self.assertGreaterEqual(result["tight"], 5)

    def test_general_position_first_order(self):
        points = PointConfig.random(10, np.random.default_rng(6))
        result = bl_condition_check(points, 1, 27, seed=6)
        self.assertEqual(result["d0"], 2)
        self.assertEqual(result["violations"], [])

    def test_five_points_five_hundred_subspaces(self):
        points = PointConfig.random(5, np.random.default_rng(7))
        result = bl_condition_check(points, 2, 500, seed=7)
        self.assertEqual((result["points"], result["checked"]), (5, 500))
        self.assertEqual(result["violations"], [])

    def test_full_space_is_tight(self):
        points = PointConfig.from_squares([(i, (3 * i) % 8) for i in range(8)], 8)
        result = bl_condition_check(points, 2, 0, seed=1, extra_subspaces=[Subspace.full(9)])
        self.assertEqual((result["checked"], result["tight"]), (1, 1))

    def test_too_few_points(self):
        with self.assertRaises(ParameterError):
            bl_condition_check([(0, 0), (1, 1)], 1, 3, seed=1)


class RankImplicationTests(SimpleTestCase):
    def test_every_dimension(self):
        for m in range(1, 10):
            with self.subTest(m=m):
                self.assertTrue(bl_rank_implication(m))

    def test_range(self):
        for m in (0, 10):
            with self.assertRaises(ParameterError):
                bl_rank_implication(m)
