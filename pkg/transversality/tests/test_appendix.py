import math
import random
from fractions import Fraction

import sympy
from django.test import SimpleTestCase

from lab.exceptions import ParameterError
from transversality.appendix import (
    CUBIC_BASIS,
    appendix_lemma_checks,
    generator_rows,
    on_single_vector_locus,
    on_triple_locus,
    taylor_projection,
)
from transversality.subspaces import exact_rank

r, s = sympy.symbols("r s")
CUBICS = dict(zip(CUBIC_BASIS, (r ** 3, r ** 2 * s, r * s ** 2, s ** 3)))


def _expanded_taylor(expr, a, b):
    """Degree-two Taylor polynomial at (a, b), expanded and read off on (r, s, r², rs, s²)."""
    a, b = sympy.Rational(a.numerator, a.denominator), sympy.Rational(b.numerator, b.denominator)
    total = 0
    for i in range(3):
        for j in range(3 - i):
            derivative = expr
            if i:
                derivative = sympy.diff(derivative, r, i)
            if j:
                derivative = sympy.diff(derivative, s, j)
            value = derivative.subs({r: a, s: b})
            total += value / (math.factorial(i) * math.factorial(j)) * (r - a) ** i * (s - b) ** j
    poly = sympy.Poly(sympy.expand(total), r, s)
    return tuple(Fraction(str(poly.coeff_monomial(m))) for m in (r, s, r ** 2, r * s, s ** 2))


class TaylorProjectionTests(SimpleTestCase):
    def test_pure_cubes(self):
        a, b = Fraction(2, 3), Fraction(-5, 7)
        self.assertEqual(taylor_projection((a, b), "r^3"), (-3 * a ** 2, 0, 3 * a, 0, 0))
        self.assertEqual(taylor_projection((a, b), "s^3"), (0, -3 * b ** 2, 0, 0, 3 * b))

    def test_mixed_cubes(self):
        a, b = Fraction(1, 2), Fraction(3, 4)
        self.assertEqual(taylor_projection((a, b), "r^2*s"), (-2 * a * b, -a ** 2, b, 2 * a, 0))
        self.assertEqual(taylor_projection((a, b), "r*s^2"), (-b ** 2, -2 * a * b, 0, 2 * b, a))

    def test_identity_on_lower_degrees(self):
        f = [1, Fraction(-2, 3), 0, 5, Fraction(1, 7)]
        self.assertEqual(taylor_projection((Fraction(1, 3), 2), f), tuple(Fraction(x) for x in f))

    def test_mixed_vector(self):
        xi = (Fraction(1, 5), Fraction(2, 5))
        lower = [1, 2, 3, 4, 5]
        cubic = taylor_projection(xi, "r*s^2")
        combined = taylor_projection(xi, lower + [0, 0, 1, 0])
        self.assertEqual(combined, tuple(x + y for x, y in zip(lower, cubic)))

    def test_agrees_with_symbolic_expansion(self):
        rng = random.Random(17)
        for _ in range(20):
            a = Fraction(rng.randint(-20, 20), rng.randint(1, 20))
            b = Fraction(rng.randint(-20, 20), rng.randint(1, 20))
            for name, expr in CUBICS.items():
                with self.subTest(a=a, b=b, f=name):
                    self.assertEqual(taylor_projection((a, b), name), _expanded_taylor(expr, a, b))

    def test_rejects_unknown_input(self):
        with self.assertRaises(ParameterError):
            taylor_projection((1, 1), "r^4")
        with self.assertRaises(ParameterError):
            taylor_projection((1, 1), [1, 2, 3])


class ProjectedRankTests(SimpleTestCase):
    def test_generators_at_one_one(self):
        self.assertEqual(exact_rank(generator_rows((1, 1))), 3)
        images = [taylor_projection((1, 1), name) for name in CUBIC_BASIS]
        self.assertEqual(exact_rank(images + generator_rows((1, 1))), 3)

    def test_single_vector_off_locus(self):
        e3 = [0, 0, 1, 0, 0]
        xi = (Fraction(2), Fraction(3))
        self.assertEqual(exact_rank(generator_rows(xi) + [e3]), 4)
        self.assertFalse(on_single_vector_locus(xi, e3))
        self.assertTrue(on_single_vector_locus((0, 3), e3))

    def test_origin_collapses_the_span(self):
        images = [taylor_projection((0, 0), name) for name in CUBIC_BASIS]
        self.assertEqual(exact_rank(images), 0)

    def test_sampled_checks(self):
        checks = appendix_lemma_checks(seed=7, trials=30)
        self.assertEqual(checks["generators"].full_rank, 30)
        for check in checks.values():
            with self.subTest(check=check.name):
                self.assertEqual(check.full_rank + len(check.drops), 30)
                self.assertTrue(all(drop["on_locus"] for drop in check.drops))

    def test_full_rank_rate_over_a_thousand_points(self):
        checks = appendix_lemma_checks(seed=7, trials=1000)
        for check in checks.values():
            with self.subTest(check=check.name):
                self.assertEqual(check.trials, 1000)
                self.assertGreaterEqual(check.full_rank, 990)

    def test_single_vector_in_the_generator_span(self):
        xi = (Fraction(2, 3), Fraction(-5, 4))
        gens = generator_rows(xi)
        v = [x + 2 * z for x, z in zip(gens[0], gens[2])]
        self.assertEqual(exact_rank(gens + [v]), 3)
        self.assertTrue(on_single_vector_locus(xi, v))
        self.assertFalse(on_single_vector_locus(xi, [1, 0, 0, 0, 0]))

    def test_three_vectors_with_a_common_quotient_direction(self):
        xi = (Fraction(1, 2), Fraction(3, 7))
        gens = generator_rows(xi)
        e1, e2 = [1, 0, 0, 0, 0], [0, 1, 0, 0, 0]
        # quotients (1, 0), (2, 0) and (0, 0)
        dependent = [e1, [2 * x + y for x, y in zip(e1, gens[1])], gens[2]]
        self.assertTrue(on_triple_locus(xi, dependent))
        self.assertLess(exact_rank(gens + dependent), 5)
        spread = [e1, e2, [0, 0, 1, 0, 0]]
        self.assertFalse(on_triple_locus(xi, spread))
        self.assertEqual(exact_rank(gens + spread), 5)

    def test_proportional_cubic_pair_drops(self):
        xi = (Fraction(3, 5), Fraction(2, 9))
        f1 = [1, -2, 0, 3]
        projected = [taylor_projection(xi, f1), taylor_projection(xi, [2 * c for c in f1])]
        self.assertEqual(exact_rank(projected), 1)
        independent = [taylor_projection(xi, "r^3"), taylor_projection(xi, "s^3")]
        self.assertEqual(exact_rank(independent), 2)

    def test_sampled_checks_are_seeded(self):
        first = {name: c.as_dict() for name, c in appendix_lemma_checks(seed=3, trials=5).items()}
        second = {name: c.as_dict() for name, c in appendix_lemma_checks(seed=3, trials=5).items()}
        self.assertEqual(first, second)
