from fractions import Fraction

from django.test import SimpleTestCase

from counting.exponents import lower_bound_exponent, regime_analysis, upper_bound_exponent
from lab.exceptions import UnsupportedCaseError


class LowerBoundTests(SimpleTestCase):
    def test_critical_index_ties(self):
        exponent, dominating = lower_bound_exponent(2, 3, 10)
        self.assertEqual(exponent, 20)
        self.assertEqual(dominating, ("diagonal", "j=2"))

    def test_curve_case(self):
        for k in range(2, 6):
            for s in range(1, 31):
                expected = max(Fraction(s), 2 * s - Fraction(k * (k + 1), 2))
                self.assertEqual(lower_bound_exponent(1, k, s).exponent, expected)

    def test_middle_window_for_threefolds(self):
        exponent, dominating = lower_bound_exponent(3, 5, 70)
        self.assertEqual(dominating, ("j=2",))
        self.assertEqual(exponent, 211)


class RegimeTests(SimpleTestCase):
    def _breakpoints(self, regimes):
        return [regime.upper for regime in regimes[:-1]]

    def test_curves_split_at_k_times_k_plus_one(self):
        for k in range(2, 7):
            regimes = regime_analysis(1, k)
            self.assertEqual(self._breakpoints(regimes), [k * (k + 1)])
            self.assertEqual([r.dominating for r in regimes], [("diagonal",), ("j=1",)])

    def test_surfaces_have_two_regimes(self):
        for k in range(2, 7):
            regimes = regime_analysis(2, k)
            self.assertEqual(self._breakpoints(regimes), [Fraction(k * (k + 1) * (k + 2), 3)])

    def test_threefold_small_degree(self):
        regimes = regime_analysis(3, 4)
        self.assertEqual(len(regimes), 2)
        self.assertEqual(self._breakpoints(regimes), [70])
        self.assertEqual(regimes[1].dominating, ("j=3",))

    def test_threefold_degree_five_has_middle_regime(self):
        regimes = regime_analysis(3, 5)
        self.assertEqual(len(regimes), 3)
        self.assertEqual(self._breakpoints(regimes), [138, 141])
        self.assertEqual([r.dominating for r in regimes], [("diagonal",), ("j=2",), ("j=3",)])
        self.assertTrue(regimes[0].lower_closed)
        self.assertTrue(regimes[1].contains(140))
        self.assertFalse(regimes[1].contains(138))

    def test_threefold_breakpoint_formulas(self):
        for k in range(5, 9):
            regimes = regime_analysis(3, k)
            self.assertEqual(
                self._breakpoints(regimes),
                [
                    Fraction(2 * k * (k + 1) * (k + 2), 3) - 2,
                    Fraction(k * (k + 1) * (k + 2) * (3 * k + 1), 24) + 1,
                ],
            )

    def test_regimes_agree_with_pointwise_maximum(self):
        for d, k in ((2, 3), (3, 5), (4, 3)):
            regimes = regime_analysis(d, k)
            for s in range(1, 200):
                regime = next(r for r in regimes if r.contains(2 * s))
                _, dominating = lower_bound_exponent(d, k, s)
                self.assertTrue(set(regime.dominating) <= set(dominating))


class UpperBoundTests(SimpleTestCase):
    def test_proved_cases(self):
        for s in range(1, 25):
            self.assertEqual(upper_bound_exponent(2, 3, s), max(2 * s, 4 * s - 20))
            self.assertEqual(upper_bound_exponent(2, 2, s), max(2 * s, 4 * s - 8))
            self.assertEqual(upper_bound_exponent(1, 4, s), max(Fraction(s), 2 * s - 10))

    def test_bounds_meet_where_proved(self):
        for d, k in ((1, 2), (1, 3), (2, 2), (2, 3)):
            for s in range(1, 25):
                self.assertEqual(lower_bound_exponent(d, k, s).exponent, upper_bound_exponent(d, k, s))

    def test_other_cases_are_conjectural(self):
        with self.assertRaises(UnsupportedCaseError):
            upper_bound_exponent(3, 2, 5)
        with self.assertRaises(UnsupportedCaseError):
            upper_bound_exponent(2, 4, 5)
