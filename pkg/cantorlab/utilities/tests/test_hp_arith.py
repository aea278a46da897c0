# coding: utf-8

from __future__ import unicode_literals, division

import unittest
from fractions import Fraction
from unittest import mock

import mpmath
from mpmath import iv

from cantorlab import cl_config
from cantorlab.utilities.hp_arith import resolve_prec, interval_precision, to_fraction, \
    fraction_to_mpf, alpha_hp, integer_log, base_power_gap, power_alpha, exact_quotient_tie, \
    AlphaQuotient, compare_alpha_rational, best_quotient

__author__ = 'cantorlab developers'
__copyright__ = 'Copyright 2026, cantorlab developers'
__version__ = '0.1'
__maintainer__ = 'cantorlab developers'
__email__ = 'cantorlab@users.noreply.github.com'
__date__ = 'Oct 16, 2026'


class ConversionTest(unittest.TestCase):

    def test_resolve_prec(self):
        self.assertEqual(resolve_prec(), cl_config.PRECISION_BITS)
        self.assertEqual(resolve_prec(80), 80)

    def test_interval_precision(self):
        old = iv.prec
        with interval_precision(300):
            self.assertEqual(iv.prec, 300)
        self.assertEqual(iv.prec, old)

    def test_to_fraction(self):
        self.assertEqual(to_fraction(mpmath.mpf(0.5)), Fraction(1, 2))
        self.assertEqual(to_fraction(0.25), Fraction(1, 4))
        self.assertEqual(to_fraction(-mpmath.mpf(3)), Fraction(-3))
        self.assertEqual(to_fraction('2/7'), Fraction(2, 7))
        self.assertRaises(ValueError, to_fraction, mpmath.inf)

    def test_fraction_to_mpf(self):
        with mpmath.workprec(200):
            expected = mpmath.mpf(1) / 3
            self.assertEqual(fraction_to_mpf(Fraction(1, 3), 200), expected)

    def test_alpha(self):
        with mpmath.workprec(160):
            expected = mpmath.log(3) / mpmath.log(2)
        self.assertLess(abs(alpha_hp(2, 3, 128) - expected), mpmath.mpf(2) ** -126)


class IntegerPowerTest(unittest.TestCase):

    def test_integer_log(self):
        self.assertEqual(integer_log(8, 2), 3)
        self.assertEqual(integer_log(1, 5), 0)
        self.assertIsNone(integer_log(6, 2))
        self.assertIsNone(integer_log(0, 2))

    def test_base_power_gap(self):
        self.assertEqual(base_power_gap(12, 3, 2), 2)
        self.assertEqual(base_power_gap(3, 12, 2), -2)
        self.assertIsNone(base_power_gap(5, 3, 2))

    def test_power_alpha(self):
        self.assertEqual(power_alpha(8, 2, 3), 27)
        with mpmath.workprec(128):
            self.assertLess(abs(power_alpha(Fraction(1, 4), 2, 3, 128) - mpmath.mpf(1) / 9), 1e-30)
        with mpmath.workprec(160):
            expected = mpmath.power(5, mpmath.log(3) / mpmath.log(2))
            self.assertLess(abs(power_alpha(5, 2, 3, 128) - expected), 1e-30)


class ExactTieTest(unittest.TestCase):

    def test_exact_tie(self):
        # 3 / 2^alpha == 1 in base 2 -> 3
        self.assertTrue(exact_quotient_tie(3, 2, 1, 1, 2, 3))
        self.assertFalse(exact_quotient_tie(4, 2, 1, 1, 2, 3))
        # alpha = 3/2 for 4 -> 8
        self.assertTrue(exact_quotient_tie(8, 4, 1, 1, 4, 8))
        self.assertTrue(exact_quotient_tie(5, 7, 5, 7, 2, 3))

    def test_compare(self):
        a = AlphaQuotient(3, 2, 2, 3)
        one = AlphaQuotient(1, 1, 2, 3)
        self.assertEqual(a.compare(one), 0)
        self.assertEqual(a, one)
        self.assertGreater(AlphaQuotient(2, 1, 2, 3), one)
        self.assertLess(AlphaQuotient(6, 3, 2, 3), AlphaQuotient(2, 1, 2, 3))
        self.assertRaises(ValueError, a.compare, AlphaQuotient(1, 1, 3, 5))

    def test_tie_needs_identity(self):
        # 2^alpha = 3 for alpha = log 9 / log 4; the bases are no integer power apart
        self.assertEqual(AlphaQuotient(3, 2, 4, 9).compare(AlphaQuotient(1, 1, 4, 9)), 0)

    def test_escalation_reaches_identity(self):
        # 27/9^alpha == 1 for alpha = 3/2: no interval separates them at any precision
        tie, one = AlphaQuotient(27, 9, 4, 8), AlphaQuotient(1, 1, 4, 8)
        with mock.patch('cantorlab.utilities.hp_arith.exact_quotient_tie',
                        wraps=exact_quotient_tie) as identity, \
                mock.patch.object(AlphaQuotient, '_sign_at',
                                  autospec=True, side_effect=AlphaQuotient._sign_at) as sign_at:
            self.assertEqual(tie.compare(one, 64), 0)
            self.assertEqual(identity.call_count, 1)
            self.assertEqual([c[0][2] for c in sign_at.call_args_list],
                             [64 << i for i in range(cl_config.PRECISION_ESCALATIONS)])

            identity.reset_mock()
            self.assertGreater(AlphaQuotient(28, 9, 4, 8).compare(one, 64), 0)
            self.assertLess(AlphaQuotient(26, 9, 4, 8).compare(one, 64), 0)
            self.assertEqual(identity.call_count, 0)
        self.assertEqual(tie, one)

    def test_value(self):
        self.assertEqual(AlphaQuotient(54, 8, 2, 3).value(), 2)

    def test_compare_alpha_rational(self):
        self.assertEqual(compare_alpha_rational(2, 3, Fraction(3, 2)), 1)
        self.assertEqual(compare_alpha_rational(2, 3, 2), -1)
        self.assertEqual(compare_alpha_rational(4, 8, Fraction(3, 2)), 0)
        self.assertEqual(compare_alpha_rational(2, 3, 0), 1)

    def test_best_quotient(self):
        cands = [(3, AlphaQuotient(9, 4, 2, 3)), (1, AlphaQuotient(3, 2, 2, 3)),
                 (2, AlphaQuotient(2, 1, 2, 3))]
        self.assertEqual(best_quotient(cands, 'min')[0], 1)
        self.assertEqual(best_quotient(cands, 'max')[0], 2)
        self.assertEqual(best_quotient([], 'min'), (None, None))


if __name__ == '__main__':
    unittest.main()
