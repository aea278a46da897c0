# coding: utf-8

from __future__ import unicode_literals, division

import unittest
from fractions import Fraction

import mpmath
import numpy as np

from cantorlab.core.cantor_core import BaseConversionMap, validate_system, system_from_table, \
    QuadraticFamily, DigitWord, to_digits, from_digits, cantor_value, delta_cantor, ratio, \
    cantor_table, ratio_table, IfsSystem, growth_bound_violations, appending_m_violations, \
    NonMonotoneMap, TrivialMap, RangeError, DigitOutOfRange

__author__ = 'cantorlab developers'
__copyright__ = 'Copyright 2026, cantorlab developers'
__version__ = '0.1'
__maintainer__ = 'cantorlab developers'
__email__ = 'cantorlab@users.noreply.github.com'
__date__ = 'Oct 16, 2026'


class ValidateSystemTest(unittest.TestCase):

    def test_ternary(self):
        sys = validate_system(BaseConversionMap(1, 2, [0, 2]))
        self.assertTrue(sys.theorem_scope)
        self.assertAlmostEqual(float(sys.alpha), 1.5849625007, places=9)
        self.assertEqual(sys.q, 3)
        self.assertEqual(sys.delta_f, (2,))
        self.assertEqual(sys.sum_f, 2)

    def test_outside_scope(self):
        sys = system_from_table([0, 2], 3)
        self.assertFalse(sys.theorem_scope)
        self.assertTrue(sys.strict)
        self.assertEqual(sys.alpha, 2)

    def test_square(self):
        sys = system_from_table([0, 1, 4], 4)
        self.assertTrue(sys.theorem_scope)
        self.assertAlmostEqual(float(sys.alpha), float(mpmath.log(5) / mpmath.log(3)), places=12)
        self.assertEqual(sum(sys.delta_f), sys.f_m)
        self.assertAlmostEqual(float(sys.hausdorff_dimension * sys.alpha), 1.0, places=12)

    def test_errors(self):
        self.assertRaises(NonMonotoneMap, system_from_table, [0, 3, 2], 4)
        self.assertRaises(TrivialMap, system_from_table, [0, 1, 2], 2)
        self.assertRaises(RangeError, system_from_table, [0, 5], 4)
        self.assertRaises(TrivialMap, system_from_table, [0, 1], 1)
        self.assertRaises(RangeError, system_from_table, [0, 0, 1], 1)
        self.assertRaises(RangeError, system_from_table, [0, 1, 2], 1)
        self.assertRaises(RangeError, validate_system, BaseConversionMap(2, 4, [0, 4]))

    def test_non_strict_accepted(self):
        sys = system_from_table([0, 0, 3], 3)
        self.assertFalse(sys.strict)
        self.assertFalse(sys.theorem_scope)
        self.assertEqual(cantor_value(sys, 5), 3)  # [12]_3 -> [03]_4

    def test_quadratic_family(self):
        sys = QuadraticFamily(1, 0, 2).validate()
        self.assertEqual(sys, system_from_table([0, 1, 4], 4))
        self.assertEqual(QuadraticFamily(-1, 6, 2).validate().values, (0, 5, 8))
        self.assertRaises(NonMonotoneMap, QuadraticFamily(-2, 6, 2).validate)

    def test_serialization(self):
        sys = system_from_table([0, 1, 4], 4)
        self.assertEqual(sys.to_dict()['_cl_name'], 'CantorSystem')
        self.assertEqual(type(sys).from_format(sys.to_format('json')), sys)


class DigitsTest(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(to_digits(5, 2).digits, (1, 0, 1))
        self.assertEqual(from_digits([2, 0, 2], 3), 20)
        zero = to_digits(0, 7)
        self.assertTrue(zero.is_zero())
        self.assertEqual(from_digits(zero), 0)

    def test_round_trip(self):
        for base in range(2, 12):
            for n in range(0, 5000, 7):
                self.assertEqual(from_digits(to_digits(n, base)), n)
        self.assertEqual(from_digits(to_digits(10 ** 40 + 3, 11)), 10 ** 40 + 3)

    def test_out_of_range(self):
        self.assertRaises(DigitOutOfRange, from_digits, [1, 3], 3)
        self.assertRaises(DigitOutOfRange, DigitWord, 2, [2])

    def test_leading_zeros(self):
        self.assertEqual(DigitWord(3, [0, 0, 1, 2]), DigitWord(3, [1, 2]))
        self.assertEqual(str(DigitWord(3, [1, 2])), '[12]_3')


class CantorValueTest(unittest.TestCase):

    def setUp(self):
        self.ternary = system_from_table([0, 2], 2)
        self.square = system_from_table([0, 1, 4], 4)
        self.unscoped = system_from_table([0, 2], 3)
        self.systems = [self.ternary, self.square, self.unscoped,
                        system_from_table([0, 2, 3, 7], 7)]

    def test_values(self):
        self.assertEqual([cantor_value(self.ternary, n) for n in range(1, 8)],
                         [2, 6, 8, 18, 20, 24, 26])
        self.assertEqual(cantor_value(self.square, 5), 9)
        for sys in self.systems:
            self.assertEqual(cantor_value(sys, 0), 0)

    def test_strategies_agree(self):
        for sys in self.systems:
            for n in range(3000):
                cantor_value(sys, n, verify=True)

    def test_zero_padding(self):
        for sys in [self.ternary, self.square]:
            for u in [1, 2, 5, 17, 40]:
                word = to_digits(u, sys.b)
                for k in range(9):
                    self.assertEqual(cantor_value(sys, from_digits(word.padded(k))),
                                     sys.q ** k * cantor_value(sys, u))

    def test_delta(self):
        self.assertEqual(delta_cantor(self.ternary, 2), 4)
        self.assertEqual(delta_cantor(self.square, 3), 1)
        for sys in self.systems:
            self.assertEqual(delta_cantor(sys, 1), sys.f(1))
            total = 0
            for n in range(1, 800):
                total += delta_cantor(sys, n, verify=True)
                self.assertEqual(total, cantor_value(sys, n))

    def test_ratio(self):
        self.assertEqual(ratio(self.ternary, 1), 2)
        self.assertEqual(ratio(self.ternary, 4), 2)
        self.assertAlmostEqual(float(ratio(self.ternary, 3)), 1.4024, places=4)
        self.assertAlmostEqual(float(ratio(self.square, 2)), 1.44897, places=5)
        self.assertRaises(ValueError, ratio, self.ternary, 0)

    def test_tables(self):
        for sys in self.systems:
            table = cantor_table(sys, 500)
            self.assertEqual([int(c) for c in table], [cantor_value(sys, n) for n in range(501)])
        big = cantor_table(self.unscoped, 2 ** 40, 2 ** 40 - 3)
        self.assertEqual(big.dtype, object)
        self.assertEqual(int(big[-1]), cantor_value(self.unscoped, 2 ** 40))
        r = ratio_table(self.square, 100)
        self.assertTrue(np.allclose(r[:10], [float(ratio(self.square, n)) for n in range(1, 11)]))


class NonzeroStartTest(unittest.TestCase):
    """
    f(0) = 1: digit words keep no leading zeros, so C_0 = 0 while C_(m+1) ends in f(0).
    """

    def setUp(self):
        self.sys = validate_system(BaseConversionMap(1, 3, [1, 2]))

    def test_accepted_outside_scope(self):
        self.assertFalse(self.sys.theorem_scope)
        self.assertTrue(self.sys.strict)
        self.assertEqual(self.sys.alpha, 2)

    def test_values(self):
        self.assertEqual(cantor_value(self.sys, 0, verify=True), 0)
        self.assertEqual([cantor_value(self.sys, n, verify=True) for n in range(1, 5)],
                         [2, 9, 10, 37])
        for n in range(2000):
            cantor_value(self.sys, n, verify=True)

    def test_delta(self):
        self.assertEqual(delta_cantor(self.sys, 1, verify=True), 2)
        self.assertEqual(delta_cantor(self.sys, 2, verify=True), 7)
        self.assertEqual(delta_cantor(self.sys, 4, verify=True), 27)
        for n in range(1, 2000):
            self.assertEqual(delta_cantor(self.sys, n, verify=True),
                             cantor_value(self.sys, n) - cantor_value(self.sys, n - 1))

    def test_table(self):
        expected = [cantor_value(self.sys, n) for n in range(1025)]
        self.assertEqual(cantor_table(self.sys, 1024).tolist(), expected)
        self.assertEqual(cantor_table(self.sys, 1024, 500).tolist(), expected[500:])
        big = cantor_table(self.sys, 2 ** 40, 2 ** 40 - 2)
        self.assertEqual(big.tolist(), [cantor_value(self.sys, n) for n in
                                        range(2 ** 40 - 2, 2 ** 40 + 1)])


class InvariantHelpersTest(unittest.TestCase):

    def test_growth_bound(self):
        for values, p in [([0, 2], 2), ([0, 1, 4], 4), ([0, 5, 8], 8)]:
            self.assertEqual(growth_bound_violations(system_from_table(values, p), 3000), [])

    def test_appending_m(self):
        for values, p in [([0, 2], 2), ([0, 1, 4], 4)]:
            self.assertEqual(appending_m_violations(system_from_table(values, p), 400), [])


class IfsSystemTest(unittest.TestCase):

    def test_fixed_points(self):
        ifs = IfsSystem(system_from_table([0, 2], 2))
        self.assertEqual(ifs.apply(0, 0), 0)
        self.assertEqual(ifs.apply(1, 1), 1)
        self.assertEqual(ifs.hull, (0, 1))
        self.assertEqual(ifs.children(Fraction(0), Fraction(1)),
                         [(0, Fraction(1, 3)), (Fraction(2, 3), 1)])
        self.assertEqual(ifs.cylinder([1, 0]), (Fraction(2, 3), Fraction(7, 9)))

    def test_hull_outside_scope(self):
        ifs = IfsSystem(system_from_table([0, 2], 3))
        self.assertEqual(ifs.hull, (0, Fraction(2, 3)))
        self.assertEqual(ifs.apply(1, Fraction(2, 3)), Fraction(2, 3))


if __name__ == '__main__':
    unittest.main()
