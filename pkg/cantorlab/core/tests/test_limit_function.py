# coding: utf-8

from __future__ import unicode_literals, division

import unittest
from fractions import Fraction

import mpmath
import numpy as np

from cantorlab.core.cantor_core import system_from_table
from cantorlab.core.limit_function import FractionalExpansion, d_value, lambda_value, \
    cantor_function_g, cantor_address, density_d, continuity_probe, holder_probe, \
    fourier_coefficient, fourier_coefficients, fourier_bound, fourier_decay_constant, cesaro_sum, \
    HPComplexCoefficient, NotRational, DegenerateGrid
from cantorlab.utilities.hp_arith import fraction_to_mpf

__author__ = 'cantorlab developers'
__copyright__ = 'Copyright 2026, cantorlab developers'
__version__ = '0.1'
__maintainer__ = 'cantorlab developers'
__email__ = 'cantorlab@users.noreply.github.com'
__date__ = 'Oct 16, 2026'


def random_expansion(seed, base=2, integer_part=1, length=1200):
    digits = [int(d) for d in np.random.RandomState(seed).randint(0, base, size=length)]
    return FractionalExpansion.from_generator(base, integer_part, lambda: iter(digits))


class FractionalExpansionTest(unittest.TestCase):

    def test_digits(self):
        x = FractionalExpansion.from_value(Fraction(4, 3), 2)
        self.assertEqual(x.integer_part, 1)
        self.assertEqual(x.digits(6), [0, 1, 0, 1, 0, 1])
        self.assertFalse(x.rational_flag)
        y = FractionalExpansion.from_value(Fraction(11, 8), 2)
        self.assertTrue(y.rational_flag)
        self.assertEqual(y.finite_digits(), [0, 1, 1])

    def test_tail_of_m_folds(self):
        x = FractionalExpansion.from_digits(2, 1, [0], repeat=[1])
        self.assertEqual(x.value, Fraction(3, 2))
        self.assertEqual(x.finite_digits(), [1])
        self.assertEqual(FractionalExpansion.from_digits(3, 0, [], [0, 2]).value, Fraction(1, 4))

    def test_generator(self):
        x = random_expansion(1)
        self.assertFalse(x.rational_flag)
        self.assertEqual(x.scaled(3).integer_part, 8 + 4 * x.digits(1)[0] + 2 * x.digits(2)[1] +
                         x.digits(3)[2])
        self.assertEqual(x.scaled(3).digits(5), x.digits(8)[3:])
        self.assertRaises(NotRational, x.finite_digits)


class LambdaTest(unittest.TestCase):

    def setUp(self):
        self.ternary = system_from_table([0, 2], 2)
        self.square = system_from_table([0, 1, 4], 4)

    def test_d_value(self):
        d = d_value(self.ternary, Fraction(4, 3))
        self.assertLessEqual(abs(d.value - mpmath.mpf(1) / 4), d.error + mpmath.mpf(2) ** -120)
        d = d_value(self.ternary, Fraction(3, 2))
        self.assertEqual(d.error, 0)
        self.assertEqual(d.value, fraction_to_mpf(Fraction(2, 3)))

    def test_values(self):
        self.assertEqual(lambda_value(self.ternary, 1).value, 2)
        self.assertAlmostEqual(float(lambda_value(self.ternary, Fraction(4, 3)).value), 1.4261,
                               places=3)
        self.assertAlmostEqual(float(lambda_value(self.square, 2).value), 1.44897, places=5)
        self.assertRaises(ValueError, lambda_value, self.ternary, 0)

    def test_scaling(self):
        for sys in [self.ternary, self.square]:
            for x in [Fraction(4, 3), Fraction(7, 5), random_expansion(3, sys.b)]:
                a = lambda_value(sys, x)
                xs = x.scaled(2) if isinstance(x, FractionalExpansion) else x * sys.b ** 2
                b = lambda_value(sys, xs)
                self.assertLessEqual(abs(a.value - b.value), a.error + b.error + 1e-30)

    def test_bounds(self):
        for x in [Fraction(5, 4), Fraction(13, 7), Fraction(3, 1), random_expansion(5)]:
            v = lambda_value(self.ternary, x).value
            self.assertGreaterEqual(v, 1 - 1e-30)
            self.assertLessEqual(v, 2 + 1e-30)


class CantorFunctionTest(unittest.TestCase):

    def setUp(self):
        self.ternary = system_from_table([0, 2], 2)

    def test_middle_thirds(self):
        g = lambda t: cantor_function_g(self.ternary, t, exact=True)
        self.assertEqual(g(0), (0, 0))
        self.assertEqual(g(1), (1, 0))
        self.assertEqual(g(Fraction(1, 3)).value, Fraction(1, 2))
        self.assertEqual(g(Fraction(1, 9)).value, Fraction(1, 4))
        self.assertEqual(g(Fraction(1, 2)).value, Fraction(1, 2))
        self.assertEqual(g(Fraction(2, 3)).value, Fraction(1, 2))
        self.assertEqual(g(Fraction(5, 6)).value, Fraction(3, 4))
        quarter = g(Fraction(1, 4))
        self.assertLessEqual(abs(quarter.value - Fraction(1, 3)), quarter.error)
        self.assertGreater(quarter.error, 0)

    def test_monotone(self):
        ts = sorted(Fraction(k, 97) for k in range(98))
        values = [cantor_function_g(self.ternary, t, depth=30, exact=True).value for t in ts]
        self.assertEqual(values, sorted(values))

    def test_address(self):
        digits, finite = cantor_address(self.ternary, Fraction(20, 27), depth=10)
        self.assertTrue(finite)
        self.assertEqual(digits[:4], [1, 0, 1, 0])
        x = FractionalExpansion.from_digits(2, 0, digits)
        self.assertEqual(d_value(self.ternary, x).value, fraction_to_mpf(Fraction(20, 27)))
        self.assertRaises(ValueError, cantor_address, self.ternary, Fraction(1, 2))

    def test_density(self):
        self.assertEqual(density_d(self.ternary, Fraction(1, 3)).value, 1)
        self.assertEqual(density_d(self.ternary, 1).value, 1)
        for x in [Fraction(1, 2), Fraction(5, 6)]:
            self.assertEqual(density_d(self.ternary, x).value, density_d(self.ternary, x / 3).value)
        self.assertRaises(ValueError, density_d, self.ternary, 0)

    def test_overlapping_branches(self):
        self.assertRaises(ValueError, cantor_function_g, system_from_table([0, 0, 3], 3),
                          Fraction(1, 2))


class ContinuityTest(unittest.TestCase):

    def test_jump(self):
        report = continuity_probe(system_from_table([0, 2], 2), Fraction(3, 2))
        self.assertEqual(report.classification, 'right_only')
        self.assertAlmostEqual(float(report.value), 1.4024, places=4)
        self.assertAlmostEqual(float(report.left_limit), 1.2271, places=3)
        self.assertAlmostEqual(float(report.jump), 0.1753, places=3)
        self.assertEqual(report.last_digit, 1)

    def test_continuous(self):
        report = continuity_probe(system_from_table([0, 1, 4], 4), Fraction(4, 3))
        self.assertEqual(report.classification, 'left_and_right')
        self.assertEqual(report.jump, 0)
        self.assertEqual(report.value, report.left_limit)

    def test_errors(self):
        ternary = system_from_table([0, 2], 2)
        self.assertRaises(NotRational, continuity_probe, ternary, Fraction(1, 3))
        self.assertRaises(NotRational, continuity_probe, ternary, random_expansion(2))
        self.assertRaises(ValueError, continuity_probe, ternary, 2)


class HolderTest(unittest.TestCase):

    def setUp(self):
        self.ternary = system_from_table([0, 2], 2)
        self.grid = [Fraction(1, 2 ** j) for j in range(8, 41)]

    def test_normal_point(self):
        report = holder_probe(self.ternary, random_expansion(0), self.grid)
        self.assertGreaterEqual(report.slope, float(self.ternary.alpha) - 0.15)
        self.assertTrue(report.normal_like)
        self.assertTrue(report.meets_floor)
        self.assertGreaterEqual(report.points, 30)

    def test_periodic_point(self):
        report = holder_probe(self.ternary, Fraction(4, 3), self.grid)
        self.assertFalse(report.normal_like)
        self.assertGreater(report.block_deviation[2], 0.2)

    def test_degenerate(self):
        self.assertRaises(DegenerateGrid, holder_probe, self.ternary, Fraction(4, 3),
                          self.grid[:3])
        self.assertRaises(ValueError, holder_probe, self.ternary, Fraction(4, 3), [Fraction(0)])


class FourierTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.ternary = system_from_table([0, 2], 2)
        cls.coeffs = fourier_coefficients(cls.ternary, range(0, 513))

    def test_conjugate_symmetry(self):
        for n in [1, 3, 10]:
            pos = fourier_coefficient(self.ternary, n, 10)
            neg = fourier_coefficient(self.ternary, -n, 10)
            self.assertLess(abs(complex(neg.value) - complex(pos.value).conjugate()), 1e-12)

    def test_convergence(self):
        c10 = fourier_coefficient(self.ternary, 0, 10)
        c13 = fourier_coefficient(self.ternary, 0, 13)
        self.assertEqual(c10.error, fourier_bound(self.ternary, 10))
        self.assertLessEqual(abs(c10.value - c13.value), c10.error + c13.error + 1e-12)
        self.assertAlmostEqual(float(c13.value.imag), 0, places=10)

    def test_decay(self):
        self.assertLess(fourier_decay_constant(self.coeffs[:200]), 10)

    def test_cesaro(self):
        for x in [Fraction(4, 3), Fraction(8, 5), Fraction(6, 5)]:
            fejer = cesaro_sum(self.ternary, x, self.coeffs)
            exact = lambda_value(self.ternary, x).value
            self.assertLess(abs(fejer - exact), 1e-2)
        self.assertEqual(cesaro_sum(self.ternary, Fraction(4, 3), self.coeffs),
                         cesaro_sum(self.ternary, Fraction(8, 3), self.coeffs))
        self.assertEqual(cesaro_sum(self.ternary, 5, self.coeffs, order=0),
                         mpmath.mpf(complex(self.coeffs[0].value).real))

    def test_serialization(self):
        c = self.coeffs[3]
        c2 = HPComplexCoefficient.from_format(c.to_format('json'))
        self.assertEqual(c2.index, 3)
        self.assertLess(abs(c2.value - c.value), 1e-14)

    def test_bad_resolution(self):
        self.assertRaises(ValueError, fourier_coefficient, self.ternary, 1, 1)


if __name__ == '__main__':
    unittest.main()
