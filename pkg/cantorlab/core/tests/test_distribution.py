# coding: utf-8

from __future__ import unicode_literals, division

import unittest

import mpmath

from cantorlab.core.cantor_core import system_from_table, ratio
from cantorlab.core.extrema import compute_extrema, ScopeError
from cantorlab.core.distribution import greedy_subsequence, density_cover, log_distribution, \
    log_distribution_sweep, theta_densities, empirical_cdf_probe, CoverReport, LogDistResult, \
    OutOfInterval

__author__ = 'cantorlab developers'
__copyright__ = 'Copyright 2026, cantorlab developers'
__version__ = '0.1'
__maintainer__ = 'cantorlab developers'
__email__ = 'cantorlab@users.noreply.github.com'
__date__ = 'Oct 16, 2026'


class GreedySubsequenceTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.square = system_from_table([0, 1, 4], 4)
        cls.extrema = compute_extrema(cls.square)

    def test_converges(self):
        seq = greedy_subsequence(self.square, 1.0, 24, extrema=self.extrema)
        self.assertLess(abs(ratio(self.square, seq.indices[-1]) - 1), 1e-3)
        self.assertTrue(seq.non_increasing)

    def test_near_infimum(self):
        gamma = self.extrema.infimum + mpmath.mpf('0.01')
        seq = greedy_subsequence(self.square, gamma, 24, extrema=self.extrema)
        self.assertTrue(seq.non_increasing)
        self.assertGreaterEqual(seq.ratios[-1], gamma)
        self.assertLess(seq.distance, 1e-3)
        for n, r in zip(seq.indices, seq.ratios):
            self.assertEqual(r, ratio(self.square, n))

    def test_digit_start(self):
        seq = greedy_subsequence(self.square, 1.0, 8, k2=2, extrema=self.extrema, start='digit')
        # ratio(1) = 1 is the least digit ratio >= 1; zeros are appended up to 3^2
        self.assertEqual(seq.indices[:3], [1, 3, 9])
        self.assertEqual(seq.ratios[:3], [1, 1, 1])
        self.assertEqual(seq.k2, 2)
        self.assertEqual(len(seq.indices), 8)
        self.assertTrue(all(r >= 1 for r in seq.ratios))
        self.assertRaises(ValueError, greedy_subsequence, self.square, 1.0, 8,
                          extrema=self.extrema, start='middle')

    def test_out_of_interval(self):
        self.assertRaises(OutOfInterval, greedy_subsequence, self.square,
                          self.extrema.supremum + mpmath.mpf('0.1'), 10, extrema=self.extrema)
        self.assertRaises(OutOfInterval, greedy_subsequence, self.square, 0.5, 10,
                          extrema=self.extrema)

    def test_scope(self):
        self.assertRaises(ScopeError, greedy_subsequence, system_from_table([0, 2], 3), 1.0, 5)


class DensityCoverTest(unittest.TestCase):

    def test_theorem_systems(self):
        for values, p in [([0, 2], 2), ([0, 1, 4], 4)]:
            sys = system_from_table(values, p)
            report = density_cover(sys, 12, 1e-3, 3 ** 16)
            self.assertTrue(report.all_covered, msg=repr(report.failures))
            self.assertEqual(len(report.grid), 12)
            for w in report.witnesses:
                self.assertLessEqual(w.n, 3 ** 16)
                self.assertLessEqual(abs(ratio(sys, w.n) - w.gamma), w.distance + 1e-30)

    def test_coarse_grid(self):
        report = density_cover(system_from_table([0, 2], 2), 2, 0.5, 100)
        self.assertTrue(report.all_covered)
        self.assertEqual(report.grid[0], report.grid[1])

    def test_outside_scope_uses_scan(self):
        report = density_cover(system_from_table([0, 2], 3), 5, 1e-2, 4 ** 8)
        self.assertTrue(report.all_covered)
        self.assertTrue(all(w.method == 'scan' for w in report.witnesses))

    def test_serialization(self):
        report = density_cover(system_from_table([0, 2], 2), 3, 1e-2, 2 ** 12)
        report2 = CoverReport.from_format(report.to_format('json'))
        self.assertEqual([w.n for w in report2.witnesses], [w.n for w in report.witnesses])
        self.assertTrue(report2.all_covered)

    def test_errors(self):
        self.assertRaises(ValueError, density_cover, system_from_table([0, 2], 2), 1, 1e-3, 100)


class LogDistributionTest(unittest.TestCase):

    def setUp(self):
        self.ternary = system_from_table([0, 2], 2)

    def test_endpoints(self):
        self.assertEqual(log_distribution(self.ternary, 0.9, 10 ** 4).L_value, 0)
        top = log_distribution(self.ternary, 2, 10 ** 4)
        self.assertLessEqual(top.L_value, 1 + 1e-12)
        self.assertAlmostEqual(top.L_value + top.error_estimate, 1, places=9)
        self.assertAlmostEqual(log_distribution(self.ternary, 2.1, 10 ** 4).L_value, 1, places=9)

    def test_sweep_monotone(self):
        gammas = [0.9 + 0.06 * j for j in range(21)]
        results = log_distribution_sweep(self.ternary, gammas, 10 ** 4)
        values = [r.L_value for r in results]
        self.assertEqual(values, sorted(values))
        self.assertEqual(values[0], 0)
        for r in results:
            self.assertGreaterEqual(r.L_value, 0)
            self.assertLessEqual(r.L_value + r.error_estimate, 1 + 1e-9)
        self.assertGreater(values[10], 0)
        self.assertLess(values[10], 1)

    def test_square(self):
        sq = system_from_table([0, 1, 4], 4)
        res = log_distribution(sq, 1.0, 10 ** 4)
        self.assertGreater(res.L_value, 0)
        self.assertLess(res.L_value + res.error_estimate, 1)
        self.assertGreaterEqual(res.resolution, 10 ** 4)

    def test_serialization(self):
        res = log_distribution(self.ternary, 1.5, 1000)
        res2 = LogDistResult.from_format(res.to_format('yaml'), 'yaml')
        self.assertEqual(res2.L_value, res.L_value)
        self.assertEqual(res2.resolution, res.resolution)

    def test_resolution(self):
        self.assertRaises(ValueError, log_distribution, self.ternary, 1.5, 10)


class ThetaTest(unittest.TestCase):

    def test_ternary(self):
        sys = system_from_table([0, 2], 2)
        report = theta_densities(sys, samples=200, seed=3)
        self.assertAlmostEqual(float(report.theta_lower), 0.64576, places=4)
        self.assertEqual(report.theta_upper, 1)
        self.assertTrue(report.within)
        self.assertLessEqual(report.sampled_max, 1 + 1e-2)
        with mpmath.workprec(128):
            ident = report.theta_lower * mpmath.power(2, 1 / sys.alpha_at(160))
        self.assertLess(abs(ident - 1), 1e-30)

    def test_square(self):
        sys = system_from_table([0, 1, 4], 4)
        ext = compute_extrema(sys)
        report = theta_densities(sys, samples=100)
        with mpmath.workprec(160):
            a = sys.alpha_at(160)
            self.assertLess(abs(report.theta_lower * mpmath.power(ext.supremum, 1 / a) - 1), 1e-30)
            self.assertLess(abs(report.theta_upper * mpmath.power(ext.infimum, 1 / a) - 1), 1e-30)
        self.assertTrue(report.within)

    def test_scope(self):
        self.assertRaises(ScopeError, theta_densities, system_from_table([0, 2], 3), 10)


class CdfProbeTest(unittest.TestCase):

    def setUp(self):
        self.ternary = system_from_table([0, 2], 2)

    def test_oscillation(self):
        report = empirical_cdf_probe(self.ternary, 1.3, range(8, 13))
        self.assertEqual(len(report.rows), 5 * 8)
        for k in range(8, 13):
            self.assertGreater(report.spread_by_k[k], 0.01)

    def test_below_infimum(self):
        report = empirical_cdf_probe(self.ternary, 0.9, range(4, 8), strict=False)
        self.assertTrue(all(row['A_N_over_N'] == 0 for row in report.rows))
        self.assertRaises(OutOfInterval, empirical_cdf_probe, self.ternary, 0.9, range(4, 8))

    def test_ties_at_threshold(self):
        # ratio(2^k) = 2 exactly, the supremum
        report = empirical_cdf_probe(self.ternary, 2, range(4, 8), strict=False, prec=128)
        self.assertTrue(all(row['A_N_over_N'] == 1.0 for row in report.rows))
        self.assertRaises(OutOfInterval, empirical_cdf_probe, self.ternary, 2, range(4, 8))
        with mpmath.workprec(128):
            gamma = 2 - mpmath.mpf(2) ** -100
        report = empirical_cdf_probe(self.ternary, gamma, range(4, 8), strict=False, prec=128)
        self.assertEqual(report.gamma, gamma)
        for row in report.rows:
            n = row['N']
            self.assertEqual(row['A_N_over_N'], float(n - n.bit_length()) / n)


if __name__ == '__main__':
    unittest.main()
