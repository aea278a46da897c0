# coding: utf-8

from __future__ import unicode_literals

import unittest

from cantorlab.core.cantor_core import system_from_table
from cantorlab.core.extrema import brute_force_extrema
from cantorlab.features.multi_scan import split_blocks, parallel_extrema_scan

__author__ = 'cantorlab developers'
__copyright__ = 'Copyright 2026, cantorlab developers'
__version__ = '0.1'
__maintainer__ = 'cantorlab developers'
__email__ = 'cantorlab@users.noreply.github.com'
__date__ = 'Oct 16, 2026'


class SplitBlocksTest(unittest.TestCase):

    def test_cover(self):
        blocks = split_blocks(1, 100, 7)
        self.assertEqual(len(blocks), 7)
        self.assertEqual(blocks[0][0], 1)
        self.assertEqual(blocks[-1][1], 100)
        for (lo1, hi1), (lo2, hi2) in zip(blocks, blocks[1:]):
            self.assertEqual(hi1 + 1, lo2)
            self.assertLessEqual(lo1, hi1)

    def test_small_range(self):
        self.assertEqual(split_blocks(5, 7, 10), [(5, 5), (6, 6), (7, 7)])
        self.assertRaises(ValueError, split_blocks, 5, 4, 2)
        self.assertRaises(ValueError, split_blocks, 1, 4, 0)


class ParallelScanTest(unittest.TestCase):

    def assertSameExtrema(self, a, b):
        self.assertEqual(a.supremum, b.supremum)
        self.assertEqual(a.infimum, b.infimum)
        self.assertEqual(a.sup_witness, b.sup_witness)
        self.assertEqual(a.inf_witness, b.inf_witness)
        self.assertEqual(a.ratio_min_witness, b.ratio_min_witness)

    def test_matches_single_scan(self):
        sys = system_from_table([0, 1, 4], 4)
        serial = brute_force_extrema(sys, 3 ** 8)
        self.assertSameExtrema(parallel_extrema_scan(sys, 3 ** 8, nproc=1, num_blocks=5), serial)
        self.assertSameExtrema(parallel_extrema_scan(sys, 3 ** 8, nproc=2), serial)

    def test_ties_to_smallest_index(self):
        # n = 1, 3 and 7 all reach the infimum 1
        sys = system_from_table([0, 2], 2)
        res = parallel_extrema_scan(sys, 2 ** 8, nproc=1, num_blocks=8)
        self.assertEqual(res.inf_witness, 1)
        self.assertEqual(res.supremum, 2)
        self.assertEqual(res.method, 'brute_force')

    def test_small_range(self):
        self.assertRaises(ValueError, parallel_extrema_scan, system_from_table([0, 2], 2), 1)


if __name__ == '__main__':
    unittest.main()
