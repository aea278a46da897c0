# coding: utf-8

from __future__ import unicode_literals

__author__ = 'cantorlab developers'
__copyright__ = 'Copyright 2026, cantorlab developers'
__version__ = '0.1'
__maintainer__ = 'cantorlab developers'
__email__ = 'cantorlab@users.noreply.github.com'
__date__ = 'Oct 16, 2026'

import os
import shutil
import tempfile
import unittest
from unittest.mock import patch

from monty.serialization import loadfn

from cantorlab import cl_config
from cantorlab.cl_config import config_to_dict, write_config, check_precision, \
    override_user_settings, ScanData


class ConfigTest(unittest.TestCase):

    def setUp(self):
        self.scratch_dir = tempfile.mkdtemp()
        self.saved = config_to_dict()

    def tearDown(self):
        for k, v in self.saved.items():
            setattr(cl_config, k, v)
        shutil.rmtree(self.scratch_dir)

    def test_config(self):
        d = config_to_dict()
        self.assertIn('PRECISION_BITS', d)
        self.assertNotIn('ScanData', d)

    def test_check_precision(self):
        self.assertEqual(check_precision('96'), 96)
        self.assertRaises(ValueError, check_precision, 32)
        self.assertRaises(ValueError, check_precision, 'many')

    def test_write_config(self):
        path = os.path.join(self.scratch_dir, 'CANTORLAB_config.yaml')
        write_config(path)
        self.assertEqual(loadfn(path)['SCAN_CAP'], cl_config.SCAN_CAP)

    def test_overrides(self):
        path = os.path.join(self.scratch_dir, 'my_config.yaml')
        with open(path, 'w') as f:
            f.write('SCAN_CAP: 1000\n')
        with patch.dict(os.environ, {'CANTORLAB_CONFIG_FILE': path, 'CANTORLAB_PRECISION': '96'}):
            override_user_settings()
        self.assertEqual(cl_config.SCAN_CAP, 1000)
        self.assertEqual(cl_config.PRECISION_BITS, 96)

        with open(path, 'w') as f:
            f.write('NOT_A_SETTING: 1\n')
        with patch.dict(os.environ, {'CANTORLAB_CONFIG_FILE': path}):
            self.assertRaises(ValueError, override_user_settings)

    def test_scan_data(self):
        self.assertIs(ScanData(), ScanData())


if __name__ == '__main__':
    unittest.main()
