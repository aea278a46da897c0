# coding: utf-8

from __future__ import unicode_literals

import json
import os
import shutil
import tempfile
import unittest
from fractions import Fraction
from unittest import mock

import mpmath
import numpy as np

from cantorlab import cl_config
from cantorlab.utilities.cl_serializers import CLSerializable, serialize_cl, recursive_serialize, \
    recursive_dict, hp_to_str, hp_from_str

__author__ = 'cantorlab developers'
__copyright__ = 'Copyright 2026, cantorlab developers'
__version__ = '0.1'
__maintainer__ = 'cantorlab developers'
__email__ = 'cantorlab@users.noreply.github.com'
__date__ = 'Oct 16, 2026'


class BoundTestSerializer(CLSerializable):

    def __init__(self, value, error, label):
        self.value = value
        self.error = error
        self.label = label

    def __eq__(self, other):
        return (self.value, self.error, self.label) == (other.value, other.error, other.label)

    @serialize_cl
    @recursive_serialize
    def to_dict(self):
        return {'value': self.value, 'error': self.error, 'label': self.label}

    @classmethod
    def from_dict(cls, m_dict):
        with mpmath.workprec(128):
            return cls(hp_from_str(m_dict['value']), Fraction(m_dict['error']), m_dict['label'])


class SerializationTest(unittest.TestCase):

    def setUp(self):
        with mpmath.workprec(128):
            self.third = mpmath.mpf(1) / 3
        self.obj = BoundTestSerializer(self.third, Fraction(1, 2 ** 70), 'ternary \xe4')
        self.scratch_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.scratch_dir)

    def test_hp_to_str(self):
        s = hp_to_str(self.third)
        with mpmath.workprec(128):
            self.assertEqual(mpmath.mpf(s), self.third)
        self.assertEqual(hp_to_str(mpmath.mpf(2)), '2.0')

    def test_round_trip_at_configured_precision(self):
        # mpmath's ambient precision stays at 53 bits here
        with mock.patch.object(cl_config, 'PRECISION_BITS', 128):
            s = hp_to_str(self.third)
            self.assertGreaterEqual(len(s), 40)
            self.assertEqual(hp_from_str(s), self.third)
            with mpmath.workprec(128):
                z = mpmath.mpc(self.third, -2 * self.third)
            self.assertEqual(hp_from_str(recursive_dict(z)), z)
            self.assertEqual(hp_from_str(hp_to_str(2 ** 70 + 1)), 2 ** 70 + 1)
        with mpmath.workprec(256):
            x = mpmath.mpf(1) / 7
        self.assertEqual(hp_from_str(hp_to_str(x, 256), 256), x)

    def test_recursive_dict(self):
        d = recursive_dict({'f': Fraction(1, 3), 'c': mpmath.mpc(1, -2), 'big': 2 ** 60,
                            'small': -5, 'flag': True, 'np': np.int64(7),
                            'arr': np.array([1, 2]), 'nested': [self.obj]})
        self.assertEqual(d['f'], '1/3')
        self.assertEqual(len(d['c']), 2)
        self.assertEqual(d['big'], str(2 ** 60))
        self.assertEqual(d['small'], -5)
        self.assertIs(d['flag'], True)
        self.assertEqual(d['np'], 7)
        self.assertEqual(d['arr'], [1, 2])
        self.assertEqual(d['nested'][0]['_cl_name'], 'BoundTestSerializer')
        self.assertIsNone(recursive_dict(None))

    def test_hp_from_str(self):
        self.assertIsNone(hp_from_str(None))
        self.assertEqual(hp_from_str('0.5'), mpmath.mpf(0.5))
        self.assertEqual(hp_from_str(['1', '-2']), mpmath.mpc(1, -2))

    def test_formats(self):
        self.assertEqual(self.obj.to_dict()['_cl_name'], 'BoundTestSerializer')
        for fmt in ['json', 'yaml']:
            self.assertEqual(BoundTestSerializer.from_format(self.obj.to_format(fmt), fmt),
                             self.obj)
        self.assertEqual(json.loads(repr(self.obj))['label'], 'ternary \xe4')
        self.assertRaises(ValueError, self.obj.to_format, 'xml')

    def test_files(self):
        for ext in ['json', 'yaml']:
            path = os.path.join(self.scratch_dir, 'bound.' + ext)
            self.obj.to_file(path)
            self.assertEqual(BoundTestSerializer.from_file(path), self.obj)


if __name__ == '__main__':
    unittest.main()
