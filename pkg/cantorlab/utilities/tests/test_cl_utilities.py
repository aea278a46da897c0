# coding: utf-8

from __future__ import unicode_literals

import logging
import os
import shutil
import tempfile
import unittest

from cantorlab import cl_config
from cantorlab.cl_config import ScanData
from cantorlab.utilities.cl_utilities import get_cl_logger, set_stream_level, log_multi, \
    log_fancy, log_exception, STREAM_HANDLERS

__author__ = 'cantorlab developers'
__copyright__ = 'Copyright 2026, cantorlab developers'
__version__ = '0.1'
__maintainer__ = 'cantorlab developers'
__email__ = 'cantorlab@users.noreply.github.com'
__date__ = 'Oct 16, 2026'


class ListHandler(logging.Handler):

    def __init__(self):
        logging.Handler.__init__(self)
        self.messages = []

    def emit(self, record):
        self.messages.append(record.getMessage())


class LoggerTest(unittest.TestCase):

    def setUp(self):
        self.scratch_dir = tempfile.mkdtemp()
        self.handler = ListHandler()
        self.logger = get_cl_logger('cantorlab.test_utilities')
        self.logger.addHandler(self.handler)

    def tearDown(self):
        self.logger.removeHandler(self.handler)
        shutil.rmtree(self.scratch_dir)

    def test_single_stream_handler(self):
        n = len(self.logger.handlers)
        self.assertIs(get_cl_logger('cantorlab.test_utilities'), self.logger)
        self.assertEqual(len(self.logger.handlers), n)

    def test_file_logs(self):
        logger = get_cl_logger('cantorlab.test_files', l_dir=self.scratch_dir)
        logger.error('scan failed')
        for h in logger.handlers:
            h.flush()
        files = sorted(os.listdir(self.scratch_dir))
        self.assertEqual(files, ['cantorlab_test_files-debug.log',
                                 'cantorlab_test_files-error.log'])

    def test_set_stream_level(self):
        old = cl_config.STREAM_LOGLVL
        try:
            set_stream_level('ERROR')
            self.assertEqual(STREAM_HANDLERS['cantorlab.test_utilities'].level, logging.ERROR)
            self.assertEqual(cl_config.STREAM_LOGLVL, 'ERROR')
        finally:
            set_stream_level(old)

    def test_log_multi(self):
        sd = ScanData()
        log_multi(self.logger, 'plain')
        sd.MULTIPROCESSING = True
        try:
            log_multi(self.logger, 'tagged', 'debug')
        finally:
            sd.MULTIPROCESSING = None
        self.assertEqual(self.handler.messages[0], 'plain')
        self.assertTrue(self.handler.messages[1].startswith('tagged : ('))

    def test_log_fancy(self):
        log_fancy(self.logger, ['first', 'second'])
        self.assertEqual(self.handler.messages, ['----|vvv|----', 'first\nsecond',
                                                 '----|^^^|----'])
        try:
            raise ValueError('bad digit')
        except ValueError:
            log_exception(self.logger, 'caught')
        self.assertIn('bad digit', self.handler.messages[-2])


if __name__ == '__main__':
    unittest.main()
