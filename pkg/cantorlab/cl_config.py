# coding: utf-8

from __future__ import unicode_literals

"""
A set of global constants for cantorlab (Python code as a config file).
"""

import os
from monty.serialization import loadfn, dumpfn
from monty.design_patterns import singleton

try:
    from yaml import CSafeDumper as Dumper
except ImportError:
    from yaml import SafeDumper as Dumper

__author__ = 'cantorlab developers'
__copyright__ = 'Copyright 2026, cantorlab developers'
__version__ = '0.1'
__maintainer__ = 'cantorlab developers'
__email__ = 'cantorlab@users.noreply.github.com'
__date__ = 'Oct 16, 2026'

PRECISION_BITS = 128  # mantissa bits of every high-precision value (HPReal / HPComplex)
MIN_PRECISION_BITS = 64  # smallest precision accepted from flags, env or config files

VERIFY_CAP = 10 ** 5  # below this index C_n is computed by both strategies and compared
SCAN_CAP = 10 ** 7  # largest (m+1)^ell0 the theorem infimum scan will walk without override
FALLBACK_SCAN_CAP = 10 ** 6  # largest table density_cover scans when greedy misses a target
THRESHOLD_SCAN_DEPTH = 8  # empirical k0/k1 are verified up to N = (m+1)^THRESHOLD_SCAN_DEPTH

TIE_RELATIVE_TOL = 1e-9  # float prefilter window; candidates inside it are re-resolved exactly
PRECISION_ESCALATIONS = 3  # interval comparisons run at P, 2P, 4P before the exact tie test

LOGDIST_REFINE_LEVELS = 8  # extra refinement levels for cells straddling gamma
LOGDIST_SLACK = 1e-12  # relative slack on float cell bounds in log_distribution

FOURIER_TARGET = 1e-7  # default quadrature depth makes (p+1)^-depth below this
CESARO_ORDER = 512  # default Fejer order for cesaro sums

MELLIN_MARGIN = 0.1  # Dirichlet series is evaluated only for Re s > alpha + margin
NEAR_POLE_THRESHOLD = 1e-8  # |(m+1)^(s-alpha) - 1| below this is treated as a pole
DIRICHLET_TERMS = 10 ** 5  # default T for the direct partial sums of the Dirichlet series
ZETA_BERNOULLI_TERMS = 8  # initial Euler-Maclaurin correction terms
ZETA_MAX_BERNOULLI_TERMS = 40  # Bernoulli terms grow up to this before the shift is doubled
ZETA_SHIFT_FACTOR = 2  # Euler-Maclaurin shift N = max(10, ZETA_SHIFT_FACTOR * |Im s|)
ZETA_MAX_SHIFT_DOUBLINGS = 6  # give up escalating after this many shift doublings
ZETA_COEFF_PRECISION = 53  # precision of the zeta values feeding the fluctuation coefficients

DEFAULT_SEED = 0  # seed of every sampled check unless --seed is given
OUTPUT_FORMAT = 'csv'  # default table format of the command line tool

STREAM_LOGLVL = 'WARNING'  # stream level of library loggers (the CLI retunes it with --loglvl)
CL_LOGGING_FORMAT = '%(asctime)s %(levelname)s %(message)s'  # format for loggers

YAML_STYLE = False  # controls whether YAML documents will be nested as braces or blocks (False = blocks)


def override_user_settings():
    module_dir = os.path.dirname(os.path.abspath(__file__))
    root_dir = os.path.dirname(module_dir)  # cantorlab root dir

    config_paths = []

    test_paths = [os.getcwd(), os.path.join(os.path.expanduser('~'), ".cantorlab"), root_dir]

    for p in test_paths:
        fp = os.path.join(p, 'CANTORLAB_config.yaml')
        if fp not in config_paths and os.path.exists(fp):
            config_paths.append(fp)

    if "CANTORLAB_CONFIG_FILE" in os.environ and os.environ["CANTORLAB_CONFIG_FILE"] not in \
            config_paths:
        config_paths.append(os.environ["CANTORLAB_CONFIG_FILE"])

    if len(config_paths) > 1:
        print("Found many potential paths for {}: {}\nChoosing as default: {}"
              .format("CANTORLAB_CONFIG_FILE", config_paths, config_paths[0]))

    if config_paths and os.path.exists(config_paths[0]):
        overrides = loadfn(config_paths[0]) or {}
        for key, v in overrides.items():
            if key not in globals() or key.upper() != key:
                raise ValueError('Invalid CANTORLAB_config file has unknown parameter: {}'.format(key))
            globals()[key] = v

    env_prec = os.environ.get("CANTORLAB_PRECISION")
    if env_prec:
        globals()["PRECISION_BITS"] = check_precision(env_prec)


def check_precision(value):
    """
    Parse and validate a precision setting.

    Args:
        value (int/str): mantissa bits

    Returns:
        (int) the precision
    """
    try:
        prec = int(value)
    except (TypeError, ValueError):
        raise ValueError('Precision must be an integer number of bits, got {!r}'.format(value))
    if prec < MIN_PRECISION_BITS:
        raise ValueError('Precision {} is below the minimum of {} bits'.format(prec, MIN_PRECISION_BITS))
    return prec


override_user_settings()


def config_to_dict():
    d = {}
    for k, v in globals().items():
        if k.upper() == k and not k.startswith('_'):
            d[k] = v
    return d


def write_config(path=None):
    path = os.path.join(os.path.expanduser('~'), ".cantorlab", 'CANTORLAB_config.yaml') if path is None \
        else path
    dumpfn(config_to_dict(), path, Dumper=Dumper)


@singleton
class ScanData(object):
    """
    This class stores runtime data that scans running in worker processes might want to access
    """

    def __init__(self):
        self.MULTIPROCESSING = None  # default single process scans
        self.NPROCS = 1  # number of worker processes of the current scan
