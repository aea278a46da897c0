# coding: utf-8

from __future__ import unicode_literals, division

"""
A runnable script for exploring base-conversion Cantor systems (a command-line interface to the
cantorlab library). Every subcommand computes one table and writes it as CSV, JSON or a console
table; the values are plot-ready x/y columns.
"""

from argparse import ArgumentParser, ArgumentTypeError
import contextlib
import csv
import io
import json
import sys
from collections import OrderedDict, namedtuple
from fractions import Fraction

import mpmath
import numpy as np
from mpmath import mp
from monty.serialization import loadfn
from tabulate import tabulate
from tqdm import tqdm

from cantorlab import __version__ as CL_VERSION
from cantorlab import cl_config
from cantorlab.core.cantor_core import system_from_table, QuadraticFamily, to_digits, map_word, \
    cantor_value, ratio
from cantorlab.core.distribution import density_cover, greedy_subsequence, \
    log_distribution_sweep, theta_densities, empirical_cdf_probe
from cantorlab.core.extrema import compute_extrema, brute_force_extrema, quadratic_extrema
from cantorlab.core.limit_function import lambda_value, cantor_function_g, density_d, \
    fourier_coefficients, fourier_decay_constant
from cantorlab.core.mellin import residual_report
from cantorlab.features.multi_scan import parallel_extrema_scan
from cantorlab.features.verify_suite import run_suite, ALL_CHECKS
from cantorlab.utilities.cl_serializers import CLSerializable, serialize_cl, recursive_serialize, \
    recursive_dict, hp_to_str
from cantorlab.utilities.cl_utilities import get_cl_logger, set_stream_level, log_exception
from cantorlab.utilities.hp_arith import fraction_to_mpf

__author__ = 'cantorlab developers'
__copyright__ = 'Copyright 2026, cantorlab developers'
__version__ = '0.1'
__maintainer__ = 'cantorlab developers'
__email__ = 'cantorlab@users.noreply.github.com'
__date__ = 'Oct 16, 2026'

OUTPUT_FORMATS = ('csv', 'json', 'table')
SYSTEM_KEYS = ('table', 'p', 'quad')
GLOBAL_KEYS = ('prec', 'scan_cap', 'nproc', 'format', 'output', 'seed', 'loglvl')

# per-subcommand parameters and their defaults; None means "derived from the system"
COMMAND_DEFAULTS = {
    'seq': OrderedDict([('n_min', 1), ('n_max', 100)]),
    'extrema': OrderedDict([('method', None), ('n_max', None)]),
    'lambda': OrderedDict([('samples', 200), ('depth', None)]),
    'gcantor': OrderedDict([('samples', 200), ('depth', None)]),
    'fourier': OrderedDict([('n_max', 20), ('depth', None)]),
    'dist': OrderedDict([('mode', 'cover'), ('grid', 20), ('epsilon', 1e-3), ('n_max', None),
                         ('gamma', None), ('terms', 20), ('samples', 1000),
                         ('k_list', [8, 10, 12]), ('phases', 8)]),
    'logdist': OrderedDict([('gammas', None), ('count', 20), ('resolution', 10 ** 5)]),
    'mellin': OrderedDict([('n_min', 2), ('n_max', 64), ('K', [10])]),
    'verify': OrderedDict([('full', False), ('checks', None)]),
}

SEQ_COLUMNS = ['n', 'digits_src', 'digits_dst', 'C_n', 'ratio']
EXTREMA_COLUMNS = ['method', 'sup', 'sup_witness', 'inf', 'inf_witness', 'ell0']
MELLIN_COLUMNS = ['n', 'K', 'S_exact', 'formula', 'residual', 'G_n']

CommandOutput = namedtuple('CommandOutput', ['columns', 'rows', 'results', 'failed', 'summary'])
CommandOutput.__new__.__defaults__ = (None,)  # summary: extra metadata keys


class UsageError(ValueError):
    pass


class IoError(ValueError):
    """
    Raised when a table cannot be written; the OSError is chained as the cause.
    """
    pass


class _Parser(ArgumentParser):

    def error(self, message):
        raise UsageError('{}\n{}'.format(message, self.format_usage().strip()))


def _int_list(s):
    try:
        return [int(v) for v in s.split(',') if v.strip()]
    except ValueError:
        raise ArgumentTypeError('expected comma-separated integers, got {!r}'.format(s))


def _float_list(s):
    try:
        return [float(v) for v in s.split(',') if v.strip()]
    except ValueError:
        raise ArgumentTypeError('expected comma-separated numbers, got {!r}'.format(s))


def _name_list(s):
    return [v.strip() for v in s.split(',') if v.strip()]


# converters applied to string values read from a --config file
_LIST_KEYS = {'table': _int_list, 'quad': _int_list, 'k_list': _int_list, 'K': _int_list,
              'gammas': _float_list, 'checks': _name_list}


class RunConfig(CLSerializable):
    """
    Everything a subcommand needs besides the subcommand name: the system, the precision, the
    scan caps, the output target and the seed.
    """

    def __init__(self, system_spec, p=None, prec=None, scan_cap=None, fmt=None, output=None,
                 seed=None, nproc=None, loglvl=None, params=None):
        """
        Args:
            system_spec (str): 'table:v0,...,vm' (needs p) or 'quad:a,b,m'
            p (int): largest target digit of a table system
            prec (int): bits, >= cl_config.MIN_PRECISION_BITS
            scan_cap (int): largest theorem infimum scan
            fmt (str): 'csv', 'json' or 'table'
            output (str): output path, None for stdout
            seed (int): seed of sampled checks
            nproc (int): worker processes for brute-force scans, None scans in this process
            loglvl (str): stream log level
            params (dict): subcommand parameters
        """
        kind, _, body = system_spec.partition(':')
        if kind not in ('table', 'quad') or not body:
            raise UsageError('System spec must be table:v0,...,vm or quad:a,b,m, got {!r}'.format(
                system_spec))
        try:
            self.values = _int_list(body)
        except ArgumentTypeError as e:
            raise UsageError(str(e))
        if kind == 'table' and p is None:
            raise UsageError('A table system needs --p')
        if kind == 'quad':
            if p is not None:
                raise UsageError('--p is derived for quad systems (p = am^2 + bm)')
            if len(self.values) != 3:
                raise UsageError('quad needs exactly a,b,m, got {}'.format(body))
        self.system_spec = system_spec
        self.kind = kind
        self.p = p
        try:
            self.prec = cl_config.check_precision(prec if prec is not None else
                                                  cl_config.PRECISION_BITS)
        except ValueError as e:
            raise UsageError(str(e))
        self.scan_cap = scan_cap
        self.fmt = fmt if fmt else cl_config.OUTPUT_FORMAT
        if self.fmt not in OUTPUT_FORMATS:
            raise UsageError('Unknown output format {}'.format(self.fmt))
        self.output = output
        self.seed = cl_config.DEFAULT_SEED if seed is None else int(seed)
        if nproc is not None and nproc < 1:
            raise UsageError('--nproc must be positive, got {}'.format(nproc))
        self.nproc = nproc
        self.loglvl = loglvl if loglvl else cl_config.STREAM_LOGLVL
        self.params = params if params else {}

    def family(self):
        if self.kind != 'quad':
            return None
        return QuadraticFamily(*self.values)

    def system(self):
        """
        Returns:
            CantorSystem
        """
        try:
            if self.kind == 'quad':
                return self.family().validate()
            return system_from_table(self.values, self.p)
        except ValueError as e:
            raise UsageError('Invalid system {}: {}'.format(self.label(), e))

    def label(self):
        if self.kind == 'quad':
            return self.system_spec
        return '{};p={}'.format(self.system_spec, self.p)

    def meta(self, system):
        """
        Returns:
            (OrderedDict) the metadata written with every table
        """
        return OrderedDict([('system', self.label()),
                            ('alpha', hp_to_str(system.alpha_at(self.prec), self.prec)),
                            ('alpha_expr', 'log({})/log({})'.format(system.dst_base, system.b)),
                            ('precision', self.prec),
                            ('seed', self.seed),
                            ('version', CL_VERSION)])

    @serialize_cl
    @recursive_serialize
    def to_dict(self):
        return {'system_spec': self.system_spec, 'p': self.p, 'prec': self.prec,
                'scan_cap': self.scan_cap, 'format': self.fmt, 'output': self.output,
                'seed': self.seed, 'nproc': self.nproc, 'loglvl': self.loglvl,
                'params': self.params}

    @classmethod
    def from_dict(cls, m_dict):
        return cls(m_dict['system_spec'], m_dict.get('p'), m_dict.get('prec'),
                   m_dict.get('scan_cap'), m_dict.get('format'), m_dict.get('output'),
                   m_dict.get('seed'), m_dict.get('nproc'), m_dict.get('loglvl'),
                   m_dict.get('params'))


def _build_parser():
    m_description = 'A command line interface to cantorlab. For more help on a specific ' \
                    'command, type "cantorlab <command> -h".'

    parser = _Parser(description=m_description)
    subparsers = parser.add_subparsers(help='command', dest='command')

    # the options shared by every subcommand; defaults are resolved after --config is read
    parent_parser = _Parser(add_help=False)
    parent_parser.add_argument('--table', help='digit map as f(0),...,f(m), e.g. 0,2 (needs --p)')
    parent_parser.add_argument('--p', type=int, help='largest target digit of a --table system')
    parent_parser.add_argument('--quad', help='quadratic family a,b,m (f(x) = ax^2 + bx)')
    parent_parser.add_argument('--prec', type=int,
                               help='precision in bits (default {}, env CANTORLAB_PRECISION)'
                               .format(cl_config.PRECISION_BITS))
    parent_parser.add_argument('--scan-cap', dest='scan_cap', type=int,
                               help='largest theorem infimum scan (default {})'.format(
                                   cl_config.SCAN_CAP))
    parent_parser.add_argument('--nproc', type=int,
                               help='worker processes for brute-force scans (default: none)')
    parent_parser.add_argument('--format', choices=OUTPUT_FORMATS, type=lambda s: s.lower(),
                               help='output format (default {})'.format(cl_config.OUTPUT_FORMAT))
    parent_parser.add_argument('-o', '--output', help='output file (default: stdout)')
    parent_parser.add_argument('--seed', type=int,
                               help='seed of sampled checks (default {})'.format(
                                   cl_config.DEFAULT_SEED))
    parent_parser.add_argument('-c', '--config',
                               help='YAML file with the same keys as the flags; flags win')
    parent_parser.add_argument('--loglvl', type=lambda s: s.upper(),
                               help='level to print log messages (default {})'.format(
                                   cl_config.STREAM_LOGLVL))
    parent_parser.add_argument('-s', '--silencer', help='shortcut to mute log messages',
                               action='store_true')

    seq_parser = subparsers.add_parser('seq', parents=[parent_parser],
                                       help='Cantor-integers C_n and ratios C_n/n^alpha')
    seq_parser.add_argument('--n-min', dest='n_min', type=int, help='first n (default 1)')
    seq_parser.add_argument('--n-max', dest='n_max', type=int, help='last n (default 100)')

    extrema_parser = subparsers.add_parser('extrema', parents=[parent_parser],
                                           help='supremum and infimum of C_n/n^alpha')
    extrema_parser.add_argument('--method', choices=['theorem', 'closed', 'brute', 'all'],
                                help="'theorem' (default in theorem scope), 'closed' (needs "
                                     "--quad), 'brute' (default otherwise) or 'all'")
    extrema_parser.add_argument('--n-max', dest='n_max', type=int,
                                help='brute-force range (default (m+1)^10)')

    lambda_parser = subparsers.add_parser('lambda', parents=[parent_parser],
                                          help='samples of the limit function on [1, m+1]')
    lambda_parser.add_argument('--samples', type=int, help='grid intervals (default 200)')
    lambda_parser.add_argument('--depth', type=int,
                               help='digit depth (default matches the precision)')

    g_parser = subparsers.add_parser('gcantor', parents=[parent_parser],
                                     help='samples of the Cantor function g and the density d '
                                          'on [0, 1]')
    g_parser.add_argument('--samples', type=int, help='grid intervals (default 200)')
    g_parser.add_argument('--depth', type=int, help='IFS levels (default matches the precision)')

    fourier_parser = subparsers.add_parser('fourier', parents=[parent_parser],
                                           help='logarithmic Fourier coefficients c_-N..c_N')
    fourier_parser.add_argument('--n-max', dest='n_max', type=int, help='N (default 20)')
    fourier_parser.add_argument('--depth', type=int,
                                help='quadrature cell depth (default from FOURIER_TARGET)')

    dist_parser = subparsers.add_parser('dist', parents=[parent_parser],
                                        help='density of the ratios in [inf, sup]')
    dist_parser.add_argument('--mode', choices=['cover', 'greedy', 'theta', 'cdf'],
                             help="'cover' a grid of targets (default), a 'greedy' "
                                  "subsequence, the 'theta' densities or the 'cdf' oscillation")
    dist_parser.add_argument('--grid', type=int, help='cover: number of targets (default 20)')
    dist_parser.add_argument('--epsilon', type=float, help='cover: tolerance (default 1e-3)')
    dist_parser.add_argument('--n-max', dest='n_max', type=int,
                             help='cover/greedy: largest witness (default (m+1)^16)')
    dist_parser.add_argument('--gamma', help='greedy/cdf: the target')
    dist_parser.add_argument('--terms', type=int, help='greedy: subsequence length (default 20)')
    dist_parser.add_argument('--samples', type=int, help='theta: sampled d-values (default 1000)')
    dist_parser.add_argument('--k-list', dest='k_list', type=_int_list,
                             help='cdf: window exponents (default 8,10,12)')
    dist_parser.add_argument('--phases', type=int, help='cdf: phases per window (default 8)')

    logdist_parser = subparsers.add_parser('logdist', parents=[parent_parser],
                                           help='logarithmic distribution function L(gamma)')
    logdist_parser.add_argument('--gammas', type=_float_list,
                                help='explicit gammas (default: a sweep from inf-0.05 to sup)')
    logdist_parser.add_argument('--count', type=int, help='sweep length (default 20)')
    logdist_parser.add_argument('--resolution', type=int, help='cell count (default 100000)')

    mellin_parser = subparsers.add_parser('mellin', parents=[parent_parser],
                                          help='summatory function S(n) against the formula')
    mellin_parser.add_argument('--n-min', dest='n_min', type=int, help='first n (default 2)')
    mellin_parser.add_argument('--n-max', dest='n_max', type=int, help='last n (default 64)')
    mellin_parser.add_argument('--K', type=_int_list, help='truncation orders (default 10)')

    verify_parser = subparsers.add_parser('verify', parents=[parent_parser],
                                          help='run the invariant suite; nonzero exit on failure')
    verify_parser.add_argument('--full', action='store_true', default=None,
                               help='acceptance-size samples and scans instead of quick ones')
    verify_parser.add_argument('--checks', type=_name_list,
                               help='comma-separated subset of: {}'.format(', '.join(ALL_CHECKS)))

    try:
        import argcomplete
        argcomplete.autocomplete(parser)
        # This supports bash autocompletion. To enable this, pip install
        # argcomplete, activate global completion, or add
        #      eval "$(register-python-argcomplete cantorlab)"
        # into your .bash_profile or .bashrc
    except ImportError:
        pass

    return parser


def _load_config(path):
    try:
        config = loadfn(path) or {}
    except (IOError, OSError) as e:
        raise UsageError('Cannot read config file {}: {}'.format(path, e))
    if not isinstance(config, dict):
        raise UsageError('Config file {} must hold a mapping'.format(path))
    return config


def _apply_config(args, config):
    known = set(SYSTEM_KEYS) | set(GLOBAL_KEYS) | set(COMMAND_DEFAULTS[args.command])
    system_given = any(getattr(args, k) is not None for k in SYSTEM_KEYS)
    for key, value in config.items():
        if key not in known:
            raise UsageError('Unknown key {} in config file for {}'.format(key, args.command))
        if key in SYSTEM_KEYS and system_given:
            continue
        if getattr(args, key, None) is None:
            if key in _LIST_KEYS and not isinstance(value, list):
                try:
                    value = _LIST_KEYS[key](str(value))
                except ArgumentTypeError as e:
                    raise UsageError('Config key {}: {}'.format(key, e))
            setattr(args, key, value)


def _system_spec(args):
    if args.table is not None and args.quad is not None:
        raise UsageError('Give either --table or --quad, not both')
    if args.table is None and args.quad is None:
        raise UsageError('A system is required: --table v0,...,vm --p P or --quad a,b,m')
    if args.table is not None:
        return 'table:{}'.format(','.join(str(v) for v in _as_list(args.table)))
    return 'quad:{}'.format(','.join(str(v) for v in _as_list(args.quad)))


def _as_list(value):
    return value if isinstance(value, list) else _int_list(str(value))


def parse_args(argv=None):
    """
    Parse a command line into the subcommand and its RunConfig.

    Args:
        argv ([str]): arguments without the program name, default sys.argv[1:]

    Returns:
        (str, RunConfig)
    """
    args = _build_parser().parse_args(argv)
    if not args.command:
        raise UsageError('Choose a command; type "cantorlab -h" for the list')
    if args.config:
        _apply_config(args, _load_config(args.config))
    params = OrderedDict()
    for key, default in COMMAND_DEFAULTS[args.command].items():
        value = getattr(args, key, None)
        params[key] = default if value is None else value
    loglvl = 'CRITICAL' if args.silencer else args.loglvl
    try:
        spec = _system_spec(args)
    except ArgumentTypeError as e:
        raise UsageError(str(e))
    return args.command, RunConfig(spec, args.p, args.prec, args.scan_cap, args.format,
                                   args.output, args.seed, args.nproc, loglvl, params)


def _progress(iterable, desc):
    return tqdm(iterable, desc=desc, file=sys.stderr, disable=not sys.stderr.isatty())


def _digit_string(word):
    sep = '' if word.base <= 10 else ':'
    return sep.join(str(d) for d in word.digits)


def _hp(value, prec):
    with mp.workprec(prec):
        return mpmath.mpf(value)


def run_seq(system, rc):
    n_min, n_max = rc.params['n_min'], rc.params['n_max']
    if n_min < 1 or n_max < n_min:
        raise UsageError('seq needs 1 <= n-min <= n-max, got {}..{}'.format(n_min, n_max))
    rows = []
    for n in _progress(range(n_min, n_max + 1), 'seq'):
        word = to_digits(n, system.b)
        rows.append({'n': n, 'digits_src': _digit_string(word),
                     'digits_dst': _digit_string(map_word(system, word)),
                     'C_n': cantor_value(system, n), 'ratio': ratio(system, n, rc.prec)})
    return CommandOutput(SEQ_COLUMNS, rows, None, False)


def run_extrema(system, rc):
    method = rc.params['method']
    if not method:
        method = 'theorem' if system.theorem_scope else 'brute'
    if method == 'all':
        methods = (['theorem'] if system.theorem_scope else []) + \
                  (['closed'] if rc.family() else []) + ['brute']
    else:
        methods = [method]
    results = []
    for m in methods:
        if m == 'theorem':
            results.append(compute_extrema(system, rc.prec, rc.scan_cap))
        elif m == 'closed':
            if not rc.family():
                raise UsageError('Closed forms need a --quad system')
            results.append(quadratic_extrema(rc.family(), rc.prec))
        else:
            n_max = rc.params['n_max'] if rc.params['n_max'] else system.b ** 10
            if rc.nproc:
                results.append(parallel_extrema_scan(system, n_max, rc.nproc, prec=rc.prec))
            else:
                results.append(brute_force_extrema(system, n_max, rc.prec))
    rows = [row for r in results for row in r.rows()]
    return CommandOutput(EXTREMA_COLUMNS, rows, results, False)


def run_lambda(system, rc):
    samples = rc.params['samples']
    if samples < 1:
        raise UsageError('Need at least one sample interval, got {}'.format(samples))
    rows = []
    for j in _progress(range(samples + 1), 'lambda'):
        x = Fraction(samples + system.m * j, samples)
        v = lambda_value(system, x, rc.params['depth'], rc.prec)
        rows.append({'x': fraction_to_mpf(x, rc.prec), 'lambda': v.value, 'error': v.error})
    return CommandOutput(['x', 'lambda', 'error'], rows, None, False)


def run_gcantor(system, rc):
    samples = rc.params['samples']
    if samples < 1:
        raise UsageError('Need at least one sample interval, got {}'.format(samples))
    rows = []
    for j in _progress(range(samples + 1), 'gcantor'):
        t = Fraction(j, samples)
        g = cantor_function_g(system, t, rc.params['depth'], prec=rc.prec)
        d = density_d(system, t, rc.params['depth'], rc.prec).value if t else None
        rows.append({'t': fraction_to_mpf(t, rc.prec), 'g': g.value, 'g_error': g.error, 'd': d})
    return CommandOutput(['t', 'g', 'g_error', 'd'], rows, None, False)


def run_fourier(system, rc):
    n_max = rc.params['n_max']
    if n_max < 0:
        raise UsageError('--n-max must be nonnegative, got {}'.format(n_max))
    coeffs = fourier_coefficients(system, range(-n_max, n_max + 1), rc.params['depth'])
    if n_max:
        _log().info('max |n||c_n| = {:.6g}'.format(fourier_decay_constant(coeffs)))
    rows = [{'n': c.index, 're': mpmath.re(c.value), 'im': mpmath.im(c.value), 'error': c.error,
             'richardson': c.richardson} for c in coeffs]
    return CommandOutput(['n', 're', 'im', 'error', 'richardson'], rows, None, False)


def _required_gamma(rc, mode):
    if rc.params['gamma'] is None:
        raise UsageError('dist --mode {} needs --gamma'.format(mode))
    return _hp(rc.params['gamma'], rc.prec)


def run_dist(system, rc):
    mode = rc.params['mode']
    n_max = rc.params['n_max'] if rc.params['n_max'] else system.b ** 16
    if mode == 'cover':
        report = density_cover(system, rc.params['grid'], rc.params['epsilon'], n_max, rc.prec)
        columns = ['gamma', 'n', 'ratio', 'distance', 'method', 'covered']
        return CommandOutput(columns, report.rows(), [report], False)
    if mode == 'greedy':
        gamma = _required_gamma(rc, mode)
        seq = greedy_subsequence(system, gamma, rc.params['terms'], n_max=n_max, prec=rc.prec)
        with mp.workprec(rc.prec):
            rows = [{'k': k, 'n': n, 'ratio': r, 'distance': r - gamma}
                    for k, (n, r) in enumerate(zip(seq.indices, seq.ratios), 1)]
        return CommandOutput(['k', 'n', 'ratio', 'distance'], rows, None, False)
    if mode == 'theta':
        report = theta_densities(system, rc.params['samples'], seed=rc.seed, prec=rc.prec)
        columns = ['theta_lower', 'theta_upper', 'sampled_min', 'sampled_max', 'samples', 'within']
        return CommandOutput(columns, [report._asdict()], None, False)
    gamma = _required_gamma(rc, mode)
    report = empirical_cdf_probe(system, gamma, rc.params['k_list'], rc.params['phases'],
                                 prec=rc.prec)
    for k, spread in sorted(report.spread_by_k.items()):
        _log().info('k={}: spread of A_N/N across phases {:.4f}'.format(k, spread))
    return CommandOutput(['k', 't', 'N', 'A_N_over_N'], report.rows, None, False)


def run_logdist(system, rc):
    gammas = rc.params['gammas']
    if not gammas:
        if system.theorem_scope:
            ext = compute_extrema(system, rc.prec, rc.scan_cap)
        else:
            ext = brute_force_extrema(system, system.b ** 10, rc.prec)
        count = rc.params['count']
        if count < 2:
            raise UsageError('--count must be at least 2, got {}'.format(count))
        gammas = np.linspace(float(ext.infimum) - 0.05, float(ext.supremum), count).tolist()
    results = log_distribution_sweep(system, gammas, rc.params['resolution'])
    rows = [row for r in results for row in r.rows()]
    return CommandOutput(['gamma', 'L', 'error', 'resolution'], rows, results, False)


def run_mellin(system, rc):
    n_min, n_max, K_list = rc.params['n_min'], rc.params['n_max'], rc.params['K']
    if n_min < 2 or n_max < n_min:
        raise UsageError('mellin needs 2 <= n-min <= n-max, got {}..{}'.format(n_min, n_max))
    if not K_list:
        raise UsageError('mellin needs at least one truncation order --K')
    report = residual_report(system, range(n_min, n_max + 1), K_list, rc.prec)
    summary = OrderedDict([('mean_G', report.mean_G), ('c0', report.c0),
                           ('mean_gap', report.mean_gap)])
    return CommandOutput(MELLIN_COLUMNS, report.rows, None, False, summary)


def run_verify(system, rc):
    unknown = [c for c in (rc.params['checks'] or []) if c not in ALL_CHECKS]
    if unknown:
        raise UsageError('Unknown checks {}; choose from {}'.format(unknown, list(ALL_CHECKS)))
    results = run_suite(system, quick=not rc.params['full'], checks=rc.params['checks'],
                        prec=rc.prec)
    rows = [r._asdict() for r in results]
    return CommandOutput(['name', 'passed', 'detail'], rows, None,
                         not all(r.passed for r in results))


def _cell(value):
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, mpmath.mpf):
        return hp_to_str(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _meta_line(meta):
    items = []
    for k, v in meta.items():
        v = _cell(v)
        items.append('{}="{}"'.format(k, v) if ',' in v else '{}={}'.format(k, v))
    return '# ' + ','.join(items)


def _format_csv(columns, rows, meta):
    out = io.StringIO()
    out.write(_meta_line(meta) + '\n')
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row[c]) for c in columns])
    return out.getvalue()


def _format_json(columns, rows, meta, results):
    doc = OrderedDict([('meta', recursive_dict(meta)),
                       ('rows', [OrderedDict((c, recursive_dict(row[c])) for c in columns)
                                 for row in rows])])
    if results:
        doc['results'] = [r.to_dict() for r in results]
    return json.dumps(doc, indent=2) + '\n'


def _format_console(columns, rows, meta):
    table = [[_cell(row[c]) for c in columns] for row in rows]
    # numparse off: tabulate would round the high-precision strings to doubles
    return '{}\n{}\n'.format(_meta_line(meta), tabulate(table, headers=columns,
                                                       disable_numparse=True))


def emit_table(rows, fmt, path=None, columns=None, meta=None, results=None):
    """
    Write one table.

    Args:
        rows ([dict]): homogeneous rows
        fmt (str): 'csv', 'json' or 'table'
        path (str): output file, None for stdout
        columns ([str]): column order, default the keys of the first row
        meta (dict): metadata for the CSV comment line or the JSON 'meta' object
        results ([CLSerializable]): result objects embedded in JSON output

    Returns:
        (int) exit status 0
    """
    columns = list(columns) if columns else (list(rows[0]) if rows else [])
    for row in rows:
        missing = [c for c in columns if c not in row]
        if missing:
            raise ValueError('Row {} lacks the columns {}'.format(row, missing))
    meta = meta if meta else OrderedDict()
    if fmt == 'csv':
        text = _format_csv(columns, rows, meta)
    elif fmt == 'json':
        text = _format_json(columns, rows, meta, results)
    elif fmt == 'table':
        text = _format_console(columns, rows, meta)
    else:
        raise UsageError('Unknown output format {}'.format(fmt))

    if path is None:
        sys.stdout.write(text)
        return 0
    try:
        with io.open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
    except (IOError, OSError) as e:
        raise IoError('Cannot write {}: {}'.format(path, e)) from e
    return 0


@contextlib.contextmanager
def _run_settings(rc):
    # library calls without an explicit prec/seed read these at call time
    saved = {k: getattr(cl_config, k) for k in ('PRECISION_BITS', 'DEFAULT_SEED', 'SCAN_CAP',
                                                'STREAM_LOGLVL')}
    cl_config.PRECISION_BITS = rc.prec
    cl_config.DEFAULT_SEED = rc.seed
    if rc.scan_cap:
        cl_config.SCAN_CAP = rc.scan_cap
    set_stream_level(rc.loglvl)
    try:
        yield
    finally:
        set_stream_level(saved.pop('STREAM_LOGLVL'))
        for k, v in saved.items():
            setattr(cl_config, k, v)


def main(argv=None):
    """
    Run one subcommand.

    Returns:
        (int) exit status: 0 on success, 2 for usage errors, 1 for failures (including failed
        verify checks)
    """
    try:
        command, rc = parse_args(argv)
        system = rc.system()
    except UsageError as e:
        sys.stderr.write('cantorlab: error: {}\n'.format(e))
        return 2

    with _run_settings(rc):
        _log().info('{} on {} at {} bits'.format(command, rc.label(), rc.prec))
        try:
            out = COMMANDS[command](system, rc)
            meta = rc.meta(system)
            meta.update(out.summary or {})
            emit_table(out.rows, rc.fmt, rc.output, out.columns, meta, out.results)
        except UsageError as e:
            sys.stderr.write('cantorlab: error: {}\n'.format(e))
            return 2
        except (ValueError, ArithmeticError, AssertionError) as e:
            log_exception(_log(), '{} failed for {}'.format(command, rc.label()))
            sys.stderr.write('cantorlab: {}: {}\n'.format(e.__class__.__name__, e))
            return 1
    if out.failed:
        sys.stderr.write('cantorlab: {} failed\n'.format(command))
        return 1
    return 0


COMMANDS = OrderedDict([('seq', run_seq), ('extrema', run_extrema), ('lambda', run_lambda),
                        ('gcantor', run_gcantor), ('fourier', run_fourier), ('dist', run_dist),
                        ('logdist', run_logdist), ('mellin', run_mellin),
                        ('verify', run_verify)])


def cantorlab():
    sys.exit(main())


def _log():
    return get_cl_logger('cantorlab.cli')


if __name__ == '__main__':
    cantorlab()
