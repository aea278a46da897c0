# coding: utf-8

from __future__ import unicode_literals, division

"""
Cross-module invariant checks for one system, run by the 'verify' subcommand.

Every check returns a CheckResult; an exception inside a check is logged and turns into a failed
row instead of aborting the suite. Checks that need the theorem scope (f strictly increasing,
f(0) = 0, f(m) = p) are skipped for other systems.
"""

from collections import namedtuple, OrderedDict
from fractions import Fraction

import mpmath
import numpy as np
from mpmath import mp

from cantorlab import cl_config
from cantorlab.core.cantor_core import cantor_value, cantor_table, growth_bound_violations, \
    appending_m_violations
from cantorlab.core.distribution import density_cover, log_distribution_sweep, theta_densities
from cantorlab.core.extrema import compute_extrema, brute_force_extrema
from cantorlab.core.limit_function import lambda_value, density_d, fourier_coefficients
from cantorlab.core.mellin import hurwitz_zeta, pole_cancellation, delta_dirichlet_series, \
    delta_dirichlet_partial, s_exact, g_numerator, residual_report
from cantorlab.utilities.cl_utilities import get_cl_logger, log_exception

__author__ = 'cantorlab developers'
__copyright__ = 'Copyright 2026, cantorlab developers'
__version__ = '0.1'
__maintainer__ = 'cantorlab developers'
__email__ = 'cantorlab@users.noreply.github.com'
__date__ = 'Oct 16, 2026'

CheckResult = namedtuple('CheckResult', ['name', 'passed', 'detail'])


def check_strategies(sys, quick, prec):
    n_max = 2000 if quick else cl_config.VERIFY_CAP
    for n in range(n_max):
        cantor_value(sys, n, verify=True)
    return True, 'digit map and recurrence agree for n < {}'.format(n_max)


def check_growth(sys, quick, prec):
    n_max = sys.b ** (6 if quick else 10)
    bad = growth_bound_violations(sys, n_max) + appending_m_violations(sys, n_max // sys.b, prec)
    return not bad, '{} violations up to {}'.format(len(bad), n_max)


def check_extrema(sys, quick, prec):
    thm = compute_extrema(sys, prec)
    brute = brute_force_extrema(sys, sys.b ** (8 if quick else 10), prec)
    gap = max(abs(thm.supremum - brute.supremum), abs(thm.infimum - brute.infimum))
    return gap < 1e-10, 'sup={} inf={} gap to brute force {}'.format(
        mpmath.nstr(thm.supremum, 12), mpmath.nstr(thm.infimum, 12), mpmath.nstr(gap, 3))


def _sample_points(sys, count, seed):
    rng = np.random.RandomState(seed)
    scale = 1 << 40
    return [Fraction(int(v), scale) for v in rng.randint(scale, sys.b * scale, size=count)]


def check_lambda_scaling(sys, quick, prec):
    worst = 0
    for x in _sample_points(sys, 50 if quick else 1000, cl_config.DEFAULT_SEED):
        a = lambda_value(sys, x, prec=prec)
        b = lambda_value(sys, x * sys.b, prec=prec)
        slack = abs(a.value - b.value) - a.error - b.error
        worst = max(worst, slack)
    return worst <= mpmath.mpf(2) ** (8 - prec), 'largest excess over the bounds {}'.format(
        mpmath.nstr(worst, 3))


def check_self_similarity(sys, quick, prec):
    worst = 0
    for x in _sample_points(sys, 50 if quick else 1000, cl_config.DEFAULT_SEED + 1):
        x = x / sys.b
        a = density_d(sys, x, prec=prec)
        b = density_d(sys, x / sys.q, prec=prec)
        worst = max(worst, abs(a.value - b.value) - a.error - b.error)
    return worst <= mpmath.mpf(2) ** (8 - prec), 'largest excess over the bounds {}'.format(
        mpmath.nstr(worst, 3))


def check_theta(sys, quick, prec):
    report = theta_densities(sys, samples=200 if quick else 10 ** 4, prec=prec)
    ext = compute_extrema(sys, prec)
    with mp.workprec(prec):
        a = sys.alpha_at(prec)
        ident = max(abs(report.theta_lower * mpmath.power(ext.supremum, 1 / a) - 1),
                    abs(report.theta_upper * mpmath.power(ext.infimum, 1 / a) - 1))
    ok = report.within and ident < mpmath.mpf(2) ** (16 - prec)
    return ok, 'theta=[{}, {}], sampled [{}, {}]'.format(
        mpmath.nstr(report.theta_lower, 8), mpmath.nstr(report.theta_upper, 8),
        mpmath.nstr(report.sampled_min, 8), mpmath.nstr(report.sampled_max, 8))


def check_fourier_symmetry(sys, quick, prec):
    n_max = 20 if quick else 200
    coeffs = fourier_coefficients(sys, range(-n_max, n_max + 1))
    worst = 0
    for k in range(1, n_max + 1):
        pos, neg = coeffs[n_max + k], coeffs[n_max - k]
        worst = max(worst, abs(complex(neg.value) - complex(pos.value).conjugate()) -
                    neg.error - pos.error)
    return worst <= 1e-12, 'c_-n vs conj(c_n) for n <= {}: excess {:.3g}'.format(n_max,
                                                                               float(worst))


def check_zeta(sys, quick, prec):
    with mp.workprec(prec):
        errs = [abs(hurwitz_zeta(2, 1, prec) - mpmath.pi ** 2 / 6),
                abs(hurwitz_zeta(2, Fraction(1, 2), prec) - mpmath.pi ** 2 / 2)]
    pole = pole_cancellation(sys, prec=prec)
    return max(errs) < 1e-12 and pole.bounded, 'zeta(2) error {}, kernel gap at 1: {}'.format(
        mpmath.nstr(max(errs), 3), mpmath.nstr(pole.gap, 3))


def check_dirichlet(sys, quick, prec):
    s = sys.alpha_at(prec) + 1
    closed = delta_dirichlet_series(sys, s, prec=prec)
    partial = delta_dirichlet_partial(sys, s, 10 ** 4 if quick else cl_config.DIRICHLET_TERMS,
                                      prec=prec)
    gap = abs(closed.value - partial.value)
    return gap <= closed.error + partial.error, 'gap {} within tail {}'.format(
        mpmath.nstr(gap, 3), mpmath.nstr(partial.error, 3))


def check_summation(sys, quick, prec):
    n_max = 2000 if quick else cl_config.VERIFY_CAP
    total = 0
    for n, c in enumerate(cantor_table(sys, n_max).tolist()):
        if n >= 1 and s_exact(sys, n, verify=False) != total:
            return False, 'recurrence differs from the running sum at n={}'.format(n)
        total += int(c)
    return True, 'S(n) recurrence equals the running sum for n <= {}'.format(n_max)


def check_periodicity(sys, quick, prec):
    n_max = 2000 if quick else cl_config.VERIFY_CAP // sys.b
    factor = sys.b * sys.dst_base
    for n in range(1, n_max + 1):
        if g_numerator(sys, sys.b * n, verify=False) != factor * g_numerator(sys, n, verify=False):
            return False, 'G((m+1)n) != G(n) at n={}'.format(n)
    return True, 'G((m+1)n) == G(n) exactly for n <= {}'.format(n_max)


def check_mean_fluctuation(sys, quick, prec):
    lo = sys.b
    while lo < (512 if quick else 4096):
        lo *= sys.b
    report = residual_report(sys, range(lo, sys.b * lo), [], prec)
    return report.mean_gap < 0.01, 'log-mean of G {} vs c0 {}'.format(
        mpmath.nstr(report.mean_G, 8), mpmath.nstr(report.c0, 8))


def check_log_distribution(sys, quick, prec):
    ext = compute_extrema(sys, prec)
    lo, hi = float(ext.infimum), float(ext.supremum)
    gammas = [lo - 0.05] + [lo + (hi - lo) * j / 18 for j in range(19)]
    results = log_distribution_sweep(sys, gammas, 10 ** 3 if quick else 10 ** 6)
    values = [r.L_value for r in results]
    top = results[-1]
    ok = values == sorted(values) and values[0] == 0 and \
        top.L_value + top.error_estimate >= 1 - 1e-9
    return ok, 'L(sup) = {:.6f} with error {:.3g}'.format(float(top.L_value),
                                                          float(top.error_estimate))


def check_density(sys, quick, prec):
    report = density_cover(sys, 12 if quick else 100, 1e-3, sys.b ** 16, prec)
    return report.all_covered, '{} of {} targets covered'.format(
        len(report.grid) - len(report.failures), len(report.grid))


ALL_CHECKS = OrderedDict([
    ('strategies', (check_strategies, False)),
    ('growth_bounds', (check_growth, True)),
    ('extrema', (check_extrema, True)),
    ('lambda_scaling', (check_lambda_scaling, False)),
    ('self_similarity', (check_self_similarity, True)),
    ('theta', (check_theta, True)),
    ('fourier_symmetry', (check_fourier_symmetry, False)),
    ('zeta', (check_zeta, True)),
    ('dirichlet', (check_dirichlet, True)),
    ('summation', (check_summation, False)),
    ('periodicity', (check_periodicity, True)),
    ('mean_fluctuation', (check_mean_fluctuation, True)),
    ('log_distribution', (check_log_distribution, True)),
    ('density', (check_density, True)),
])  # name -> (check, needs theorem scope)


def run_suite(sys, quick=True, checks=None, prec=None):
    """
    Run the invariant checks on a system.

    Args:
        sys (CantorSystem)
        quick (bool): reduced sample sizes and scan ranges
        checks ([str]): names from ALL_CHECKS, default all
        prec (int): bits

    Returns:
        [CheckResult]
    """
    prec = prec if prec else cl_config.PRECISION_BITS
    results = []
    for name in (checks if checks else ALL_CHECKS):
        if name not in ALL_CHECKS:
            raise ValueError('Unknown check {}; choose from {}'.format(name, list(ALL_CHECKS)))
        check, scoped = ALL_CHECKS[name]
        if scoped and not sys.theorem_scope:
            _log().info('Skipping {} for {}: outside theorem scope'.format(name, sys))
            continue
        try:
            passed, detail = check(sys, quick, prec)
        except Exception as e:
            log_exception(_log(), 'Check {} raised'.format(name))
            passed, detail = False, '{}: {}'.format(e.__class__.__name__, e)
        if not passed:
            _log().error('Check {} failed: {}'.format(name, detail))
        results.append(CheckResult(name, bool(passed), detail))
    return results


def _log():
    return get_cl_logger('cantorlab.verify_suite')
