# coding: utf-8

from __future__ import unicode_literals, division

"""
Supremum and infimum of C_n / n^alpha.

For theorem-scope systems (f strictly increasing, f(0)=0, f(m)=p) the supremum is the best
single digit and the infimum is a minimum of (C_n+1)/(n+1)^alpha over a finite scan whose length
is fixed by ell0. Quadratic maps x -> ax^2+bx have closed forms for both. brute_force_extrema()
is the oracle for all of these, and works for any valid system.

Every reported extremum is decided by exact comparisons of quotients num/base^alpha (see
cantorlab.utilities.hp_arith); floats only prefilter candidates.
"""

from collections import namedtuple
from fractions import Fraction

import mpmath
import numpy as np
from mpmath import mp

from cantorlab import cl_config
from cantorlab.core.cantor_core import cantor_value, cantor_table, ratio_table, to_digits
from cantorlab.utilities.cl_serializers import CLSerializable, serialize_cl, recursive_serialize, \
    hp_from_str
from cantorlab.utilities.cl_utilities import get_cl_logger
from cantorlab.utilities.hp_arith import best_quotient, compare_alpha_rational, resolve_prec, \
    power_alpha

__author__ = 'cantorlab developers'
__copyright__ = 'Copyright 2026, cantorlab developers'
__version__ = '0.1'
__maintainer__ = 'cantorlab developers'
__email__ = 'cantorlab@users.noreply.github.com'
__date__ = 'Oct 16, 2026'

Extremum = namedtuple('Extremum', ['value', 'witness', 'quotient'])
Thresholds = namedtuple('Thresholds', ['k0', 'k1', 'verified_up_to'])
FirstDigitMinimum = namedtuple('FirstDigitMinimum', ['value', 'witness', 'quotient', 'branch',
                                                     'xi', 'branch_agrees'])


class ScopeError(ValueError):
    pass


class ScanTooLarge(ValueError):
    pass


class NotFound(ValueError):
    pass


class ExtremaResult(CLSerializable):
    """
    Supremum/infimum of C_n/n^alpha with their witnesses.

    For method 'theorem' and 'closed_form' the infimum witness n is reported through the
    expression (C_n+1)/(n+1)^alpha. Brute-force results also carry the plain minimum of the
    ratio over the scan and the constant relating it to the infimum.
    """

    def __init__(self, supremum, infimum, sup_witness, inf_witness, ell0, method,
                 ell_empirical=None, ratio_min=None, ratio_min_witness=None,
                 convergence_constant=None, n_max=None):
        """
        Args:
            supremum (mpf)
            infimum (mpf)
            sup_witness (int): n with ratio(n) = supremum
            inf_witness (int): n with (C_n+1)/(n+1)^alpha = infimum
            ell0 (int): scan length exponent, None for brute force
            method (str): 'theorem', 'closed_form' or 'brute_force'
            ell_empirical (int): smallest ell whose scan n < (m+1)^ell attains the infimum
            ratio_min (mpf): min of ratio(n) over the brute-force range
            ratio_min_witness (int)
            convergence_constant (mpf): (ratio_min - infimum) * N^(alpha-1)
            n_max (int): brute-force range
        """
        if method not in ('theorem', 'closed_form', 'brute_force'):
            raise ValueError('Unknown extrema method {}'.format(method))
        self.supremum = supremum
        self.infimum = infimum
        self.sup_witness = sup_witness
        self.inf_witness = inf_witness
        self.ell0 = ell0
        self.method = method
        self.ell_empirical = ell_empirical
        self.ratio_min = ratio_min
        self.ratio_min_witness = ratio_min_witness
        self.convergence_constant = convergence_constant
        self.n_max = n_max

    def rows(self):
        """
        Returns:
            ([dict]) one table row with the columns of the extrema output
        """
        return [{'method': self.method, 'sup': self.supremum, 'sup_witness': self.sup_witness,
                 'inf': self.infimum, 'inf_witness': self.inf_witness, 'ell0': self.ell0}]

    @serialize_cl
    @recursive_serialize
    def to_dict(self):
        return {'supremum': self.supremum, 'infimum': self.infimum,
                'sup_witness': self.sup_witness, 'inf_witness': self.inf_witness,
                'ell0': self.ell0, 'method': self.method, 'ell_empirical': self.ell_empirical,
                'ratio_min': self.ratio_min, 'ratio_min_witness': self.ratio_min_witness,
                'convergence_constant': self.convergence_constant, 'n_max': self.n_max}

    @classmethod
    def from_dict(cls, m_dict):
        return ExtremaResult(hp_from_str(m_dict['supremum']), hp_from_str(m_dict['infimum']),
                             m_dict['sup_witness'], m_dict['inf_witness'], m_dict['ell0'],
                             m_dict['method'], m_dict.get('ell_empirical'),
                             hp_from_str(m_dict.get('ratio_min')), m_dict.get('ratio_min_witness'),
                             hp_from_str(m_dict.get('convergence_constant')), m_dict.get('n_max'))


def require_scope(sys, operation):
    if not sys.theorem_scope:
        raise ScopeError('{} needs f strictly increasing with f(0)=0 and f(m)=p; {} is outside '
                         'that scope'.format(operation, sys))


def max_slope(sys):
    """
    Returns:
        (Fraction) max over eps < m of (f(m) - f(eps))/(m - eps)
    """
    return max(Fraction(sys.f_m - sys.f(e), sys.m - e) for e in range(sys.m))


def ell0(sys, prec=None):
    """
    Smallest ell >= 1 with alpha (f(m)+1)^ell / (m+1)^(ell+1) >= max_slope(sys), decided as the
    exact comparison alpha >= max_slope * (m+1)^(ell+1) / (f(m)+1)^ell.

    Args:
        sys (CantorSystem)
        prec (int): starting precision of the comparisons

    Returns:
        int
    """
    require_scope(sys, 'ell0')
    slope = max_slope(sys)
    ell = 1
    while compare_alpha_rational(sys.b, sys.dst_base,
                                 slope * Fraction(sys.b ** (ell + 1), sys.q ** ell), prec) < 0:
        ell += 1
    return ell


def supremum_thm(sys, prec=None):
    """
    max over single digits eps of f(eps)/eps^alpha, ties to the smallest eps.

    Returns:
        Extremum
    """
    require_scope(sys, 'supremum_thm')
    witness, q = best_quotient([(e, sys.quotient(sys.f(e), e)) for e in range(1, sys.b)],
                               mode='max', prec=prec)
    return Extremum(q.value(prec), witness, q)


def _inf_form_floats(sys, n_lo, n_hi):
    table = cantor_table(sys, n_hi, n_lo).astype(np.float64)
    n = np.arange(n_lo, n_hi + 1, dtype=np.float64)
    return (table + 1.0) / np.power(n + 1.0, sys.alpha_float)


def _prefiltered(values, offset, mode):
    """
    Indices (shifted by offset) whose float value is within TIE_RELATIVE_TOL of the extremum.
    """
    tol = cl_config.TIE_RELATIVE_TOL
    if mode == 'min':
        best = np.min(values)
        keep = np.nonzero(values <= best * (1 + tol))[0]
    else:
        best = np.max(values)
        keep = np.nonzero(values >= best * (1 - tol))[0]
    return [int(i) + offset for i in keep]


def inf_form_quotient(sys, n):
    return sys.quotient(cantor_value(sys, n, verify=False) + 1, n + 1)


def scan_inf_form(sys, n_lo, n_hi, prec=None):
    """
    argmin of (C_n+1)/(n+1)^alpha over n_lo <= n <= n_hi, ties to the smallest n.

    Returns:
        Extremum
    """
    candidates = _prefiltered(_inf_form_floats(sys, n_lo, n_hi), n_lo, 'min')
    _log().debug('Inf-form scan [{}, {}]: {} candidates after prefilter'.format(
        n_lo, n_hi, len(candidates)))
    witness, q = best_quotient([(n, inf_form_quotient(sys, n)) for n in candidates], 'min', prec)
    return Extremum(q.value(prec), witness, q)


def scan_ratio(sys, n_lo, n_hi, mode='min', prec=None):
    """
    arg-extremum of C_n/n^alpha over n_lo <= n <= n_hi, ties to the smallest n.

    Returns:
        Extremum
    """
    candidates = _prefiltered(ratio_table(sys, n_hi, n_lo), max(n_lo, 1), mode)
    witness, q = best_quotient([(n, sys.quotient(cantor_value(sys, n, verify=False), n))
                                for n in candidates], mode, prec)
    return Extremum(q.value(prec), witness, q)


def infimum_thm(sys, prec=None, scan_cap=None, ell=None):
    """
    min over 1 <= n < (m+1)^ell0 of (C_n+1)/(n+1)^alpha.

    Args:
        sys (CantorSystem)
        prec (int): bits
        scan_cap (int): largest allowed (m+1)^ell0, default cl_config.SCAN_CAP
        ell (int): precomputed ell0

    Returns:
        Extremum
    """
    require_scope(sys, 'infimum_thm')
    ell = ell if ell else ell0(sys, prec)
    scan_cap = scan_cap if scan_cap else cl_config.SCAN_CAP
    limit = sys.b ** ell
    if limit > scan_cap:
        raise ScanTooLarge('Infimum scan needs n < {} = (m+1)^{}, above the cap {}; raise the '
                           'scan cap to run it'.format(limit, ell, scan_cap))
    _log().info('Infimum scan of {} over n < {}'.format(sys, limit))
    return scan_inf_form(sys, 1, limit - 1, prec)


def ell_empirical(sys, inf_witness):
    """
    Smallest ell whose scan n < (m+1)^ell already reaches the infimum, i.e. the digit count of the
    smallest infimum witness.
    """
    return len(to_digits(inf_witness, sys.b))


def compute_extrema(sys, prec=None, scan_cap=None):
    """
    Theorem supremum and infimum of a theorem-scope system.

    Returns:
        ExtremaResult
    """
    ell = ell0(sys, prec)
    sup = supremum_thm(sys, prec)
    inf = infimum_thm(sys, prec, scan_cap, ell)
    return ExtremaResult(sup.value, inf.value, sup.witness, inf.witness, ell, 'theorem',
                         ell_empirical=ell_empirical(sys, inf.witness))


def _closed_form_system(fam):
    sys = fam.validate()
    if not sys.theorem_scope:
        raise ScopeError('Closed forms need a strictly increasing map; {} induces {}'.format(
            fam, sys))
    return sys


def _alpha_at_least(sys, r, prec):
    return compare_alpha_rational(sys.b, sys.dst_base, r, prec) >= 0


def quadratic_sup_closed_form(fam, prec=None):
    """
    Case analysis of the supremum for f(x) = ax^2 + bx with T(x) = (2-alpha)ax - b(alpha-1).

    Returns:
        Extremum
    """
    sys = _closed_form_system(fam)
    a, b, m = fam.a, fam.b, fam.m

    def at(x):
        q = sys.quotient(fam.f(x), x)
        return Extremum(q.value(prec), x, q)

    if m == 1:
        return at(1)
    if a <= 0 or (a == 1 and b == 1):
        return at(1)
    if (a == 2 and b == -1 and m == 2) or (a == 1 and b == 0):
        return at(m)
    # alpha >= 2 iff p+1 >= (m+1)^2
    if sys.dst_base >= sys.b ** 2 and b >= 0:
        return at(1)
    # T(x) >= 0 iff alpha <= (2ax+b)/(ax+b); ax+b > 0 for strictly increasing maps
    if b < 0 and compare_alpha_rational(sys.b, sys.dst_base,
                                        Fraction(2 * a * m + b, a * m + b), prec) <= 0:
        return at(m)
    if _alpha_at_least(sys, Fraction(2 * a + b, a + b), prec):
        return at(1)
    alpha = sys.alpha_at(prec)
    with mp.workprec(resolve_prec(prec)):
        xi = int(mpmath.floor(-b * (alpha - 1) / (a * (alpha - 2))))
    candidates = [(x, sys.quotient(fam.f(x), x)) for x in (xi, xi + 1) if 1 <= x <= m]
    _log().debug('Supremum of {} between xi={} and xi+1'.format(fam, xi))
    witness, q = best_quotient(candidates, 'max', prec)
    return Extremum(q.value(prec), witness, q)


def _t_nonpositive(fam, sys, x, prec):
    # T(x) = (2ax+b)(x+m+2) - alpha((f(m)+1)f(1) + f(x) + 1) <= 0
    num = (2 * fam.a * x + fam.b) * (x + fam.m + 2)
    den = sys.q * fam.f(1) + fam.f(x) + 1
    return _alpha_at_least(sys, Fraction(num, den), prec)


def first_digit_minimum(fam, prec=None):
    """
    min over eps in {0..m} of (C_{m+eps+1}+1)/(m+eps+2)^alpha for a > 0, together with the branch
    of the T(x) criterion that predicts it: 'T(m)<=0' predicts (a+b+1)/2^alpha, 'xi' predicts the
    better of xi_m and xi_m+1, 'none' means no branch applies.

    Returns:
        FirstDigitMinimum
    """
    sys = _closed_form_system(fam)
    if fam.a <= 0:
        raise ValueError('first_digit_minimum needs a > 0, got {}'.format(fam))
    m = fam.m
    candidates = [(m + e + 1, inf_form_quotient(sys, m + e + 1)) for e in range(m + 1)]
    witness, q = best_quotient(candidates, 'min', prec)
    t_nonpos = [_t_nonpositive(fam, sys, x, prec) for x in range(m + 1)]
    branch, xi, predicted = 'none', None, None
    if t_nonpos[m]:
        branch = 'T(m)<=0'
        predicted = sys.quotient(fam.a + fam.b + 1, 2)
    else:
        for x in range(m):
            if t_nonpos[x] and not t_nonpos[x + 1]:
                branch, xi = 'xi', x
                predicted = best_quotient(candidates[x:x + 2], 'min', prec)[1]
                break
    agrees = predicted is None or predicted.compare(q, prec) == 0
    if not agrees:
        _log().warning('Branch {} of {} predicts {} but the direct minimum is {}'.format(
            branch, fam, predicted, q))
    return FirstDigitMinimum(q.value(prec), witness, q, branch, xi, agrees)


def quadratic_inf_closed_form(fam, prec=None):
    """
    1 if a <= 0 or m == 1 (the map is then linear on the digits), else
    min{1, first_digit_minimum}. The value 1 is witnessed by n = m, where
    (C_m+1)/(m+1)^alpha = (p+1)/(p+1).

    Returns:
        Extremum
    """
    sys = _closed_form_system(fam)
    one = (fam.m, sys.quotient(sys.dst_base, sys.b))
    if fam.a <= 0 or fam.m == 1:
        return Extremum(one[1].value(prec), one[0], one[1])
    fdm = first_digit_minimum(fam, prec)
    witness, q = best_quotient([one, (fdm.witness, fdm.quotient)], 'min', prec)
    return Extremum(q.value(prec), witness, q)


def quadratic_extrema(fam, prec=None):
    """
    Returns:
        (ExtremaResult) the closed-form supremum and infimum of a quadratic family
    """
    sys = _closed_form_system(fam)
    sup = quadratic_sup_closed_form(fam, prec)
    inf = quadratic_inf_closed_form(fam, prec)
    return ExtremaResult(sup.value, inf.value, sup.witness, inf.witness, ell0(sys, prec),
                         'closed_form')


def brute_force_extrema(sys, n_max, prec=None):
    """
    Exhaustive scan over 1 <= n <= n_max: max of ratio(n), min of (C_n+1)/(n+1)^alpha and,
    separately, min of ratio(n).

    Returns:
        ExtremaResult
    """
    if n_max < sys.b:
        raise ValueError('Brute force needs n_max >= m+1 = {}, got {}'.format(sys.b, n_max))
    prec = resolve_prec(prec)
    _log().info('Brute-force extrema of {} up to {}'.format(sys, n_max))
    sup = scan_ratio(sys, 1, n_max, 'max', prec)
    inf = scan_inf_form(sys, 1, n_max, prec)
    rmin = scan_ratio(sys, 1, n_max, 'min', prec)
    with mp.workprec(prec):
        const = (rmin.value - inf.value) * power_alpha(n_max, sys.b, sys.dst_base, prec) / n_max
    return ExtremaResult(sup.value, inf.value, sup.witness, inf.witness, None, 'brute_force',
                         ratio_min=rmin.value, ratio_min_witness=rmin.witness,
                         convergence_constant=const, n_max=n_max)


def _ratio_gt(sys, n1, n2, prec):
    q1 = sys.quotient(cantor_value(sys, n1, verify=False), n1)
    q2 = sys.quotient(cantor_value(sys, n2, verify=False), n2)
    return q1.compare(q2, prec) > 0


def _smallest_k(sys, violators, n_max, name):
    if not violators:
        return 0
    k = len(to_digits(max(violators), sys.b))
    if sys.b ** k > n_max:
        raise NotFound('No {} <= log_{}({}) qualifies; largest violation at n={}'.format(
            name, sys.b, n_max, max(violators)))
    return k


def empirical_thresholds(sys, n_max=None, prec=None):
    """
    Scan-verified thresholds:
        k0: for n >= (m+1)^k0, ratio((m+1)n+eps) <= ratio(n) for every eps in 1..m;
        k1: for n >= (m+1)^k1, ratio((m+1)n) > ratio((m+1)n+1) > ... > ratio((m+1)n+m).

    Args:
        sys (CantorSystem)
        n_max (int): verify up to this n, default (m+1)^THRESHOLD_SCAN_DEPTH

    Returns:
        Thresholds
    """
    require_scope(sys, 'empirical_thresholds')
    n_max = n_max if n_max else sys.b ** cl_config.THRESHOLD_SCAN_DEPTH
    tol = cl_config.TIE_RELATIVE_TOL
    r = ratio_table(sys, sys.b * n_max + sys.m)  # r[n-1] = ratio(n)
    n = np.arange(1, n_max + 1)
    parent = r[n - 1]
    child_idx = sys.b * n[:, None] + np.arange(sys.b)[None, :]
    children = r[child_idx - 1]

    v0 = set()
    for e in range(1, sys.b):
        clear = np.nonzero(children[:, e] > parent * (1 + tol))[0]
        v0.update(int(i) + 1 for i in clear)
        close = np.nonzero(np.abs(children[:, e] - parent) <= parent * tol)[0]
        for i in close:
            if _ratio_gt(sys, sys.b * (int(i) + 1) + e, int(i) + 1, prec):
                v0.add(int(i) + 1)

    v1 = set()
    for j in range(sys.m):
        left, right = children[:, j], children[:, j + 1]
        clear = np.nonzero(left < right * (1 - tol))[0]
        v1.update(int(i) + 1 for i in clear)
        close = np.nonzero(np.abs(left - right) <= right * tol)[0]
        for i in close:
            base = sys.b * (int(i) + 1)
            if not _ratio_gt(sys, base + j, base + j + 1, prec):
                v1.add(int(i) + 1)

    _log().debug('Threshold scan of {} up to {}: {} / {} violations'.format(
        sys, n_max, len(v0), len(v1)))
    return Thresholds(_smallest_k(sys, v0, n_max, 'k0'), _smallest_k(sys, v1, n_max, 'k1'), n_max)


def _log():
    return get_cl_logger('cantorlab.extrema')
