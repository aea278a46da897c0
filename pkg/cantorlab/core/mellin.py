# coding: utf-8

from __future__ import unicode_literals, division

"""
The summation function S(n) = sum_{1 <= k < n} C_k and its log-periodic fluctuation.

The Dirichlet series of Delta C_n has the closed form

    sum Delta C_n n^-s = (sum_r Delta f(r) zeta(s, r/(m+1)) - f(m) zeta(s)) / ((p+1)((m+1)^(s-alpha) - 1))

whose poles gamma_k = alpha + 2 pi i k / ln(m+1) give the Fourier coefficients of the fluctuation
F(u). This module evaluates the Hurwitz zeta function by Euler-Maclaurin summation, the closed
form and its direct partial sums, S(n) by two independent routes, the exactly periodic statistic
G(n) = (S(n) + B n) / n^(alpha+1), and the summation formula with every term reported separately.
"""

import math
from collections import namedtuple
from fractions import Fraction

import mpmath
import numpy as np
from mpmath import mp

from cantorlab import cl_config
from cantorlab.core.cantor_core import cantor_value, cantor_table, StrategyMismatch
from cantorlab.core.extrema import require_scope, supremum_thm, ScopeError
from cantorlab.utilities.cl_serializers import CLSerializable, serialize_cl, recursive_serialize, \
    hp_from_str
from cantorlab.utilities.cl_utilities import get_cl_logger
from cantorlab.utilities.hp_arith import BoundedValue, resolve_prec, fraction_to_mpf, power_alpha, \
    GUARD_BITS

__author__ = 'cantorlab developers'
__copyright__ = 'Copyright 2026, cantorlab developers'
__version__ = '0.1'
__maintainer__ = 'cantorlab developers'
__email__ = 'cantorlab@users.noreply.github.com'
__date__ = 'Oct 16, 2026'

DOUBLE_BITS = 53  # at or below this precision the direct zeta sum runs in numpy complex128

ZetaParams = namedtuple('ZetaParams', ['shift', 'bernoulli_terms', 'error', 'target'])
PoleCheck = namedtuple('PoleCheck', ['left', 'right', 'gap', 'limit', 'bounded'])
ResidualReport = namedtuple('ResidualReport', ['rows', 'mean_G', 'c0', 'mean_gap'])

_COEFF_CACHE = {}  # (system, k, prec) -> BoundedValue of the k-th fluctuation coefficient


class PoleAtOne(ValueError):
    pass


class NearPole(ValueError):
    pass


def _direct_sum(s, a, shift, prec):
    if prec <= DOUBLE_BITS:
        x = np.log(np.arange(shift, dtype=np.float64) + float(a))
        terms = np.exp(-complex(s) * x)
        return mpmath.mpc(math.fsum(terms.real), math.fsum(terms.imag))
    return mpmath.fsum(mpmath.power(k + a, -s) for k in range(shift))


def _bernoulli_terms(s, x, count):
    """
    B_2j/(2j)! s(s+1)...(s+2j-2) x^(-s-2j+1) for j = 1..count
    """
    terms = []
    rising = s
    xp = mpmath.power(x, -s - 1)
    x2 = x * x
    for j in range(1, count + 1):
        terms.append(mpmath.bernoulli(2 * j) / mpmath.factorial(2 * j) * rising * xp)
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        xp /= x2
    return terms


def hurwitz_zeta(s, a=1, prec=None, full_output=False):
    """
    zeta(s, a) = sum_{n >= 0} (n+a)^-s, continued to every s != 1 by Euler-Maclaurin summation:

        sum_{n<N} (n+a)^-s + (N+a)^(1-s)/(s-1) + (N+a)^-s/2 + Bernoulli corrections.

    N starts at max(10, ZETA_SHIFT_FACTOR |Im s|). The number of Bernoulli terms grows from
    ZETA_BERNOULLI_TERMS to ZETA_MAX_BERNOULLI_TERMS until the first omitted term is below the
    target, then N is doubled. The recorded error is that first omitted term (plus the roundoff
    of the direct sum when it runs in double precision); it is an estimate, not a certified bound.

    Args:
        s: complex argument
        a: positive real shift (int, Fraction, float or mpf)
        prec (int): bits
        full_output (bool): also return ZetaParams

    Returns:
        mpc, or (mpc, ZetaParams)
    """
    prec = resolve_prec(prec)
    wp = prec + GUARD_BITS
    with mp.workprec(wp):
        s = mpmath.mpc(s)
        a = fraction_to_mpf(a, wp)
        if a <= 0:
            raise ValueError('Hurwitz zeta needs a > 0, got {}'.format(a))
        if abs(s - 1) < mpmath.mpf(2) ** (8 - prec):
            raise PoleAtOne('zeta(s, a) has a pole at s = 1; got s = {}'.format(s))
        target = mpmath.mpf(2) ** (4 - prec)
        n0 = max(10, int(math.ceil(cl_config.ZETA_SHIFT_FACTOR * abs(float(s.imag)))))
        j_max = cl_config.ZETA_MAX_BERNOULLI_TERMS

        for doubling in range(cl_config.ZETA_MAX_SHIFT_DOUBLINGS + 1):
            shift = n0 << doubling
            direct = _direct_sum(s, a, shift, prec)
            x = shift + a
            head = mpmath.power(x, 1 - s) / (s - 1) + mpmath.power(x, -s) / 2
            terms = _bernoulli_terms(s, x, j_max + 1)
            scale = max(1, abs(direct))
            roundoff = shift * scale * mpmath.mpf(2) ** -52 if prec <= DOUBLE_BITS else 0
            for j in range(cl_config.ZETA_BERNOULLI_TERMS, j_max + 1):
                if abs(terms[j]) <= target * scale:
                    value = direct + head + mpmath.fsum(terms[:j])
                    params = ZetaParams(shift, j, abs(terms[j]) + roundoff, target * scale)
                    break
            else:
                _log().debug('zeta({}, {}): {} Bernoulli terms do not reach {}, doubling N={}'
                             .format(mpmath.nstr(s, 8), mpmath.nstr(a, 8), j_max,
                                     mpmath.nstr(target * scale, 3), shift))
                continue
            break
        else:
            value = direct + head + mpmath.fsum(terms[:j_max])
            params = ZetaParams(shift, j_max, abs(terms[j_max]) + roundoff, target * scale)
            _log().warning('zeta({}, {}) stopped at N={} with error estimate {}'.format(
                mpmath.nstr(s, 8), mpmath.nstr(a, 8), shift, mpmath.nstr(params.error, 3)))

    with mp.workprec(prec):
        value = +value
    return (value, params) if full_output else value


def _require_zero_start(sys, operation):
    if sys.f(0) != 0:
        raise ScopeError('{} needs f(0) = 0; {} has f(0) = {}'.format(operation, sys, sys.f(0)))


def kernel_numerator(sys, s, prec=None):
    """
    sum_{r=1}^m Delta f(r) zeta(s, r/(m+1)) - f(m) zeta(s). The residues at s = 1 cancel.

    Returns:
        BoundedValue
    """
    _require_zero_start(sys, 'kernel_numerator')
    prec = resolve_prec(prec)
    parts = []
    for r in range(1, sys.b):
        z, zp = hurwitz_zeta(s, Fraction(r, sys.b), prec, full_output=True)
        parts.append((sys.delta_f[r - 1], z, zp.error))
    z, zp = hurwitz_zeta(s, 1, prec, full_output=True)
    parts.append((-sys.f_m, z, zp.error))
    with mp.workprec(prec + GUARD_BITS):
        value = mpmath.fsum(c * z for c, z, _ in parts)
        error = mpmath.fsum(abs(c) * e for c, _, e in parts)
    with mp.workprec(prec):
        return BoundedValue(+value, +error)


def pole_cancellation(sys, eps=1e-6, prec=None):
    """
    Evaluate the kernel numerator at 1 - eps and 1 + eps. With the residues cancelling both sides
    approach sum_r Delta f(r) (-digamma(r/(m+1))) + f(m) digamma(1) and differ by O(eps).

    Returns:
        PoleCheck
    """
    prec = resolve_prec(prec)
    with mp.workprec(prec):
        eps = mpmath.mpf(eps)
    left = kernel_numerator(sys, 1 - eps, prec).value
    right = kernel_numerator(sys, 1 + eps, prec).value
    with mp.workprec(prec + GUARD_BITS):
        limit = sys.f_m * mpmath.digamma(1) - mpmath.fsum(
            sys.delta_f[r - 1] * mpmath.digamma(mpmath.mpf(r) / sys.b) for r in range(1, sys.b))
        gap = abs(left - right)
        bounded = gap <= mpmath.sqrt(eps) * max(1, abs(limit))
    if not bounded:
        _log().warning('Kernel of {} is not bounded near s = 1: gap {}'.format(
            sys, mpmath.nstr(gap, 6)))
    return PoleCheck(left, right, gap, limit, bounded)


def delta_dirichlet_series(sys, s, margin=None, prec=None):
    """
    The closed form of sum_{n >= 1} Delta C_n n^-s.

    Args:
        sys (CantorSystem): system with f(0) = 0
        s: complex argument with Re s > alpha + margin
        margin (float): default cl_config.MELLIN_MARGIN
        prec (int): bits

    Returns:
        BoundedValue (error propagated from the zeta estimates)
    """
    _require_zero_start(sys, 'delta_dirichlet_series')
    prec = resolve_prec(prec)
    margin = cl_config.MELLIN_MARGIN if margin is None else margin
    wp = prec + GUARD_BITS
    with mp.workprec(wp):
        s = mpmath.mpc(s)
        alpha = sys.alpha_at(wp)
        w = mpmath.power(sys.b, s - alpha) - 1
        if abs(w) < cl_config.NEAR_POLE_THRESHOLD:
            raise NearPole('s = {} is within {} of a pole alpha + 2 pi i k / ln(m+1)'.format(
                mpmath.nstr(s, 12), cl_config.NEAR_POLE_THRESHOLD))
        if s.real <= alpha + margin:
            raise ValueError('Re s = {} must exceed alpha + {} = {}'.format(
                mpmath.nstr(s.real, 12), margin, mpmath.nstr(alpha + margin, 12)))
    num = kernel_numerator(sys, s, wp)
    with mp.workprec(wp):
        den = sys.dst_base * w
        value = num.value / den
        error = num.error / abs(den)
    with mp.workprec(prec):
        return BoundedValue(+value, +error)


def _ratio_bound(sys):
    if sys.theorem_scope:
        return supremum_thm(sys).value
    # C_n < f(m) (p+1)^d / p and n >= (m+1)^(d-1) for a d-digit n
    return mpmath.mpf(sys.f_m) * sys.dst_base / sys.p


def delta_dirichlet_partial(sys, s, terms=None, prec=None):
    """
    sum_{n <= T} Delta C_n n^-s with the tail bound sup T^(alpha-sigma) (1 + |s|/(sigma-alpha)),
    sup bounding C_n/n^alpha.

    Args:
        sys (CantorSystem)
        s: complex argument with Re s > alpha
        terms (int): T, default cl_config.DIRICHLET_TERMS
        prec (int): bits

    Returns:
        BoundedValue (error is the tail bound)
    """
    prec = resolve_prec(prec)
    terms = terms if terms else cl_config.DIRICHLET_TERMS
    wp = prec + GUARD_BITS
    table = cantor_table(sys, terms)
    with mp.workprec(wp):
        s = mpmath.mpc(s)
        alpha = sys.alpha_at(wp)
        sigma = s.real
        if sigma <= alpha:
            raise ValueError('Partial sums need Re s > alpha, got {}'.format(mpmath.nstr(sigma, 12)))
        value = mpmath.fsum((int(table[n]) - int(table[n - 1])) * mpmath.power(n, -s)
                            for n in range(1, terms + 1))
        tail = _ratio_bound(sys) * mpmath.power(terms, alpha - sigma) * \
            (1 + abs(s) / (sigma - alpha))
    with mp.workprec(prec):
        return BoundedValue(+value, +tail)


def _s_recursive(sys, n):
    if n <= sys.b:
        return sum(sys.values[1:n])
    n1, r = divmod(n, sys.b)
    s = sys.b * sys.dst_base * _s_recursive(sys, n1) + n1 * sum(sys.values) - sys.f(0)
    if r:
        s += r * sys.dst_base * cantor_value(sys, n1, verify=False) + sum(sys.values[:r])
    return s


def _s_direct(sys, n):
    if n <= 1:
        return 0
    return sum(int(v) for v in cantor_table(sys, n - 1, 1).tolist())


def s_exact(sys, n, verify=None):
    """
    S(n) = sum_{1 <= k < n} C_k.

    Evaluated by the divide-and-conquer recurrence
        S((m+1)n') = (m+1)(p+1) S(n') + n' sum_e f(e) - f(0),
        S((m+1)n'+r) = S((m+1)n') + r (p+1) C_n' + sum_{e<r} f(e),
    and, when verify is on, by direct accumulation as well.

    Args:
        sys (CantorSystem)
        n (int): n >= 1
        verify (bool): default is n <= cl_config.VERIFY_CAP

    Returns:
        int
    """
    n = int(n)
    if n < 1:
        raise ValueError('S(n) needs n >= 1, got {}'.format(n))
    s = _s_recursive(sys, n)
    if (n <= cl_config.VERIFY_CAP) if verify is None else verify:
        s_direct = _s_direct(sys, n)
        if s_direct != s:
            raise StrategyMismatch('S({}) of {}: recurrence gives {}, direct sum {}'.format(
                n, sys, s, s_direct))
    return s


def periodic_invariant_B(sys):
    """
    B = sum_{r=1}^m f(r) / ((m+1) f(m)), the coefficient making (S(n) + Bn)/n^(alpha+1) invariant
    under n -> (m+1)n.

    Returns:
        Fraction
    """
    require_scope(sys, 'periodic_invariant_B')
    return Fraction(sys.sum_f, sys.b * sys.f_m)


def g_numerator(sys, n, verify=None):
    """
    (m+1) f(m) S(n) + n sum f(r). For theorem-scope systems
    g_numerator((m+1)n) == (m+1)(p+1) g_numerator(n).
    """
    require_scope(sys, 'g_numerator')
    return sys.b * sys.f_m * s_exact(sys, n, verify) + n * sys.sum_f


def periodic_statistic(sys, n, prec=None, verify=None):
    """
    G(n) = (S(n) + B n) / n^(alpha+1).

    Returns:
        mpf
    """
    prec = resolve_prec(prec)
    num = g_numerator(sys, n, verify)
    den = power_alpha(n, sys.b, sys.dst_base, prec + GUARD_BITS)
    with mp.workprec(prec + GUARD_BITS):
        value = mpmath.mpf(num) / (sys.b * sys.f_m * n) / den
    with mp.workprec(prec):
        return +value


def pole(sys, k, prec=None):
    """
    gamma_k = alpha + 2 pi i k / ln(m+1)
    """
    prec = resolve_prec(prec)
    with mp.workprec(prec):
        return mpmath.mpc(sys.alpha_at(prec), 2 * mpmath.pi * k / mpmath.log(sys.b))


def fluctuation_coefficient(sys, k, prec=None):
    """
    k-th Fourier coefficient of F:
    kernel_numerator(gamma_k) / (gamma_k (gamma_k + 1) (p+1) ln(m+1)).

    Cached per (system, k, precision); precision defaults to cl_config.ZETA_COEFF_PRECISION.

    Returns:
        BoundedValue
    """
    require_scope(sys, 'fluctuation_coefficient')
    prec = prec if prec else cl_config.ZETA_COEFF_PRECISION
    key = (sys, k, prec)
    if key not in _COEFF_CACHE:
        wp = prec + GUARD_BITS
        g = pole(sys, k, wp)
        num = kernel_numerator(sys, g, prec)
        with mp.workprec(wp):
            den = g * (g + 1) * sys.dst_base * mpmath.log(sys.b)
            value, error = num.value / den, num.error / abs(den)
        with mp.workprec(prec):
            _COEFF_CACHE[key] = BoundedValue(+value, +error)
    return _COEFF_CACHE[key]


def f_tail_bound(sys, K, prec=None):
    """
    Bound on sum_{|k| > K} |c_k| from |zeta(s, a)| <= zeta(alpha, a) on Re s = alpha and
    |gamma_k (gamma_k + 1)| >= (2 pi k / ln(m+1))^2.

    Returns:
        float
    """
    require_scope(sys, 'f_tail_bound')
    prec = prec if prec else cl_config.ZETA_COEFF_PRECISION
    alpha = sys.alpha_at(prec)
    zmax = sum(abs(sys.delta_f[r - 1]) * float(abs(hurwitz_zeta(alpha, Fraction(r, sys.b), prec)))
               for r in range(1, sys.b)) + sys.f_m * float(abs(hurwitz_zeta(alpha, 1, prec)))
    lb = math.log(sys.b)
    inv_squares = math.pi ** 2 / 6 if K < 1 else 1 / K
    return 2 * zmax * lb / (sys.dst_base * 4 * math.pi ** 2) * inv_squares


def f_truncated(sys, u, K, prec=None):
    """
    F_K(u) = sum_{|k| <= K} c_k exp(2 pi i k u), every coefficient evaluated separately.

    The value of the fluctuation is the real part; the imaginary part only reflects how well
    c_-k and conj(c_k) agree.

    Args:
        sys (CantorSystem): theorem-scope system
        u: real argument (period 1)
        K (int): truncation order >= 0
        prec (int): coefficient precision, default cl_config.ZETA_COEFF_PRECISION

    Returns:
        mpc
    """
    if K < 0:
        raise ValueError('K must be nonnegative, got {}'.format(K))
    prec = prec if prec else cl_config.ZETA_COEFF_PRECISION
    with mp.workprec(prec + GUARD_BITS):
        u = mpmath.mpf(u)
        # integer part of u does not change the value
        u = u - mpmath.floor(u)
        total = mpmath.fsum(fluctuation_coefficient(sys, k, prec).value *
                            mpmath.expjpi(2 * k * u) for k in range(-K, K + 1))
    with mp.workprec(prec):
        return +total


class SummationDiagnostics(CLSerializable):
    """
    One evaluation of the summation formula
        S(n) = n^(alpha+1) F(log_{m+1} n) - n^2 f(m)/(f(m)-m) - n sum f(r)/(f(m)(m+1))
               - (f(m)(m+1) - sum f(r))/(f(m)(m+1)+m)
    against the exact S(n), each term kept separately.
    """

    def __init__(self, n, S_exact, K, terms, F_value, G_n, prec=None):
        """
        Args:
            n (int)
            S_exact (int)
            K (int): truncation order of F
            terms (dict): 'periodic', 'quadratic', 'linear', 'constant' (mpf)
            F_value (mpc): F_K(log_{m+1} n)
            G_n (mpf): the periodic statistic
            prec (int): bits of the terms
        """
        self.n = n
        self.S_exact = S_exact
        self.K = K
        self.terms = terms
        self.F_value = F_value
        self.G_n = G_n
        self.prec = resolve_prec(prec)

    @property
    def formula_value(self):
        with mp.workprec(self.prec):
            return mpmath.fsum(self.terms[t] for t in
                               ('periodic', 'quadratic', 'linear', 'constant'))

    @property
    def residual(self):
        with mp.workprec(self.prec):
            return self.formula_value - self.S_exact

    def row(self):
        return {'n': self.n, 'K': self.K, 'S_exact': self.S_exact, 'formula': self.formula_value,
                'residual': self.residual, 'G_n': self.G_n, 'F': mpmath.re(self.F_value)}

    @serialize_cl
    @recursive_serialize
    def to_dict(self):
        return {'n': self.n, 'S_exact': self.S_exact, 'K': self.K, 'terms': self.terms,
                'F_value': self.F_value, 'G_n': self.G_n, 'prec': self.prec,
                'formula_value': self.formula_value, 'residual': self.residual}

    @classmethod
    def from_dict(cls, m_dict):
        prec = resolve_prec(m_dict.get('prec'))
        terms = {k: hp_from_str(v, prec) for k, v in m_dict['terms'].items()}
        F_value, G_n = hp_from_str(m_dict['F_value'], prec), hp_from_str(m_dict['G_n'], prec)
        return cls(int(m_dict['n']), int(m_dict['S_exact']), m_dict['K'], terms, F_value, G_n,
                   prec)


def s_formula(sys, n, K, prec=None, verify=None):
    """
    Evaluate the summation formula at n with F truncated at K.

    Args:
        sys (CantorSystem): theorem-scope system
        n (int): n >= 2
        K (int): truncation order
        prec (int): bits of the non-periodic terms
        verify (bool): passed to s_exact

    Returns:
        SummationDiagnostics
    """
    require_scope(sys, 's_formula')
    if n < 2:
        raise ValueError('s_formula needs n >= 2, got {}'.format(n))
    prec = resolve_prec(prec)
    s = s_exact(sys, n, verify)
    fm, m, sf = sys.f_m, sys.m, sys.sum_f
    with mp.workprec(prec + GUARD_BITS):
        u = mpmath.log(n) / mpmath.log(sys.b)
    F = f_truncated(sys, u, K)
    n_alpha = power_alpha(n, sys.b, sys.dst_base, prec + GUARD_BITS)
    with mp.workprec(prec):
        terms = {'periodic': n * n_alpha * mpmath.re(F),
                 'quadratic': -fraction_to_mpf(Fraction(n * n * fm, fm - m), prec),
                 'linear': -fraction_to_mpf(Fraction(n * sf, fm * sys.b), prec),
                 'constant': -fraction_to_mpf(Fraction(fm * sys.b - sf, fm * sys.b + m), prec)}
    G = periodic_statistic(sys, n, prec, verify=False)
    return SummationDiagnostics(n, s, K, terms, F, G, prec)


def residual_report(sys, n_range, K_list, prec=None):
    """
    Rows (n, K, S_exact, formula, residual, G_n, F) for every n and K, and the log-weighted mean
    of G_n (weights ln((n+1)/n)) compared with the constant coefficient c_0 of F.

    Args:
        sys (CantorSystem): theorem-scope system
        n_range (iterable): indices n >= 2
        K_list ([int]): truncation orders
        prec (int): bits

    Returns:
        ResidualReport (mean_G and mean_gap are None for an empty range)
    """
    require_scope(sys, 'residual_report')
    prec = resolve_prec(prec)
    ns = list(n_range)
    rows = []
    g_values = {}
    for n in ns:
        for K in K_list:
            diag = s_formula(sys, n, K, prec, verify=False)
            rows.append(diag.row())
            g_values[n] = diag.G_n
        if not K_list:
            g_values[n] = periodic_statistic(sys, n, prec, verify=False)
    c0 = mpmath.re(fluctuation_coefficient(sys, 0).value)
    if not ns:
        return ResidualReport(rows, None, c0, None)
    with mp.workprec(prec):
        weights = [mpmath.log(mpmath.mpf(n + 1) / n) for n in ns]
        mean_G = mpmath.fsum(w * g_values[n] for w, n in zip(weights, ns)) / mpmath.fsum(weights)
        gap = abs(mean_G - c0)
    _log().info('Log-weighted mean of G over {} indices: {} (c0 = {})'.format(
        len(ns), mpmath.nstr(mean_G, 10), mpmath.nstr(c0, 10)))
    return ResidualReport(rows, mean_G, c0, gap)


def _log():
    return get_cl_logger('cantorlab.mellin')
