# coding: utf-8

from __future__ import unicode_literals, division

"""
How the ratios C_n/n^alpha fill the interval between their infimum and supremum:

    - greedy_subsequence() builds a subsequence converging to a target gamma by appending digits,
    - density_cover() checks a grid of targets against witnesses n <= N_max,
    - log_distribution() certifies the logarithmic distribution function L(gamma) cell by cell,
    - theta_densities() gives the lower and upper 1/alpha-densities of the self-similar measure,
    - empirical_cdf_probe() shows the counting fraction A_N/N oscillating with the phase of N.
"""

import math
from collections import namedtuple

import mpmath
import numpy as np
from mpmath import mp

from cantorlab import cl_config
from cantorlab.core.cantor_core import cantor_value, cantor_table, ratio_table, INT64_LIMIT
from cantorlab.core.extrema import compute_extrema, empirical_thresholds, brute_force_extrema, \
    require_scope, inf_form_quotient, NotFound
from cantorlab.core.limit_function import density_d
from cantorlab.utilities.cl_serializers import CLSerializable, serialize_cl, recursive_serialize, \
    hp_from_str
from cantorlab.utilities.cl_utilities import get_cl_logger
from cantorlab.utilities.hp_arith import resolve_prec, to_fraction, GUARD_BITS

__author__ = 'cantorlab developers'
__copyright__ = 'Copyright 2026, cantorlab developers'
__version__ = '0.1'
__maintainer__ = 'cantorlab developers'
__email__ = 'cantorlab@users.noreply.github.com'
__date__ = 'Oct 16, 2026'

GreedySequence = namedtuple('GreedySequence', ['indices', 'ratios', 'gamma', 'k2', 'distance',
                                               'non_increasing'])
CoverWitness = namedtuple('CoverWitness', ['gamma', 'n', 'ratio', 'distance', 'method', 'covered'])
ThetaReport = namedtuple('ThetaReport', ['theta_lower', 'theta_upper', 'sampled_min',
                                         'sampled_max', 'samples', 'within'])
CdfProbeReport = namedtuple('CdfProbeReport', ['gamma', 'rows', 'spread_by_k', 'spread'])

_REFINE_CELL_BUDGET = 1 << 22  # refinement stops before a level holds more uncertain cells


class OutOfInterval(ValueError):
    pass


def _ratio(sys, n, prec):
    return sys.quotient(cantor_value(sys, n, verify=False), n).value(prec)


def _check_interval(gamma, extrema):
    if not extrema.infimum < gamma < extrema.supremum:
        raise OutOfInterval('gamma = {} lies outside ({}, {})'.format(
            mpmath.nstr(gamma, 15), mpmath.nstr(extrema.infimum, 15),
            mpmath.nstr(extrema.supremum, 15)))


def threshold_k2(sys, prec=None):
    """
    k2 = max(k0, k1) from the scan-verified thresholds.
    """
    th = empirical_thresholds(sys, prec=prec)
    return max(th.k0, th.k1)


def _digit_start(sys, gamma, prec):
    eligible = [(r, e) for e, r in ((e, _ratio(sys, e, prec)) for e in range(1, sys.b))
                if r >= gamma]
    r1, n1 = min(eligible)
    return n1, r1


def bracketing_start(sys, gamma, prec=None, scan_cap=None):
    """
    Smallest n with (C_n+1)/(n+1)^alpha <= gamma <= C_n/n^alpha.

    Returns:
        (int, mpf) n and ratio(n)
    """
    tol = cl_config.TIE_RELATIVE_TOL
    scan_cap = scan_cap if scan_cap else cl_config.SCAN_CAP
    g = float(gamma)
    n_hi = sys.b - 1
    while True:
        table = cantor_table(sys, n_hi, 1).astype(np.float64)
        n = np.arange(1, n_hi + 1, dtype=np.float64)
        powers = np.power(n, sys.alpha_float)
        upper = table / powers
        lower = (table + 1.0) / np.power(n + 1.0, sys.alpha_float)
        for i in np.nonzero((lower <= g * (1 + tol)) & (upper >= g * (1 - tol)))[0]:
            cand = int(i) + 1
            r = _ratio(sys, cand, prec)
            if inf_form_quotient(sys, cand).value(prec) <= gamma <= r:
                return cand, r
        if n_hi >= scan_cap:
            raise NotFound('No n <= {} brackets gamma = {}'.format(n_hi, g))
        n_hi = min(sys.b * n_hi + sys.m, scan_cap)


def greedy_subsequence(sys, gamma, k_max, k2=None, extrema=None, n_max=None, start='bracket',
                       prec=None):
    """
    Subsequence n_1, n_2, ... with ratio(n_k) >= gamma decreasing to gamma.

    Each step appends the largest digit keeping the ratio >= gamma:
    n_{k+1} = (m+1) n_k + max{eps : ratio((m+1) n_k + eps) >= gamma}.

    The default start is NOT the single-digit construction. With start='bracket' (default) n_1
    is the smallest n with (C_n+1)/(n+1)^alpha <= gamma <= ratio(n). The step keeps gamma inside
    that bracket, whose width shrinks like 1/n, so the ratios converge to gamma.

    start='digit' is the single-digit construction: n_1 is the smallest digit whose ratio is the
    least digit ratio >= gamma, and it is multiplied by m+1 until it reaches (m+1)^k2 before the
    steps begin. That start can only reach targets in the bracket of n_1.

    In both modes the ratios are non-increasing once n >= (m+1)^k2.

    Args:
        sys (CantorSystem): theorem-scope system
        gamma: target in (infimum, supremum)
        k_max (int): number of terms
        k2 (int): threshold exponent, default from empirical_thresholds()
        extrema (ExtremaResult): precomputed extrema
        n_max (int): stop before an index exceeds this
        start (str): 'bracket' or 'digit'
        prec (int): bits

    Returns:
        GreedySequence
    """
    require_scope(sys, 'greedy_subsequence')
    prec = resolve_prec(prec)
    if k_max < 1:
        raise ValueError('Need at least one term, got k_max={}'.format(k_max))
    if start not in ('bracket', 'digit'):
        raise ValueError('Unknown start {}'.format(start))
    extrema = extrema if extrema else compute_extrema(sys, prec)
    with mp.workprec(prec):
        gamma = mpmath.mpf(gamma)
    _check_interval(gamma, extrema)
    k2 = threshold_k2(sys, prec) if k2 is None else k2

    if start == 'bracket':
        n1, r1 = bracketing_start(sys, gamma, prec)
        pad_until = 0
    else:
        n1, r1 = _digit_start(sys, gamma, prec)
        pad_until = sys.b ** k2
    indices, ratios = [n1], [r1]
    while len(indices) < k_max:
        n = indices[-1]
        # appending a 0 keeps the ratio: C_{(m+1)n} = (p+1) C_n
        nxt = sys.b * n
        if n >= pad_until:
            for e in range(sys.m, 0, -1):
                if _ratio(sys, sys.b * n + e, prec) >= gamma:
                    nxt += e
                    break
        if n_max and nxt > n_max:
            break
        indices.append(nxt)
        ratios.append(_ratio(sys, nxt, prec))
    tail = [r for n, r in zip(indices, ratios) if n >= sys.b ** k2]
    non_increasing = all(a >= b for a, b in zip(tail, tail[1:]))
    if not non_increasing:
        _log().warning('Greedy ratios for gamma={} increase somewhere; k2={} may be too small'
                       .format(mpmath.nstr(gamma, 15), k2))
    with mp.workprec(prec):
        distance = ratios[-1] - gamma
    return GreedySequence(indices, ratios, gamma, k2, distance, non_increasing)


class CoverReport(CLSerializable):
    """
    Witnesses n with |ratio(n) - gamma_j| <= epsilon for a grid of targets gamma_j.
    """

    def __init__(self, witnesses, epsilon, n_max):
        """
        Args:
            witnesses ([CoverWitness]): one per grid point, in grid order
            epsilon (mpf)
            n_max (int)
        """
        self.witnesses = list(witnesses)
        self.epsilon = epsilon
        self.n_max = n_max

    @property
    def grid(self):
        return [w.gamma for w in self.witnesses]

    @property
    def failures(self):
        return [w for w in self.witnesses if not w.covered]

    @property
    def all_covered(self):
        return not self.failures

    def rows(self):
        return [w._asdict() for w in self.witnesses]

    @serialize_cl
    @recursive_serialize
    def to_dict(self):
        return {'witnesses': self.rows(), 'epsilon': self.epsilon, 'n_max': self.n_max}

    @classmethod
    def from_dict(cls, m_dict):
        witnesses = [CoverWitness(hp_from_str(w['gamma']), int(w['n']), hp_from_str(w['ratio']),
                                  hp_from_str(w['distance']), w['method'], w['covered'])
                     for w in m_dict['witnesses']]
        return cls(witnesses, hp_from_str(m_dict['epsilon']), int(m_dict['n_max']))


def density_cover(sys, grid_size, epsilon, n_max, prec=None, scan_cap=None):
    """
    For gamma_j evenly spaced in [inf + epsilon, sup - epsilon], find n <= n_max with
    |ratio(n) - gamma_j| <= epsilon: first along the greedy subsequence (theorem scope), then by a
    scan of n <= min(n_max, scan_cap). Failures are recorded, not raised.

    Args:
        sys (CantorSystem)
        grid_size (int): number of targets, >= 2
        epsilon: tolerance, also the margin from the endpoints
        n_max (int): largest witness allowed
        prec (int): bits
        scan_cap (int): fallback scan limit, default cl_config.FALLBACK_SCAN_CAP

    Returns:
        CoverReport
    """
    if grid_size < 2:
        raise ValueError('grid_size must be at least 2, got {}'.format(grid_size))
    prec = resolve_prec(prec)
    scan_n = min(n_max, scan_cap if scan_cap else cl_config.FALLBACK_SCAN_CAP)
    with mp.workprec(prec):
        epsilon = mpmath.mpf(epsilon)
    if sys.theorem_scope:
        extrema = compute_extrema(sys, prec)
        k2 = threshold_k2(sys, prec)
    else:
        extrema = brute_force_extrema(sys, scan_n, prec)
        k2 = None
    with mp.workprec(prec):
        lo, hi = extrema.infimum + epsilon, extrema.supremum - epsilon
        if lo > hi:
            raise ValueError('epsilon = {} leaves no room between inf and sup'.format(epsilon))
        grid = [lo + (hi - lo) * j / (grid_size - 1) for j in range(grid_size)]
    _log().info('Covering {} targets of {} with epsilon={} and n <= {}'.format(
        grid_size, sys, mpmath.nstr(epsilon, 6), n_max))

    floats = None
    witnesses = []
    for gamma in grid:
        witness = None
        if k2 is not None and extrema.infimum < gamma < extrema.supremum:
            seq = greedy_subsequence(sys, gamma, k_max=10 ** 6, k2=k2, extrema=extrema,
                                     n_max=n_max, prec=prec)
            witness = CoverWitness(gamma, seq.indices[-1], seq.ratios[-1], abs(seq.distance),
                                   'greedy', abs(seq.distance) <= epsilon)
        if witness is None or not witness.covered:
            if floats is None:
                _log().info('Greedy missed a target; scanning ratios up to {}'.format(scan_n))
                floats = ratio_table(sys, scan_n)
            n = int(np.argmin(np.abs(floats - float(gamma)))) + 1
            r = _ratio(sys, n, prec)
            with mp.workprec(prec):
                dist = abs(r - gamma)
            if witness is None or dist < witness.distance:
                witness = CoverWitness(gamma, n, r, dist, 'scan', dist <= epsilon)
        if not witness.covered:
            _log().warning('No witness within {} for gamma={}'.format(
                mpmath.nstr(epsilon, 6), mpmath.nstr(gamma, 15)))
        witnesses.append(witness)
    return CoverReport(witnesses, epsilon, n_max)


class LogDistResult(CLSerializable):
    """
    L(gamma) = (1/ln(m+1)) int_{E_gamma} dx/x with E_gamma = {x in [1, m+1): lambda(x) <= gamma}.

    L_value is the measure of cells certified inside E_gamma; cells that could not be decided
    make up error_estimate, so the true L lies in [L_value, L_value + error_estimate].
    """

    def __init__(self, gamma, L_value, resolution, error_estimate, levels=0):
        self.gamma = gamma
        self.L_value = L_value
        self.resolution = resolution
        self.error_estimate = error_estimate
        self.levels = levels

    def rows(self):
        return [{'gamma': self.gamma, 'L': self.L_value, 'error': self.error_estimate,
                 'resolution': self.resolution}]

    @serialize_cl
    @recursive_serialize
    def to_dict(self):
        return {'gamma': self.gamma, 'L_value': self.L_value, 'resolution': self.resolution,
                'error_estimate': self.error_estimate, 'levels': self.levels}

    @classmethod
    def from_dict(cls, m_dict):
        return cls(float(m_dict['gamma']), m_dict['L_value'], m_dict['resolution'],
                   m_dict['error_estimate'], m_dict.get('levels', 0))


def _cell_depth(sys, resolution):
    k = 0
    while sys.m * sys.b ** k < resolution:
        k += 1
    return k


def _cell_bounds(sys, n, c):
    # lambda on [N, N+1)/(m+1)^k lies in [C_N/(N+1)^a, (C_N + f(m)/p)/N^a]
    a = sys.alpha_float
    nf = n.astype(np.float64)
    cf = c.astype(np.float64)
    return cf / np.power(nf + 1.0, a), (cf + sys.f_m / sys.p) / np.power(nf, a)


def _log_dist_cells(sys, gamma, n, c, depth):
    slack = cl_config.LOGDIST_SLACK
    f_arr = np.array(sys.values, dtype=np.int64)
    digits = np.arange(sys.b, dtype=np.int64)
    inside = []
    levels = 0
    for level in range(cl_config.LOGDIST_REFINE_LEVELS + 1):
        lo, hi = _cell_bounds(sys, n, c)
        ins = hi * (1 + slack) <= gamma
        out = lo * (1 - slack) > gamma
        inside.append(n[ins])
        unc = ~(ins | out)
        n, c = n[unc], c[unc]
        levels = level
        if not len(n) or level == cl_config.LOGDIST_REFINE_LEVELS:
            break
        if len(n) * sys.b > _REFINE_CELL_BUDGET or \
                sys.dst_base ** (depth + level + 3) >= INT64_LIMIT:
            break
        n = (sys.b * n[:, None] + digits[None, :]).ravel()
        c = (sys.dst_base * c[:, None] + f_arr[None, :]).ravel()
    ln_b = math.log(sys.b)
    weights_in = np.log1p(1.0 / np.concatenate(inside).astype(np.float64))
    weights_unc = np.log1p(1.0 / n.astype(np.float64))
    return math.fsum(weights_in) / ln_b, math.fsum(weights_unc) / ln_b, levels


def log_distribution_sweep(sys, gammas, resolution):
    """
    log_distribution() for a batch of gammas sharing one cell table.

    Returns:
        [LogDistResult]
    """
    if resolution < 100:
        raise ValueError('resolution must be at least 100, got {}'.format(resolution))
    depth = _cell_depth(sys, resolution)
    lo, hi = sys.b ** depth, sys.b ** (depth + 1)
    if sys.dst_base ** (depth + 2) >= INT64_LIMIT:
        raise ValueError('resolution {} is too fine for int64 cell tables'.format(resolution))
    n = np.arange(lo, hi, dtype=np.int64)
    c = cantor_table(sys, hi - 1, lo).astype(np.int64)
    _log().info('Log distribution of {} on {} cells for {} gammas'.format(sys, len(n),
                                                                         len(gammas)))
    results = []
    for gamma in gammas:
        value, error, levels = _log_dist_cells(sys, float(gamma), n, c, depth)
        results.append(LogDistResult(gamma, value, len(n), error, levels))
    return results


def log_distribution(sys, gamma, resolution):
    """
    L(gamma) on (m+1)-adic cells of [1, m+1) of depth k, with m (m+1)^k >= resolution.

    Cells whose lambda-bounds lie below gamma count fully; cells straddling gamma are split up to
    LOGDIST_REFINE_LEVELS more times and whatever stays undecided goes to error_estimate.

    Returns:
        LogDistResult
    """
    return log_distribution_sweep(sys, [gamma], resolution)[0]


def theta_densities(sys, samples=10 ** 4, depth=40, seed=None, tol=1e-2, prec=None):
    """
    Lower and upper 1/alpha-densities of the self-similar measure at 0:
    theta_lower = sup^(-1/alpha), theta_upper = inf^(-1/alpha).

    d(x) is sampled along x (f(m)+1)^-k for random x in [1/(f(m)+1), 1] and small k.

    Returns:
        ThetaReport
    """
    require_scope(sys, 'theta_densities')
    prec = resolve_prec(prec)
    extrema = compute_extrema(sys, prec)
    with mp.workprec(prec + GUARD_BITS):
        inv_alpha = 1 / sys.alpha_at(prec + GUARD_BITS)
        lower = mpmath.exp(-inv_alpha * mpmath.log(extrema.supremum))
        upper = mpmath.exp(-inv_alpha * mpmath.log(extrema.infimum))
    with mp.workprec(prec):
        lower, upper = +lower, +upper

    rng = np.random.RandomState(cl_config.DEFAULT_SEED if seed is None else seed)
    scale = 1 << 32
    first = -(-scale // sys.q)
    values = []
    for _ in range(samples):
        x = to_fraction(int(rng.randint(first, scale + 1))) / scale
        x /= sys.q ** int(rng.randint(0, 4))
        values.append(density_d(sys, x, depth, prec).value)
    if values:
        sampled_min, sampled_max = min(values), max(values)
        within = lower - tol <= sampled_min and sampled_max <= upper + tol
    else:
        sampled_min = sampled_max = None
        within = True
    return ThetaReport(lower, upper, sampled_min, sampled_max, samples, within)


def cdf_phases(sys, count=8):
    """
    Phases t_j = (m+1)^(j/count), j = 0..count-1, spread over one multiplicative period.
    """
    return [sys.b ** (j / count) for j in range(count)]


def empirical_cdf_probe(sys, gamma, window_exponents, phases=8, strict=True, prec=None):
    """
    A_N/N = #{n <= N : ratio(n) <= gamma}/N along N = floor(t (m+1)^k) for each phase t and k in
    window_exponents. The spread across phases at fixed k stays away from 0, which is how the
    missing limit shows up numerically.

    Args:
        sys (CantorSystem)
        gamma: threshold
        window_exponents ([int]): values of k
        phases (int): number of phases t
        strict (bool): raise OutOfInterval unless inf < gamma < sup (theorem scope only)
        prec (int): bits for gamma and for ratios too close to gamma to settle in float64

    Returns:
        CdfProbeReport
    """
    prec = resolve_prec(prec)
    with mp.workprec(prec):
        gamma = mpmath.mpf(gamma)
    if strict and sys.theorem_scope:
        _check_interval(gamma, compute_extrema(sys, prec))
    ts = cdf_phases(sys, phases)
    windows = [(k, t, int(math.floor(t * sys.b ** k))) for k in window_exponents for t in ts]
    if not windows:
        return CdfProbeReport(gamma, [], {}, 0.0)
    n_top = max(n for _, _, n in windows)
    table = ratio_table(sys, n_top)
    g = float(gamma)
    below = table <= g
    # float64 cannot order these against gamma
    near = np.abs(table - g) <= cl_config.TIE_RELATIVE_TOL * max(abs(g), 1.0)
    for i in np.nonzero(near)[0]:
        below[i] = _ratio(sys, int(i) + 1, prec) <= gamma
    below = np.cumsum(below)
    rows = []
    spread_by_k = {}
    for k, t, n in windows:
        frac = float(below[n - 1]) / n
        rows.append({'k': k, 't': t, 'N': n, 'A_N_over_N': frac})
        lo, hi = spread_by_k.get(k, (frac, frac))
        spread_by_k[k] = (min(lo, frac), max(hi, frac))
    spread_by_k = {k: hi - lo for k, (lo, hi) in spread_by_k.items()}
    return CdfProbeReport(gamma, rows, spread_by_k, max(spread_by_k.values()))


def _log():
    return get_cl_logger('cantorlab.distribution')
