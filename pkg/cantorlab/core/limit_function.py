# coding: utf-8

from __future__ import unicode_literals, division

"""
The limit function lambda(x) = lim C_{(m+1)^k x} / ((m+1)^k x)^alpha and its relatives:

    - D(x), the digit series sum f(eps_r) (p+1)^-r of the fractional digits of x,
    - the generalized Cantor function g(t) = mu([0, t]) of the system's self-similar measure,
    - the density d(x) = g(x) / x^(1/alpha),
    - continuity at (m+1)-rationals, Holder behaviour at normal points,
    - the logarithmic Fourier coefficients of lambda and their Fejer sums.

Reals enter as FractionalExpansion objects. Canonical expansions never end in a tail of m's, so
lambda at an (m+1)-rational is its right-continuous value.
"""

import math
from collections import Counter, namedtuple
from fractions import Fraction

import mpmath
import numpy as np
from mpmath import mp

from cantorlab import cl_config
from cantorlab.core.cantor_core import cantor_value, cantor_table, IfsSystem
from cantorlab.utilities.cl_serializers import CLSerializable, serialize_cl, recursive_serialize, \
    hp_from_str
from cantorlab.utilities.cl_utilities import get_cl_logger
from cantorlab.utilities.hp_arith import BoundedValue, resolve_prec, to_fraction, fraction_to_mpf, \
    power_alpha, GUARD_BITS

__author__ = 'cantorlab developers'
__copyright__ = 'Copyright 2026, cantorlab developers'
__version__ = '0.1'
__maintainer__ = 'cantorlab developers'
__email__ = 'cantorlab@users.noreply.github.com'
__date__ = 'Oct 16, 2026'

ContinuityReport = namedtuple('ContinuityReport', ['classification', 'value', 'left_limit', 'jump',
                                                   'error', 'last_digit'])
HolderReport = namedtuple('HolderReport', ['slope', 'lambda_slope', 'points', 'block_deviation',
                                           'normal_like', 'meets_floor'])


class NotRational(ValueError):
    pass


class DegenerateGrid(ValueError):
    pass


class FractionalExpansion(object):
    """
    A base-(m+1) expansion [integer_part . eps_1 eps_2 ...] of a real x >= 0.

    Rationals are stored exactly and their digits come from long division, so the expansion is
    canonical (no tail of m's). Irrationals are given by a digit generator; rational_flag is true
    only for finite expansions.
    """

    def __init__(self, base, value=None, integer_part=None, digit_factory=None):
        """
        Use the from_value / from_digits / from_generator constructors.

        Args:
            base (int): m+1
            value (Fraction): exact value, or None for generator-backed expansions
            integer_part (int): floor(x) for generator-backed expansions
            digit_factory (callable): returns a fresh iterator of fractional digits
        """
        self.base = int(base)
        self.value = value
        if value is not None:
            if value < 0:
                raise ValueError('Expansions need x >= 0, got {}'.format(value))
            self.integer_part = value.numerator // value.denominator
        else:
            self.integer_part = int(integer_part)
        self._digit_factory = digit_factory

    @classmethod
    def from_value(cls, x, base):
        return cls(base, value=to_fraction(x))

    @classmethod
    def from_digits(cls, base, integer_part, digits, repeat=()):
        """
        x = integer_part + 0.digits(repeat)(repeat)... in base `base`. A repeating block of m's is
        folded into the preceding digit.
        """
        digits, repeat = list(digits), list(repeat)
        for d in digits + repeat:
            if not 0 <= d < base:
                raise ValueError('Digit {} is not valid in base {}'.format(d, base))
        x = Fraction(integer_part)
        for r, d in enumerate(digits, 1):
            x += Fraction(d, base ** r)
        if repeat and any(repeat):
            block = 0
            for d in repeat:
                block = block * base + d
            x += Fraction(block, base ** len(repeat) - 1) / base ** len(digits)
        return cls(base, value=x)

    @classmethod
    def from_generator(cls, base, integer_part, digit_factory):
        """
        Args:
            digit_factory (callable): no-argument callable returning an iterator of digits
        """
        return cls(base, integer_part=integer_part, digit_factory=digit_factory)

    @property
    def rational_flag(self):
        if self.value is None:
            return False
        den = self.value.denominator
        while den % self.base == 0:
            den //= self.base
        g = math.gcd(den, self.base)
        while g > 1:
            while den % g == 0:
                den //= g
            g = math.gcd(den, self.base)
        return den == 1

    def digits(self, depth):
        """
        Returns:
            ([int]) the first `depth` fractional digits
        """
        out = []
        if self.value is not None:
            rem = self.value - self.integer_part
            for _ in range(depth):
                rem *= self.base
                d = rem.numerator // rem.denominator
                out.append(d)
                rem -= d
            return out
        it = self._digit_factory()
        for _ in range(depth):
            d = int(next(it))
            if not 0 <= d < self.base:
                raise ValueError('Generator produced digit {} in base {}'.format(d, self.base))
            out.append(d)
        return out

    def finite_digits(self):
        """
        Returns:
            ([int]) all fractional digits of a finite expansion, without trailing zeros
        """
        if not self.rational_flag:
            raise NotRational('{} has no finite base-{} expansion'.format(self, self.base))
        out = []
        rem = self.value - self.integer_part
        while rem:
            rem *= self.base
            d = rem.numerator // rem.denominator
            out.append(d)
            rem -= d
        return out

    def truncated(self, depth):
        """
        Returns:
            (Fraction) integer part plus the first `depth` digits
        """
        w = self.integer_part
        for d in self.digits(depth):
            w = w * self.base + d
        return Fraction(w, self.base ** depth)

    def scaled(self, k):
        """
        Returns:
            (FractionalExpansion) x * base^k for k >= 0
        """
        if self.value is not None:
            return FractionalExpansion(self.base, value=self.value * self.base ** k)
        head = self.digits(k)
        ip = self.integer_part
        for d in head:
            ip = ip * self.base + d
        factory = self._digit_factory

        def shifted():
            it = factory()
            for _ in range(k):
                next(it)
            return it

        return FractionalExpansion(self.base, integer_part=ip, digit_factory=shifted)

    def to_mpf(self, prec=None):
        prec = resolve_prec(prec)
        if self.value is not None:
            return fraction_to_mpf(self.value, prec)
        depth = int(math.ceil((prec + GUARD_BITS) * math.log(2) / math.log(self.base)))
        return fraction_to_mpf(self.truncated(depth), prec)

    def __repr__(self):
        if self.value is not None:
            return 'FractionalExpansion({}, base={})'.format(self.value, self.base)
        return 'FractionalExpansion([{}.{}...]_{})'.format(
            self.integer_part, ''.join(str(d) for d in self.digits(8)), self.base)


def as_expansion(sys, x):
    if isinstance(x, FractionalExpansion):
        if x.base != sys.b:
            raise ValueError('Expansion is in base {}, system source base is {}'.format(x.base,
                                                                                       sys.b))
        return x
    return FractionalExpansion.from_value(x, sys.b)


def default_depth(sys, prec=None):
    """
    Digit depth R = ceil(P ln 2 / ln(f(m)+1)), so the digit tail matches the arithmetic precision.
    """
    return int(math.ceil(resolve_prec(prec) * math.log(2) / math.log(sys.q)))


def d_tail_bound(sys, depth):
    """
    Returns:
        (Fraction) sup of the digit series beyond `depth`: f(m)/p (p+1)^-depth
    """
    return Fraction(sys.f_m, sys.p) / sys.dst_base ** depth


def _digit_numerator(sys, digits):
    # sum f(eps_r) (p+1)^(R-r), an integer
    num = 0
    for d in digits:
        num = num * sys.dst_base + sys.values[d]
    return num


def d_value(sys, frac, depth=None, prec=None):
    """
    The digit series D(x) = sum_{r <= R} f(eps_r) (p+1)^-r of the fractional digits of x.

    Args:
        sys (CantorSystem)
        frac (FractionalExpansion or number): x; only its fractional digits matter
        depth (int): R, default default_depth()
        prec (int): bits

    Returns:
        BoundedValue, error is the digit tail bound (zero for expansions that end within R digits)
    """
    prec = resolve_prec(prec)
    depth = depth if depth else default_depth(sys, prec)
    frac = as_expansion(sys, frac)
    digits = frac.digits(depth)
    value = fraction_to_mpf(Fraction(_digit_numerator(sys, digits), sys.dst_base ** depth), prec)
    exact = frac.rational_flag and len(frac.finite_digits()) <= depth
    error = mpmath.mpf(0) if exact else fraction_to_mpf(d_tail_bound(sys, depth), prec)
    return BoundedValue(value, error)


def numerator_value(sys, frac, depth):
    """
    Exact truncation C_floor(x) + D_R(x) of the numerator of lambda.

    Returns:
        Fraction
    """
    frac = as_expansion(sys, frac)
    c = cantor_value(sys, frac.integer_part)
    return c + Fraction(_digit_numerator(sys, frac.digits(depth)), sys.dst_base ** depth)


def lambda_value(sys, x, depth=None, prec=None):
    """
    lambda(x) = (C_floor(x) + D(x)) / x^alpha.

    Args:
        sys (CantorSystem)
        x (FractionalExpansion, int, Fraction or mpf): x > 0
        depth (int): digit depth R
        prec (int): bits

    Returns:
        BoundedValue
    """
    prec = resolve_prec(prec)
    depth = depth if depth else default_depth(sys, prec)
    frac = as_expansion(sys, x)
    if frac.value is not None:
        if frac.value <= 0:
            raise ValueError('lambda needs x > 0, got {}'.format(frac.value))
        x_exact, x_rel_err = frac.value, 0
    else:
        x_depth = int(math.ceil((prec + GUARD_BITS) * math.log(2) / math.log(sys.b)))
        x_exact = frac.truncated(x_depth)
        if x_exact <= 0:
            raise ValueError('lambda needs x > 0')
        x_rel_err = Fraction(1, sys.b ** x_depth) / x_exact
    num = numerator_value(sys, frac, depth)
    den = power_alpha(x_exact, sys.b, sys.dst_base, prec + GUARD_BITS)
    d = d_value(sys, frac, depth, prec)
    with mp.workprec(prec + GUARD_BITS):
        value = fraction_to_mpf(num, prec + GUARD_BITS) / den
        error = d.error / den + abs(value) * (sys.alpha_float * float(x_rel_err) +
                                              mpmath.ldexp(1, 4 - prec))
    with mp.workprec(prec):
        return BoundedValue(+value, +error)


def _require_strict(sys):
    if not sys.strict:
        raise ValueError('The IFS of {} has overlapping branches; g is defined for strictly '
                         'increasing maps only'.format(sys))


def cantor_function_g(sys, t, depth=None, exact=False, prec=None):
    """
    g(t) = mu([0, t]) by descent through the IFS: at each level pick the last child whose left end
    is <= t; a t inside a gap ends the descent on a plateau.

    Args:
        sys (CantorSystem): strictly increasing map
        t: point in [0, 1]
        depth (int): levels, default ceil(P ln 2 / ln(m+1)); error <= (m+1)^-depth
        exact (bool): return the value as a Fraction

    Returns:
        BoundedValue
    """
    _require_strict(sys)
    prec = resolve_prec(prec)
    depth = depth if depth else int(math.ceil(prec * math.log(2) / math.log(sys.b)))
    t = to_fraction(t)
    if not 0 <= t <= 1:
        raise ValueError('g needs t in [0, 1], got {}'.format(t))
    ifs = IfsSystem(sys)
    lo, hi = ifs.hull
    acc, weight = Fraction(0), Fraction(1)
    error = Fraction(0)
    if t >= hi:
        acc = Fraction(1)
    else:
        for _ in range(depth):
            if t == lo:
                break
            children = ifs.children(lo, hi)
            i = max(j for j, (c_lo, _) in enumerate(children) if c_lo <= t)
            weight /= sys.b
            if t >= children[i][1]:
                acc += (i + 1) * weight
                break
            acc += i * weight
            lo, hi = children[i]
        else:
            error = weight
    if exact:
        return BoundedValue(acc, error)
    return BoundedValue(fraction_to_mpf(acc, prec), fraction_to_mpf(error, prec))


def cantor_address(sys, t, depth=None):
    """
    Base-(m+1) address of a point t of the attractor, so that t = sum f(eps_r) (p+1)^-r.

    Returns:
        ([int], bool) the first `depth` address digits and whether the address is finite (ends in
        zeros)
    """
    _require_strict(sys)
    depth = depth if depth else default_depth(sys)
    t = to_fraction(t)
    ifs = IfsSystem(sys)
    lo, hi = ifs.hull
    if not lo <= t <= hi:
        raise ValueError('{} lies outside the hull [{}, {}]'.format(t, lo, hi))
    digits = []
    for _ in range(depth):
        if t == lo:
            return digits + [0] * (depth - len(digits)), True
        children = ifs.children(lo, hi)
        i = max(j for j, (c_lo, _) in enumerate(children) if c_lo <= t)
        if t > children[i][1]:
            raise ValueError('{} lies in a gap of the attractor'.format(t))
        digits.append(i)
        lo, hi = children[i]
    return digits, t == lo


def _inverse_alpha_parts(sys, x):
    # x = y (p+1)^j, so x^(1/alpha) = y^(1/alpha) (m+1)^j
    j, num, den = 0, x.numerator, x.denominator
    while num % sys.dst_base == 0:
        num //= sys.dst_base
        j += 1
    while den % sys.dst_base == 0:
        den //= sys.dst_base
        j -= 1
    return Fraction(num, den), j


def density_d(sys, x, depth=None, prec=None):
    """
    d(x) = g(x) / x^(1/alpha). Factors (p+1)^j of x are taken out exactly, so
    d(x/(f(m)+1)) and d(x) agree to the last bit for theorem-scope systems.

    Returns:
        BoundedValue
    """
    prec = resolve_prec(prec)
    x = to_fraction(x)
    if not 0 < x <= 1:
        raise ValueError('d needs x in (0, 1], got {}'.format(x))
    g = cantor_function_g(sys, x, depth, exact=True, prec=prec)
    y, j = _inverse_alpha_parts(sys, x)
    scale = Fraction(sys.b) ** j
    with mp.workprec(prec + GUARD_BITS):
        inv_alpha = mpmath.log(sys.b) / mpmath.log(sys.dst_base)
        y_root = mpmath.exp(inv_alpha * (mpmath.log(y.numerator) - mpmath.log(y.denominator)))
        value = fraction_to_mpf(g.value / scale, prec + GUARD_BITS) / y_root
        error = fraction_to_mpf(g.error / scale, prec + GUARD_BITS) / y_root
    with mp.workprec(prec):
        return BoundedValue(+value, +error)


def continuity_probe(sys, x0, prec=None):
    """
    Classify lambda at an (m+1)-rational x0 = [eps_-l ... eps_0 . eps_1 ... eps_n].

    The right value uses the finite expansion, the left limit the expansion
    [... (eps_n - 1) m m m ...]. Both share x0^alpha, so the jump is
    (Delta C_W - f(m)/p) / ((p+1)^n x0^alpha) with W the digit word of x0.

    Returns:
        ContinuityReport
    """
    prec = resolve_prec(prec)
    frac = as_expansion(sys, x0)
    if not frac.rational_flag:
        raise NotRational('{} has no finite base-{} expansion'.format(frac, sys.b))
    digits = frac.finite_digits()
    n = len(digits)
    w = frac.integer_part
    for d in digits:
        w = w * sys.b + d
    if w == 0 or w % sys.b == 0:
        raise ValueError('Continuity probe needs a last digit >= 1, got {}'.format(frac))
    c_w = cantor_value(sys, w)
    c_left = cantor_value(sys, w - 1)
    scale = sys.dst_base ** n
    den = power_alpha(frac.value, sys.b, sys.dst_base, prec + GUARD_BITS)
    jump_num = Fraction(c_w - c_left) - Fraction(sys.f_m, sys.p)
    with mp.workprec(prec + GUARD_BITS):
        value = fraction_to_mpf(Fraction(c_w, scale), prec + GUARD_BITS) / den
        left = fraction_to_mpf(Fraction(c_left, scale) + d_tail_bound(sys, n),
                               prec + GUARD_BITS) / den
        jump = fraction_to_mpf(jump_num / scale, prec + GUARD_BITS) / den
        error = abs(value) * mpmath.ldexp(1, 4 - prec)
    classification = 'left_and_right' if jump_num == 0 else 'right_only'
    _log().debug('x0={}: {} with jump {}'.format(frac, classification, jump))
    with mp.workprec(prec):
        return ContinuityReport(classification, +value, +left, +jump, +error, w % sys.b)


def block_statistics(digits, base, max_len=3):
    """
    Max deviation of the block frequencies N(k, B)/k from base^-len, for block lengths 1..max_len.

    Returns:
        ({int: float}) block length -> deviation
    """
    out = {}
    for ell in range(1, max_len + 1):
        total = len(digits) - ell + 1
        if total <= 0:
            continue
        counts = Counter(tuple(digits[i:i + ell]) for i in range(total))
        expected = base ** -ell
        worst = max(abs(counts.get(block, 0) / total - expected)
                    for block in _all_blocks(base, ell))
        out[ell] = worst
    return out


def _all_blocks(base, ell):
    if ell == 0:
        yield ()
        return
    for head in _all_blocks(base, ell - 1):
        for d in range(base):
            yield head + (d,)


def holder_probe(sys, x0, h_grid, delta=0.15, depth=None, block_depth=512, prec=None):
    """
    Local growth of lambda at x0 over steps h in h_grid.

    slope is the least-squares exponent of |N(x0+h) - N(x0)| against h, where
    N = C_floor(x) + D(x) is the numerator of lambda; steps are snapped to the (m+1)-adic grid of
    the truncation depth, where the increment is exact. lambda_slope is the same fit for lambda
    itself, which the smooth factor x^-alpha dominates. Zero increments and steps that change the
    integer part are dropped. meets_floor tells whether slope >= alpha - delta.

    Returns:
        HolderReport
    """
    prec = resolve_prec(prec)
    frac = as_expansion(sys, x0)
    h_grid = [to_fraction(h) for h in h_grid]
    if any(h <= 0 or h >= 1 for h in h_grid):
        raise ValueError('Steps must lie in (0, 1)')
    finest = int(math.ceil(-math.log(float(min(h_grid))) / math.log(sys.b))) if h_grid else 0
    depth = max(depth if depth else default_depth(sys, prec), finest + 16)
    digits = frac.digits(depth)
    w = frac.integer_part
    for d in digits:
        w = w * sys.b + d
    grid = sys.b ** depth
    c_w = cantor_value(sys, w, verify=False)
    lam0 = lambda_value(sys, frac, depth, prec).value
    log_h, log_dn, log_dl = [], [], []
    for h in h_grid:
        step = int(round(h * grid))
        if step == 0 or (w + step) // grid != frac.integer_part:
            continue
        dn = cantor_value(sys, w + step, verify=False) - c_w
        if dn == 0:
            continue
        h_eff = Fraction(step, grid)
        lam = lambda_value(sys, Fraction(w + step, grid), depth, prec).value
        with mp.workprec(prec):
            dl = abs(lam - lam0)
        if dl == 0:
            continue
        log_h.append(math.log(step) - depth * math.log(sys.b))
        log_dn.append(math.log(dn) - depth * math.log(sys.dst_base))
        log_dl.append(float(mpmath.log(dl)))
        _log().debug('h={}: numerator increment {}'.format(h_eff, dn))
    if len(log_h) < 4:
        raise DegenerateGrid('Only {} usable steps; need at least 4'.format(len(log_h)))
    slope = float(np.polyfit(log_h, log_dn, 1)[0])
    lambda_slope = float(np.polyfit(log_h, log_dl, 1)[0])
    stats = block_statistics(frac.digits(max(block_depth, depth)), sys.b)
    n_blocks = max(block_depth, depth)
    normal_like = all(dev <= 3.0 / math.sqrt(n_blocks - ell + 1) for ell, dev in stats.items())
    return HolderReport(slope, lambda_slope, len(log_h), stats, normal_like,
                        slope >= sys.alpha_float - float(delta))


class HPComplexCoefficient(CLSerializable):
    """
    A logarithmic Fourier coefficient c_n of lambda with its quadrature error bound.
    """

    def __init__(self, index, value, error, richardson=None, depth=None):
        self.index = index
        self.value = value
        self.error = error
        self.richardson = richardson
        self.depth = depth

    def conjugate(self):
        return HPComplexCoefficient(-self.index, mpmath.conj(self.value), self.error,
                                    self.richardson, self.depth)

    @serialize_cl
    @recursive_serialize
    def to_dict(self):
        return {'index': self.index, 'value': self.value, 'error': self.error,
                'richardson': self.richardson, 'depth': self.depth}

    @classmethod
    def from_dict(cls, m_dict):
        return cls(m_dict['index'], hp_from_str(m_dict['value']), hp_from_str(m_dict['error']),
                   hp_from_str(m_dict.get('richardson')), m_dict.get('depth'))


def fourier_default_depth(sys):
    return int(math.ceil(-math.log(cl_config.FOURIER_TARGET) / math.log(sys.dst_base)))


def fourier_bound(sys, depth):
    """
    (f(m)/p) (p+1)^-depth (1 - (m+1)^-alpha) / (alpha ln(m+1))
    """
    a = sys.alpha_float
    return (sys.f_m / sys.p) * sys.dst_base ** -depth * (1 - sys.b ** -a) / (a * math.log(sys.b))


def _cell_sums(sys, ns, depth):
    """
    Cell rule on [1, m+1) split at the depth-k (m+1)-rationals N/(m+1)^k: on each cell the
    numerator of lambda is replaced by its mean (C_N + sum f/((m+1)p)) / (p+1)^k and
    x^(-alpha-1-i theta) is integrated exactly.
    """
    lo, hi = sys.b ** depth, sys.b ** (depth + 1)
    c = cantor_table(sys, hi - 1, lo).astype(np.float64) + sys.sum_f / (sys.b * sys.p)
    log_n = np.log(np.arange(lo, hi + 1, dtype=np.float64))
    a = sys.alpha_float
    ln_b = math.log(sys.b)
    out = []
    for n in ns:
        s = complex(-a, -2 * math.pi * n / ln_b)
        powers = np.exp(s * log_n)
        weights = (powers[1:] - powers[:-1]) / s
        terms = c * weights
        out.append(complex(math.fsum(terms.real), math.fsum(terms.imag)) / ln_b)
    return out


def fourier_coefficients(sys, ns, depth=None):
    """
    c_n = (1/ln(m+1)) int_1^{m+1} lambda(x) x^(-1 - i 2 pi n / ln(m+1)) dx for each n in ns.

    Args:
        sys (CantorSystem)
        ns ([int]): indices
        depth (int): cell depth k, default makes (p+1)^-k <= FOURIER_TARGET

    Returns:
        ([HPComplexCoefficient])
    """
    depth = depth if depth else fourier_default_depth(sys)
    if depth < 1:
        raise ValueError('Fourier depth must be positive, got {}'.format(depth))
    ns = [int(n) for n in ns]
    _log().info('Fourier coefficients of {} for {} indices at depth {}'.format(sys, len(ns), depth))
    fine = _cell_sums(sys, ns, depth)
    coarse = _cell_sums(sys, ns, depth - 1)
    bound = fourier_bound(sys, depth)
    return [HPComplexCoefficient(n, mpmath.mpc(cf), mpmath.mpf(bound),
                                 mpmath.mpf(abs(cf - cc) / sys.p), depth)
            for n, cf, cc in zip(ns, fine, coarse)]


def fourier_coefficient(sys, n, resolution=None):
    """
    Single coefficient; resolution is the cell depth k (>= 2).

    Returns:
        HPComplexCoefficient
    """
    if resolution is not None and resolution < 2:
        raise ValueError('resolution must be at least 2, got {}'.format(resolution))
    return fourier_coefficients(sys, [n], resolution)[0]


def fourier_decay_constant(coeffs):
    """
    Returns:
        (float) max |n| |c_n| over the nonzero indices
    """
    return max(abs(c.index) * abs(complex(c.value)) for c in coeffs if c.index)


def log_phase(sys, x):
    """
    Fractional part of log_{m+1} x; exact reduction to [1, m+1) for rational x.
    """
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        if x <= 0:
            raise ValueError('Need x > 0, got {}'.format(x))
        while x >= sys.b:
            x /= sys.b
        while x < 1:
            x *= sys.b
        return math.log(x.numerator / x.denominator) / math.log(sys.b)
    u = float(mpmath.log(x, sys.b))
    return u - math.floor(u)


def cesaro_sum(sys, x, coeffs, order=None):
    """
    Fejer sum sum_{|n| <= N} (1 - |n|/(N+1)) c_n e^(2 pi i n log_{m+1} x).

    Args:
        sys (CantorSystem)
        x: positive point
        coeffs ({int: HPComplexCoefficient} or [HPComplexCoefficient]): c_n for |n| <= N;
            missing negative indices are filled in by conjugation
        order (int): N, default the largest index available

    Returns:
        mpf (the real part; the imaginary part cancels)
    """
    if not isinstance(coeffs, dict):
        coeffs = {c.index: c for c in coeffs}
    order = order if order is not None else max(abs(k) for k in coeffs)
    u = log_phase(sys, x)
    total = 0j
    for k in range(-order, order + 1):
        if k in coeffs:
            c = complex(coeffs[k].value)
        elif -k in coeffs:
            c = complex(coeffs[-k].value).conjugate()
        else:
            raise ValueError('Coefficient c_{} is missing for order {}'.format(k, order))
        total += (1 - abs(k) / (order + 1)) * c * complex(math.cos(2 * math.pi * k * u),
                                                          math.sin(2 * math.pi * k * u))
    return mpmath.mpf(total.real)


def _log():
    return get_cl_logger('cantorlab.limit_function')
