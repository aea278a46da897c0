# coding: utf-8

from __future__ import unicode_literals, division

"""
High-precision helpers: precision resolution, exact conversions and the certified comparison of
quotients num / base^alpha that every extremum search relies on.

All candidates compared by the extrema and distribution modules have the shape
num / base^alpha with alpha = log(dst)/log(src) shared by both sides, so a comparison that interval
arithmetic cannot separate reduces to an integer identity between powers.
"""

import contextlib
import math
from collections import namedtuple
from fractions import Fraction

import mpmath
from mpmath import mp, iv

from cantorlab import cl_config
from cantorlab.utilities.cl_utilities import get_cl_logger

__author__ = 'cantorlab developers'
__copyright__ = 'Copyright 2026, cantorlab developers'
__version__ = '0.1'
__maintainer__ = 'cantorlab developers'
__email__ = 'cantorlab@users.noreply.github.com'
__date__ = 'Oct 16, 2026'

GUARD_BITS = 32  # extra bits used for exp/log before rounding back to the target precision
MAX_EXACT_BITS = 1 << 20  # integer identities larger than this are not attempted

BoundedValue = namedtuple('BoundedValue', ['value', 'error'])
BoundedValue.__doc__ = "A high-precision value with a documented absolute error bound."


def resolve_prec(prec=None):
    """
    Args:
        prec (int): requested precision in bits, or None for cl_config.PRECISION_BITS

    Returns:
        (int) precision in bits
    """
    return int(prec) if prec else cl_config.PRECISION_BITS


@contextlib.contextmanager
def interval_precision(prec):
    """
    Run a block with mpmath's interval context at prec bits.
    """
    old = iv.prec
    iv.prec = prec
    try:
        yield
    finally:
        iv.prec = old


def to_fraction(x):
    """
    Exact rational value of an int, Fraction, float, string or mpf (mpf values are dyadic).

    Args:
        x: the number

    Returns:
        Fraction
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    if isinstance(x, mpmath.mpf):
        sign, man, exp, _ = x._mpf_
        if not man and exp:
            raise ValueError('Cannot convert {} to a rational'.format(x))
        value = Fraction(int(man)) * (Fraction(2) ** int(exp))
        return -value if sign else value
    return Fraction(x)


def fraction_to_mpf(x, prec=None):
    """
    Correctly rounded mpf of a rational.
    """
    x = to_fraction(x)
    with mp.workprec(resolve_prec(prec)):
        return mpmath.mpf(x.numerator) / x.denominator


def alpha_hp(src, dst, prec=None):
    """
    alpha = log(dst)/log(src) at the requested precision.

    Args:
        src (int): source base m+1
        dst (int): target base p+1
        prec (int): bits

    Returns:
        mpf
    """
    prec = resolve_prec(prec)
    with mp.workprec(prec + GUARD_BITS):
        value = mpmath.log(dst) / mpmath.log(src)
    with mp.workprec(prec):
        return +value


def integer_log(n, base):
    """
    Returns j if n == base**j for an integer j >= 0, else None.
    """
    if n < 1:
        return None
    j = 0
    while n % base == 0:
        n //= base
        j += 1
    return j if n == 1 else None


def base_power_gap(base1, base2, src):
    """
    Returns j with base1 == base2 * src**j (j may be negative), or None.
    """
    if base1 >= base2:
        if base1 % base2:
            return None
        return integer_log(base1 // base2, src)
    if base2 % base1:
        return None
    j = integer_log(base2 // base1, src)
    return None if j is None else -j


def power_alpha(x, src, dst, prec=None):
    """
    x^alpha for a positive rational x, exact when x is an integer power of src.

    Args:
        x (int/Fraction): the base
        src (int): m+1
        dst (int): p+1
        prec (int): bits

    Returns:
        mpf
    """
    prec = resolve_prec(prec)
    x = to_fraction(x)
    if x.denominator == 1:
        j = integer_log(x.numerator, src)
        if j is not None:
            with mp.workprec(prec):
                return mpmath.mpf(dst) ** j
    with mp.workprec(prec + GUARD_BITS):
        a = mpmath.log(dst) / mpmath.log(src)
        value = mpmath.exp(a * (mpmath.log(x.numerator) - mpmath.log(x.denominator)))
    with mp.workprec(prec):
        return +value


def _rational_exponent(ratio, base, max_den=64):
    """
    If ratio == base**(u/v) for small integers, returns (u, v), else None.
    """
    if ratio <= 0:
        return None
    lr = math.log(ratio.numerator) - math.log(ratio.denominator)
    guess = Fraction(lr / math.log(base)).limit_denominator(max_den)
    u, v = guess.numerator, guess.denominator
    if abs(u) * math.log2(base) > MAX_EXACT_BITS:
        return None
    if ratio ** v == Fraction(base) ** u:
        return u, v
    return None


def exact_quotient_tie(num1, base1, num2, base2, src, dst):
    """
    Decide num1/base1^alpha == num2/base2^alpha exactly, alpha = log(dst)/log(src).

    With q = num1/num2 and r = base1/base2 the identity reads q = r^alpha. If r == 1 it is q == 1.
    Otherwise r must be a rational power (m+1)^(u/v) and then q^v == (p+1)^u; when alpha itself
    is rational a/c the identity is q^c == r^a.

    Returns:
        (bool) True if the quotients are equal
    """
    q = Fraction(num1, num2)
    r = Fraction(base1, base2)
    if r == 1:
        return q == 1
    rational_alpha = _rational_exponent(Fraction(dst), src)
    if rational_alpha is not None:
        a, c = rational_alpha
        if max(abs(a), c) * max(math.log2(max(q.numerator, q.denominator, 2)),
                                math.log2(max(r.numerator, r.denominator, 2))) > MAX_EXACT_BITS:
            return False
        return q ** c == r ** a
    expo = _rational_exponent(r, src)
    if expo is None:
        return False
    u, v = expo
    return q ** v == Fraction(dst) ** u


class AlphaQuotient(object):
    """
    The number num / base^alpha with alpha = log(p+1)/log(m+1).

    Instances compare with certified interval arithmetic and fall back to an exact integer
    identity when intervals cannot separate them.
    """

    __slots__ = ('num', 'base', 'src', 'dst')

    def __init__(self, num, base, src, dst):
        """
        Args:
            num (int): nonnegative numerator
            base (int): positive base
            src (int): m+1
            dst (int): p+1
        """
        self.num = int(num)
        self.base = int(base)
        self.src = int(src)
        self.dst = int(dst)

    def value(self, prec=None):
        """
        Returns:
            mpf rounded at prec (exact division when base is a power of m+1)
        """
        prec = resolve_prec(prec)
        den = power_alpha(self.base, self.src, self.dst, prec + GUARD_BITS)
        with mp.workprec(prec + GUARD_BITS):
            v = mpmath.mpf(self.num) / den
        with mp.workprec(prec):
            return +v

    def _interval(self):
        # caller sets iv.prec
        a = iv.ln(iv.mpf(self.dst)) / iv.ln(iv.mpf(self.src))
        den = iv.exp(a * iv.ln(iv.mpf(self.base)))
        return iv.mpf(self.num) / den

    def interval(self, prec):
        """
        Returns:
            an mpmath iv interval certainly containing the quotient
        """
        with interval_precision(prec):
            return self._interval()

    def _sign_at(self, other, prec):
        with interval_precision(prec):
            d = self._interval() - other._interval()
            if d.b < 0:
                return -1
            if d.a > 0:
                return 1
        return None

    def compare(self, other, prec=None):
        """
        Args:
            other (AlphaQuotient): must share src and dst
            prec (int): starting precision

        Returns:
            -1, 0 or 1
        """
        if (self.src, self.dst) != (other.src, other.dst):
            raise ValueError('Cannot compare quotients of different systems')
        if (self.num, self.base) == (other.num, other.base):
            return 0
        if self.num == 0 or other.num == 0:
            return (self.num > 0) - (other.num > 0)
        j = base_power_gap(self.base, other.base, self.src)
        if j is not None:
            # base^alpha = other.base^alpha * dst^j
            lhs = self.num * self.dst ** max(-j, 0)
            rhs = other.num * self.dst ** max(j, 0)
            return (lhs > rhs) - (lhs < rhs)
        prec = resolve_prec(prec)
        for i in range(cl_config.PRECISION_ESCALATIONS):
            sign = self._sign_at(other, prec << i)
            if sign is not None:
                return sign
            _log().debug('Comparison {} vs {} undecided at {} bits'.format(self, other, prec << i))
        if exact_quotient_tie(self.num, self.base, other.num, other.base, self.src, self.dst):
            _log().debug('Exact tie {} == {}'.format(self, other))
            return 0
        for i in range(cl_config.PRECISION_ESCALATIONS, cl_config.PRECISION_ESCALATIONS + 2):
            sign = self._sign_at(other, prec << i)
            if sign is not None:
                return sign
        _log().warning('Treating {} and {} as equal: no exact identity found and intervals overlap '
                       'at {} bits'.format(self, other, prec << (cl_config.PRECISION_ESCALATIONS + 1)))
        return 0

    def __eq__(self, other):
        return isinstance(other, AlphaQuotient) and self.compare(other) == 0

    def __ne__(self, other):
        return not self.__eq__(other)

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    __hash__ = None

    def __repr__(self):
        return '{}/{}^alpha'.format(self.num, self.base)


def compare_alpha_rational(src, dst, r, prec=None):
    """
    Sign of alpha - r for alpha = log(dst)/log(src) and an exact rational r.

    Returns:
        -1, 0 or 1
    """
    r = to_fraction(r)
    prec = resolve_prec(prec)
    if r <= 0:
        return 1
    for i in range(cl_config.PRECISION_ESCALATIONS):
        with interval_precision(prec << i):
            d = iv.ln(iv.mpf(dst)) / iv.ln(iv.mpf(src)) - iv.mpf(r.numerator) / r.denominator
            if d.b < 0:
                return -1
            if d.a > 0:
                return 1
    # alpha == u/v  <=>  dst^v == src^u
    if r.numerator * math.log2(src) <= MAX_EXACT_BITS and \
            dst ** r.denominator == src ** r.numerator:
        return 0
    value = alpha_hp(src, dst, prec << (cl_config.PRECISION_ESCALATIONS + 1))
    with mp.workprec(prec << (cl_config.PRECISION_ESCALATIONS + 1)):
        diff = value - mpmath.mpf(r.numerator) / r.denominator
    return (diff > 0) - (diff < 0)


def best_quotient(candidates, mode='min', prec=None):
    """
    Exact arg-extremum over (index, AlphaQuotient) pairs; ties go to the smallest index.

    Args:
        candidates: iterable of (index, AlphaQuotient)
        mode (str): 'min' or 'max'

    Returns:
        (index, AlphaQuotient) or (None, None) for an empty iterable
    """
    best_i, best_q = None, None
    sign = -1 if mode == 'min' else 1
    for i, q in sorted(candidates, key=lambda t: t[0]):
        if best_q is None or sign * q.compare(best_q, prec) > 0:
            best_i, best_q = i, q
    return best_i, best_q


def _log():
    return get_cl_logger('cantorlab.hp_arith')
