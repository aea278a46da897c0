# coding: utf-8

from __future__ import unicode_literals, division

"""
This module contains the central objects of cantorlab:

    - A BaseConversionMap is the digit map f: {0..m} -> {0..p}.
    - A CantorSystem is a validated map plus its derived constants (alpha, f(m)+1, the
        differences of f, ...). Every other module takes a CantorSystem.
    - A DigitWord is a digit string in some base, most significant digit first.
    - A QuadraticFamily is the map x -> ax^2+bx restricted to {0..m}.
    - An IfsSystem is the iterated function system S_i(x) = (x+f(i))/(p+1) of a system.

The Cantor-integer C_n is the number whose base-(p+1) digits are the f-images of the
base-(m+1) digits of n.
"""

import math
from fractions import Fraction

import numpy as np

from cantorlab import cl_config
from cantorlab.utilities.cl_serializers import CLSerializable, serialize_cl, recursive_serialize
from cantorlab.utilities.cl_utilities import get_cl_logger
from cantorlab.utilities.hp_arith import alpha_hp, resolve_prec, AlphaQuotient

__author__ = 'cantorlab developers'
__copyright__ = 'Copyright 2026, cantorlab developers'
__version__ = '0.1'
__maintainer__ = 'cantorlab developers'
__email__ = 'cantorlab@users.noreply.github.com'
__date__ = 'Oct 16, 2026'

INT64_LIMIT = 2 ** 62  # tables switch to object dtype above this magnitude


class NonMonotoneMap(ValueError):
    pass


class TrivialMap(ValueError):
    pass


class RangeError(ValueError):
    pass


class DigitOutOfRange(ValueError):
    pass


class StrategyMismatch(AssertionError):
    """
    Raised when the digit-map and recurrence evaluations of the same quantity disagree.
    """
    pass


class BaseConversionMap(object):
    """
    The digit map f on {0..m} with values in {0..p}. Construction does not validate; pass the
    map to validate_system() to obtain a usable CantorSystem.
    """

    def __init__(self, m, p, values):
        """
        Args:
            m (int): largest source digit (source base is m+1)
            p (int): largest target digit (target base is p+1)
            values ([int]): f(0), ..., f(m)
        """
        self.m = int(m)
        self.p = int(p)
        self.values = tuple(int(v) for v in values)

    @property
    def strict(self):
        return all(a < b for a, b in zip(self.values, self.values[1:]))

    @property
    def theorem_scope(self):
        return self.strict and self.values[0] == 0 and self.values[-1] == self.p

    def __repr__(self):
        return 'BaseConversionMap(m={}, p={}, values={})'.format(self.m, self.p, list(self.values))


class CantorSystem(CLSerializable):
    """
    A validated base-conversion system. Instances are immutable and hashable; build them with
    validate_system().
    """

    def __init__(self, fmap):
        self.map = fmap
        self.m = fmap.m
        self.p = fmap.p
        self.values = fmap.values
        self.b = self.m + 1
        self.dst_base = self.p + 1
        self.q = self.values[-1] + 1
        self.delta_f = tuple(self.values[r] - self.values[r - 1] for r in range(1, self.b))
        self.sum_f = sum(self.values[1:])
        self.strict = fmap.strict
        self.theorem_scope = fmap.theorem_scope

    def f(self, digit):
        return self.values[digit]

    @property
    def f_m(self):
        return self.values[-1]

    @property
    def alpha(self):
        """
        alpha = log(p+1)/log(m+1) at the current cl_config.PRECISION_BITS
        """
        return self.alpha_at()

    def alpha_at(self, prec=None):
        return alpha_hp(self.b, self.dst_base, resolve_prec(prec))

    @property
    def alpha_float(self):
        return math.log(self.dst_base) / math.log(self.b)

    @property
    def hausdorff_dimension(self):
        """
        Returns:
            (mpf) 1/alpha, the dimension of the attractor of the system's IFS
        """
        return 1 / self.alpha

    def quotient(self, num, base):
        """
        Returns:
            (AlphaQuotient) num / base^alpha in this system
        """
        return AlphaQuotient(num, base, self.b, self.dst_base)

    def label(self):
        return 'table:{};p={}'.format(','.join(str(v) for v in self.values), self.p)

    def _key(self):
        return self.m, self.p, self.values

    def __eq__(self, other):
        return isinstance(other, CantorSystem) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return 'CantorSystem(m={}, p={}, values={})'.format(self.m, self.p, list(self.values))

    @serialize_cl
    @recursive_serialize
    def to_dict(self):
        return {'m': self.m, 'p': self.p, 'values': list(self.values),
                'theorem_scope': self.theorem_scope}

    @classmethod
    def from_dict(cls, m_dict):
        return validate_system(BaseConversionMap(m_dict['m'], m_dict['p'], m_dict['values']))


def validate_system(fmap):
    """
    Check the standing assumptions on a digit map and derive the system constants. The identity
    map (p = m) raises TrivialMap; any other map with p <= m raises RangeError.

    Args:
        fmap (BaseConversionMap)

    Returns:
        CantorSystem
    """
    if fmap.m >= 1 and fmap.p == fmap.m and fmap.values == tuple(range(fmap.m + 1)):
        raise TrivialMap('The identity map with f(m)=p gives C_n = n')
    if fmap.m < 1 or fmap.p <= fmap.m:
        raise RangeError('Need 1 <= m < p, got m={}, p={}'.format(fmap.m, fmap.p))
    if len(fmap.values) != fmap.m + 1:
        raise RangeError('Expected {} values for m={}, got {}'.format(fmap.m + 1, fmap.m,
                                                                      len(fmap.values)))
    for i, v in enumerate(fmap.values):
        if not 0 <= v <= fmap.p:
            raise RangeError('f({})={} lies outside [0, {}]'.format(i, v, fmap.p))
    for i in range(fmap.m):
        if fmap.values[i + 1] < fmap.values[i]:
            raise NonMonotoneMap('f decreases between {} and {}: {} > {}'.format(
                i, i + 1, fmap.values[i], fmap.values[i + 1]))
    return CantorSystem(fmap)


def system_from_table(values, p):
    """
    Shortcut for validate_system(BaseConversionMap(len(values)-1, p, values)).
    """
    values = list(values)
    return validate_system(BaseConversionMap(len(values) - 1, p, values))


class QuadraticFamily(object):
    """
    The map x -> ax^2 + bx on {0..m}, with target digit bound p = am^2 + bm.
    """

    def __init__(self, a, b, m):
        self.a = int(a)
        self.b = int(b)
        self.m = int(m)

    @property
    def p(self):
        return self.a * self.m ** 2 + self.b * self.m

    def f(self, x):
        return self.a * x * x + self.b * x

    def to_map(self):
        return BaseConversionMap(self.m, self.p, [self.f(x) for x in range(self.m + 1)])

    def validate(self):
        """
        Check 2ax+b > 0 on [1, m] and the map invariants of the induced system.

        Returns:
            CantorSystem
        """
        # the derivative is affine, so the endpoints decide
        if 2 * self.a + self.b <= 0 or 2 * self.a * self.m + self.b <= 0:
            raise NonMonotoneMap('2ax+b must be positive on [1, {}] for a={}, b={}'.format(
                self.m, self.a, self.b))
        return validate_system(self.to_map())

    def label(self):
        return 'quad:{},{},{}'.format(self.a, self.b, self.m)

    def __repr__(self):
        return 'QuadraticFamily(a={}, b={}, m={})'.format(self.a, self.b, self.m)


class DigitWord(object):
    """
    A base-`base` digit string, most significant digit first. Leading zeros are stripped; the
    zero word is (0,).
    """

    def __init__(self, base, digits):
        if base < 2:
            raise ValueError('Base must be at least 2, got {}'.format(base))
        digits = [int(d) for d in digits]
        for d in digits:
            if not 0 <= d < base:
                raise DigitOutOfRange('Digit {} is not valid in base {}'.format(d, base))
        while len(digits) > 1 and digits[0] == 0:
            digits.pop(0)
        self.base = int(base)
        self.digits = tuple(digits) if digits else (0,)

    def is_zero(self):
        return self.digits == (0,)

    def padded(self, k):
        """
        Returns:
            (DigitWord) this word followed by k zeros
        """
        if self.is_zero():
            return self
        return DigitWord(self.base, self.digits + (0,) * k)

    def __len__(self):
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __eq__(self, other):
        return isinstance(other, DigitWord) and (self.base, self.digits) == (other.base,
                                                                              other.digits)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.base, self.digits))

    def __str__(self):
        sep = '' if self.base <= 10 else ':'
        return '[{}]_{}'.format(sep.join(str(d) for d in self.digits), self.base)

    def __repr__(self):
        return 'DigitWord({}, {})'.format(self.base, list(self.digits))


def to_digits(n, base):
    """
    Args:
        n (int): nonnegative integer
        base (int): >= 2

    Returns:
        DigitWord
    """
    if n < 0:
        raise ValueError('Cannot expand negative {}'.format(n))
    if base < 2:
        raise ValueError('Base must be at least 2, got {}'.format(base))
    digits = []
    while n:
        n, r = divmod(n, base)
        digits.append(r)
    return DigitWord(base, reversed(digits))


def from_digits(word, base=None):
    """
    Args:
        word (DigitWord or [int]): the digits, most significant first
        base (int): required when word is a plain sequence

    Returns:
        (int) the value of the word
    """
    if not isinstance(word, DigitWord):
        word = DigitWord(base, word)
    elif base is not None and base != word.base:
        raise ValueError('Word is in base {}, not {}'.format(word.base, base))
    n = 0
    for d in word.digits:
        n = n * word.base + d
    return n


def map_word(sys, word):
    """
    Returns:
        (DigitWord) the base-(p+1) word of f-images of a base-(m+1) word
    """
    if word.base != sys.b:
        raise ValueError('Word is in base {}, system source base is {}'.format(word.base, sys.b))
    return DigitWord(sys.dst_base, [sys.values[d] for d in word.digits])


def _cantor_digit_map(sys, n):
    # the empty word: C_0 = 0 whatever f(0) is
    if n == 0:
        return 0
    return from_digits(map_word(sys, to_digits(n, sys.b)))


def _cantor_recurrence(sys, n):
    # C_{(m+1)n'+r} = (p+1) C_{n'} + f(r), unwound from the least significant digit
    c, power = 0, 1
    while n:
        n, r = divmod(n, sys.b)
        c += sys.values[r] * power
        power *= sys.dst_base
    return c


def _verify_on(n, verify):
    return n < cl_config.VERIFY_CAP if verify is None else verify


def cantor_value(sys, n, verify=None):
    """
    The Cantor-integer C_n.

    Args:
        sys (CantorSystem)
        n (int): nonnegative index
        verify (bool): evaluate by both strategies and compare; default is n < VERIFY_CAP

    Returns:
        (int) C_n
    """
    n = int(n)
    if n < 0:
        raise ValueError('Index must be nonnegative, got {}'.format(n))
    c = _cantor_recurrence(sys, n)
    if _verify_on(n, verify):
        c_map = _cantor_digit_map(sys, n)
        if c_map != c:
            _log().error('C_{} differs: digit map {} vs recurrence {}'.format(n, c_map, c))
            raise StrategyMismatch('C_{} of {}: digit map gives {}, recurrence gives {}'.format(
                n, sys, c_map, c))
    return c


def delta_cantor(sys, n, verify=None):
    """
    The difference C_n - C_{n-1} from the recurrences
    Delta C_{(m+1)n} = (p+1) Delta C_n + f(0) - f(m) and Delta C_{(m+1)n+r} = f(r) - f(r-1),
    with Delta C_1 = f(1) since C_0 = 0.

    Args:
        sys (CantorSystem)
        n (int): index >= 1
        verify (bool): compare with two cantor_value calls; default is n < VERIFY_CAP

    Returns:
        (int) C_n - C_{n-1}
    """
    n = int(n)
    if n < 1:
        raise ValueError('Delta C_n needs n >= 1, got {}'.format(n))
    k, zeros = n, 0
    while k % sys.b == 0:
        k //= sys.b
        zeros += 1
    d = sys.f(1) if k == 1 else sys.delta_f[k % sys.b - 1]
    for _ in range(zeros):
        d = sys.dst_base * d + sys.f(0) - sys.f_m
    if _verify_on(n, verify):
        d_sub = cantor_value(sys, n, verify=True) - cantor_value(sys, n - 1, verify=True)
        if d_sub != d:
            raise StrategyMismatch('Delta C_{} of {}: recurrence gives {}, subtraction {}'.format(
                n, sys, d, d_sub))
    return d


def ratio(sys, n, prec=None):
    """
    C_n / n^alpha, with n^alpha evaluated as exp(alpha ln n) at prec+32 bits and rounded; exact for
    n a power of m+1.

    Returns:
        mpf
    """
    n = int(n)
    if n < 1:
        raise ValueError('ratio needs n >= 1, got {}'.format(n))
    return sys.quotient(cantor_value(sys, n), n).value(prec)


def float_ratio(sys, n):
    return cantor_value(sys, n, verify=False) / float(n) ** sys.alpha_float


def _table_dtype(sys, n_max):
    ndigits = len(to_digits(max(n_max, 1), sys.b))
    return np.int64 if sys.dst_base ** ndigits < INT64_LIMIT else object


def cantor_table(sys, n_max, n_min=0):
    """
    Vectorized C_n for n_min <= n <= n_max.

    Returns:
        numpy array of int64, or of Python ints (object dtype) when values may overflow
    """
    dtype = _table_dtype(sys, n_max)
    if dtype is object:
        _log().debug('cantor_table up to {} uses object dtype'.format(n_max))
        idx = np.array(range(n_min, n_max + 1), dtype=object)
    else:
        idx = np.arange(n_min, n_max + 1, dtype=np.int64)
    f_arr = np.array(sys.values, dtype=dtype)
    table = np.zeros(len(idx), dtype=dtype)
    power = 1
    while len(idx) and np.any(idx > 0):
        # exhausted indices have no leading zero digits
        digits = np.where(idx > 0, f_arr[(idx % sys.b).astype(np.int64)], 0)
        table = table + digits * power
        idx = idx // sys.b
        power *= sys.dst_base
    return table


def ratio_table(sys, n_max, n_min=1):
    """
    Float64 C_n / n^alpha for n_min <= n <= n_max; only used to prefilter candidates.
    """
    n_min = max(n_min, 1)
    table = cantor_table(sys, n_max, n_min).astype(np.float64)
    n = np.arange(n_min, n_max + 1, dtype=np.float64)
    return table / np.power(n, sys.alpha_float)


class IfsSystem(object):
    """
    The iterated function system S_i(x) = (x + f(i))/(p+1), i = 0..m, with equal weights
    1/(m+1). Its attractor lies in the hull [0, f(m)/p].
    """

    def __init__(self, sys):
        self.sys = sys
        self.weights = tuple(Fraction(1, sys.b) for _ in range(sys.b))
        self.hull = (Fraction(0), Fraction(sys.f_m, sys.p))

    def apply(self, i, x):
        return (Fraction(x) + self.sys.values[i]) / self.sys.dst_base

    def apply_word(self, digits, x):
        """
        S_{d1} o S_{d2} o ... o S_{dk}(x)
        """
        for d in reversed(list(digits)):
            x = self.apply(d, x)
        return x

    def cylinder(self, digits):
        """
        Returns:
            (Fraction, Fraction) the image of the hull under the composed word
        """
        return self.apply_word(digits, self.hull[0]), self.apply_word(digits, self.hull[1])

    def children(self, lo, hi):
        """
        Split a level interval [lo, hi] into the m+1 sub-intervals of the next level.
        """
        step = (hi - lo) / (self.hull[1] * self.sys.dst_base)
        return [(lo + self.sys.values[i] * step, lo + (self.sys.values[i] + self.hull[1]) * step)
                for i in range(self.sys.b)]


def growth_bound_violations(sys, n_max):
    """
    Indices m+1 <= n <= n_max with C_n/n < (f(m)+m+1)/(2m+1).

    Returns:
        [int]
    """
    if n_max < sys.b:
        return []
    table = cantor_table(sys, n_max, sys.b)
    n = np.arange(sys.b, n_max + 1, dtype=np.int64)
    lhs_scale, rhs_scale = 2 * sys.m + 1, sys.f_m + sys.m + 1
    if table.dtype != object and int(table[-1]) * lhs_scale >= INT64_LIMIT:
        table = table.astype(object)
        n = n.astype(object)
    bad = np.nonzero(table * lhs_scale < n * rhs_scale)[0]
    return [int(i) + sys.b for i in bad]


def appending_m_violations(sys, n_max, prec=None):
    """
    Indices m+1 <= n <= n_max with ratio((m+1)n + m) > ratio(n).

    Floats decide clear cases; anything within TIE_RELATIVE_TOL is compared exactly.

    Returns:
        [int]
    """
    if n_max < sys.b:
        return []
    big = sys.b * n_max + sys.m
    floats = ratio_table(sys, big)  # index n-1 holds ratio(n)
    tol = cl_config.TIE_RELATIVE_TOL
    violations = []
    for n in range(sys.b, n_max + 1):
        child = sys.b * n + sys.m
        r_n, r_c = floats[n - 1], floats[child - 1]
        if r_c < r_n * (1 - tol):
            continue
        if r_c > r_n * (1 + tol):
            violations.append(n)
            continue
        c_n = cantor_value(sys, n, verify=False)
        c_c = cantor_value(sys, child, verify=False)
        if sys.quotient(c_c, child).compare(sys.quotient(c_n, n), prec) > 0:
            violations.append(n)
    return violations


def _log():
    return get_cl_logger('cantorlab.cantor_core')
