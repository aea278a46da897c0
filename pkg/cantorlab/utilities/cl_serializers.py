# coding: utf-8

from __future__ import unicode_literals

"""
This module aids in serializing the result objects of cantorlab.

To serialize a result, subclass CLSerializable and implement to_dict() and from_dict(). The base
class then supplies JSON and YAML strings and files:
    - result.to_format('json'), result.to_file('extrema.yaml')
    - ExtremaResult.from_file('extrema.yaml')

High-precision numbers (mpmath mpf/mpc), exact rationals and numpy values are written as strings
or lists by recursive_dict() so that no digits are lost to a double-precision detour.
"""

import abc
import json
from fractions import Fraction

import mpmath
import numpy as np
import yaml
from mpmath import mp

try:
    from yaml import CSafeLoader as Loader, CSafeDumper as Dumper
except ImportError:
    from yaml import SafeLoader as Loader, SafeDumper as Dumper

from cantorlab import cl_config
from cantorlab.cl_config import YAML_STYLE

__author__ = 'cantorlab developers'
__copyright__ = 'Copyright 2026, cantorlab developers'
__version__ = '0.1'
__maintainer__ = 'cantorlab developers'
__email__ = 'cantorlab@users.noreply.github.com'
__date__ = 'Oct 16, 2026'

ENCODING_PARAMS = {"encoding": "utf-8"}


def _hp_prec(prec=None):
    # never below the configured precision, nor below an enclosing workprec block
    return max(int(prec) if prec else cl_config.PRECISION_BITS, mp.prec)


def hp_to_str(x, prec=None):
    """
    Decimal string of an mpf carrying enough digits to round-trip at precision P, where P is the
    larger of the value's mantissa size and prec (default cl_config.PRECISION_BITS).

    Args:
        x (mpf): ints, floats and strings are converted at P first
        prec (int): bits

    Returns:
        str
    """
    prec = _hp_prec(prec)
    with mp.workprec(prec):
        if not isinstance(x, mpmath.mpf):
            x = mpmath.mpf(x)
        if not mpmath.isfinite(x):
            return str(x)
        bits = max(x._mpf_[3], prec)  # mantissa bit count
        return mpmath.nstr(x, int(bits * 0.30103) + 2)


def recursive_dict(obj):
    if obj is None:
        return None

    if hasattr(obj, 'to_dict'):
        return recursive_dict(obj.to_dict())

    if isinstance(obj, dict):
        return {recursive_dict(k): recursive_dict(v) for k, v in obj.items()}

    if isinstance(obj, (list, tuple)):
        return [recursive_dict(v) for v in obj]

    if isinstance(obj, bool):
        return obj

    if isinstance(obj, int):
        # beyond 2^53 a JSON reader may silently round
        return obj if abs(obj) < 2 ** 53 else str(obj)

    if isinstance(obj, float):
        return obj

    if isinstance(obj, Fraction):
        return str(obj)

    if isinstance(obj, mpmath.mpf):
        return hp_to_str(obj)

    if isinstance(obj, mpmath.mpc):
        return [hp_to_str(obj.real), hp_to_str(obj.imag)]

    if isinstance(obj, np.ndarray):
        return [recursive_dict(v) for v in obj.tolist()]

    if isinstance(obj, np.integer):
        return recursive_dict(int(obj))

    if isinstance(obj, np.floating):
        return float(obj)

    return str(obj)


def recursive_serialize(func):
    """
    a decorator to make the output of to_dict() plain JSON data
    see documentation of CLSerializable for more details
    """
    def _decorator(self, *args, **kwargs):
        m_dict = func(self, *args, **kwargs)
        m_dict = recursive_dict(m_dict)
        return m_dict

    return _decorator


def serialize_cl(func):
    """
    a decorator to add the _cl_name key
    see documentation of CLSerializable for more details
    """
    def _decorator(self, *args, **kwargs):
        m_dict = func(self, *args, **kwargs)
        m_dict['_cl_name'] = self.cl_name
        return m_dict

    return _decorator


def hp_from_str(s, prec=None):
    """
    Inverse of recursive_dict for a high-precision real or complex entry, parsed at prec bits
    (default cl_config.PRECISION_BITS, or the enclosing workprec when that is larger).
    """
    if s is None:
        return None
    with mp.workprec(_hp_prec(prec)):
        if isinstance(s, (list, tuple)):
            return mpmath.mpc(mpmath.mpf(s[0]), mpmath.mpf(s[1]))
        return mpmath.mpf(s)


class CLSerializable(object, metaclass=abc.ABCMeta):
    """
    To create a serializable object within cantorlab, subclass this class and implement the
    to_dict() and from_dict() methods. Use @serialize_cl on to_dict() to tag the dict with the
    class' _cl_name, and @recursive_serialize to make its values JSON-safe.
    """

    @property
    def cl_name(self):
        try:
            return self._cl_name
        except AttributeError:
            return self.__class__.__name__

    @abc.abstractmethod
    def to_dict(self):
        raise NotImplementedError('CLSerializable object did not implement to_dict()!')

    @classmethod
    @abc.abstractmethod
    def from_dict(cls, m_dict):
        raise NotImplementedError('CLSerializable object did not implement from_dict()!')

    def __repr__(self):
        return json.dumps(self.to_dict())

    def to_format(self, f_format='json', **kwargs):
        """
        returns a String representation in the given format

        Args:
            f_format (str): the format to output to (default json)
        """
        if f_format == 'json':
            return json.dumps(self.to_dict(), **kwargs)
        elif f_format == 'yaml':
            return yaml.dump(self.to_dict(), default_flow_style=YAML_STYLE,
                             allow_unicode=True, Dumper=Dumper)
        else:
            raise ValueError('Unsupported format {}'.format(f_format))

    @classmethod
    def from_format(cls, f_str, f_format='json'):
        """
        convert from a String representation to its Object.

        Args:
            f_str (str): the String representation
            f_format (str): serialization format of the String (default json)

        Returns:
            CLSerializable
        """
        if f_format == 'json':
            return cls.from_dict(json.loads(f_str))
        elif f_format == 'yaml':
            return cls.from_dict(yaml.load(f_str, Loader=Loader))
        else:
            raise ValueError('Unsupported format {}'.format(f_format))

    def to_file(self, filename, f_format=None, **kwargs):
        """
        Write a serialization of this object to a file.

        Args:
            filename(str): filename to write to
            f_format (str): serialization format, default checks the filename extension
        """
        if f_format is None:
            f_format = filename.split('.')[-1]
        with open(filename, 'w', **ENCODING_PARAMS) as f:
            f.write(self.to_format(f_format=f_format, **kwargs))

    @classmethod
    def from_file(cls, filename, f_format=None):
        """
        Load a serialization of this object from a file.

        Args:
            filename (str): filename to read
            f_format (str): serialization format, default checks the filename extension

        Returns:
            CLSerializable
        """
        if f_format is None:
            f_format = filename.split('.')[-1]
        with open(filename, 'r', **ENCODING_PARAMS) as f:
            return cls.from_format(f.read(), f_format=f_format)
