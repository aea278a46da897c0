# coding: utf-8

from __future__ import unicode_literals

"""
This module runs the brute-force extrema scans over several processes.

The index range is cut into contiguous blocks; every worker returns the exact arg-extrema of its
blocks and the parent merges them in index order, so the result does not depend on the number of
processes.
"""

import multiprocessing

from mpmath import mp

from cantorlab.cl_config import ScanData
from cantorlab.core.extrema import scan_ratio, scan_inf_form, ExtremaResult
from cantorlab.utilities.cl_utilities import get_cl_logger, log_multi
from cantorlab.utilities.hp_arith import best_quotient, resolve_prec, power_alpha

__author__ = 'cantorlab developers'
__copyright__ = 'Copyright 2026, cantorlab developers'
__version__ = '0.1'
__maintainer__ = 'cantorlab developers'
__email__ = 'cantorlab@users.noreply.github.com'
__date__ = 'Oct 16, 2026'

SCAN_KINDS = ('ratio_max', 'inf_form_min', 'ratio_min')


def split_blocks(n_lo, n_hi, num_blocks):
    """
    Cut [n_lo, n_hi] into at most num_blocks contiguous blocks of nearly equal size.

    Args:
        n_lo (int): first index
        n_hi (int): last index (inclusive)
        num_blocks (int): number of blocks

    Returns:
        ([(int, int)]) inclusive block bounds in increasing order
    """
    if n_hi < n_lo:
        raise ValueError("can't split the empty range [{}, {}]".format(n_lo, n_hi))
    if num_blocks < 1:
        raise ValueError('need at least one block, got {}'.format(num_blocks))
    size = n_hi - n_lo + 1
    num_blocks = min(num_blocks, size)
    bounds = [n_lo + size * i // num_blocks for i in range(num_blocks + 1)]
    return [(bounds[i], bounds[i + 1] - 1) for i in range(num_blocks)]


def _init_worker(nproc):
    sd = ScanData()
    sd.MULTIPROCESSING = True
    sd.NPROCS = nproc


def scan_block(args):
    """
    Exact arg-extrema of one block.

    Args:
        args (tuple): (sys, n_lo, n_hi, prec)

    Returns:
        (dict) kind -> (witness, AlphaQuotient)
    """
    sys, n_lo, n_hi, prec = args
    log_multi(_log(), 'Scanning block [{}, {}]'.format(n_lo, n_hi), 'debug')
    result = {}
    for kind in SCAN_KINDS:
        if kind == 'inf_form_min':
            ext = scan_inf_form(sys, n_lo, n_hi, prec)
        else:
            ext = scan_ratio(sys, n_lo, n_hi, kind.split('_')[1], prec)
        result[kind] = (ext.witness, ext.quotient)
    return result


def merge_blocks(block_results, prec=None):
    """
    Combine per-block arg-extrema; ties go to the smallest index.

    Returns:
        (dict) kind -> (witness, AlphaQuotient)
    """
    merged = {}
    for kind in SCAN_KINDS:
        mode = 'max' if kind == 'ratio_max' else 'min'
        merged[kind] = best_quotient([r[kind] for r in block_results], mode, prec)
    return merged


def parallel_extrema_scan(sys, n_max, nproc=None, num_blocks=None, prec=None):
    """
    Brute-force extrema over 1 <= n <= n_max computed block by block.

    Args:
        sys (CantorSystem)
        n_max (int): last index, >= m+1
        nproc (int): worker processes, default ScanData().NPROCS; 1 scans in this process
        num_blocks (int): blocks to cut the range into, default 4 * nproc
        prec (int): bits

    Returns:
        ExtremaResult with method 'brute_force', identical to brute_force_extrema()
    """
    if n_max < sys.b:
        raise ValueError('Brute force needs n_max >= m+1 = {}, got {}'.format(sys.b, n_max))
    prec = resolve_prec(prec)
    nproc = nproc if nproc else ScanData().NPROCS
    blocks = split_blocks(1, n_max, num_blocks if num_blocks else 4 * nproc)
    tasks = [(sys, lo, hi, prec) for lo, hi in blocks]
    _log().info('Scanning {} up to {} in {} blocks on {} processes'.format(
        sys, n_max, len(blocks), nproc))

    if nproc == 1:
        block_results = [scan_block(t) for t in tasks]
    else:
        pool = multiprocessing.Pool(nproc, initializer=_init_worker, initargs=(nproc,))
        try:
            # map keeps the block order
            block_results = pool.map(scan_block, tasks)
        finally:
            pool.close()
            pool.join()

    merged = merge_blocks(block_results, prec)
    sup_w, sup_q = merged['ratio_max']
    inf_w, inf_q = merged['inf_form_min']
    rmin_w, rmin_q = merged['ratio_min']
    sup, inf, rmin = sup_q.value(prec), inf_q.value(prec), rmin_q.value(prec)
    with mp.workprec(prec):
        const = (rmin - inf) * power_alpha(n_max, sys.b, sys.dst_base, prec) / n_max
    return ExtremaResult(sup, inf, sup_w, inf_w, None, 'brute_force', ratio_min=rmin,
                         ratio_min_witness=rmin_w, convergence_constant=const, n_max=n_max)


def _log():
    return get_cl_logger('cantorlab.multi_scan')
