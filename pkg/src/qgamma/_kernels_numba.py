"""Numba-jitted hot loops.

Same call surface as _kernels_numpy; qgamma.backend picks one of the two at
import time. Each kernel returns (result, tail_bound, terms_used, status)
with status STATUS_OK or STATUS_MAX_TERMS, so no exceptions cross the JIT
boundary.
"""

import math

import numpy as np
from numba import njit

STATUS_OK = 0
STATUS_MAX_TERMS = 1


@njit(cache=True)
def log_qpochhammer(a, q, eps, max_terms):
    """sum_{n>=0} log(1 - a q^n), truncated at the first N whose geometric
    tail bound |a| q^N / ((1-q)(1-|a| q^N)) drops below eps.

    Requires 0 < q < 1, a <= 1, |a| q < 1 and a != 1 (callers enforce).
    """
    total = 0.0
    p = a
    tail = np.inf
    n = 0
    while n < max_terms:
        total += math.log1p(-p)
        p *= q
        n += 1
        ap = abs(p)
        tail = ap / ((1.0 - q) * (1.0 - ap))
        if tail < eps:
            return total, tail, n, STATUS_OK
    return total, tail, n, STATUS_MAX_TERMS


@njit(cache=True)
def geometric_series(shift, q, eps, max_terms):
    """sum_{n>=0} q^(shift+n) / (1 - q^(shift+n)), truncated at the first N
    whose tail bound q^(shift+N) / ((1-q)(1-q^(shift+N))) drops below eps.

    Requires 0 < q < 1 and shift > 0 (callers enforce).
    """
    total = 0.0
    p = q ** shift
    tail = np.inf
    n = 0
    while n < max_terms:
        total += p / (1.0 - p)
        p *= q
        n += 1
        tail = p / ((1.0 - q) * (1.0 - p))
        if tail < eps:
            return total, tail, n, STATUS_OK
    return total, tail, n, STATUS_MAX_TERMS


@njit(cache=True)
def digamma_partial_sum(x, n_terms):
    """Kahan-compensated partial sum of sum_{k=0}^{n_terms-1} 1/((k+1)(x+k))."""
    total = 0.0
    comp = 0.0
    for k in range(n_terms):
        term = 1.0 / ((k + 1.0) * (x + k))
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total
