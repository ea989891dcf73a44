"""Pure-numpy fallback kernels.

Block-vectorized versions of the numba loops in _kernels_numba: each block
evaluates up to _BLOCK terms at once, then the per-term tail bounds locate
the exact first index where truncation is allowed, so terms_used matches the
scalar kernels. Results agree with the numba backend to a few ulps (the
summation order differs).
"""

import numpy as np

STATUS_OK = 0
STATUS_MAX_TERMS = 1

_BLOCK = 1024
_DIGAMMA_BLOCK = 1 << 16


def log_qpochhammer(a, q, eps, max_terms):
    """sum_{n>=0} log(1 - a q^n), truncated at the first N whose geometric
    tail bound |a| q^N / ((1-q)(1-|a| q^N)) drops below eps."""
    total = 0.0
    n = 0
    tail = np.inf
    while n < max_terms:
        m = min(_BLOCK, max_terms - n)
        powers = a * q ** np.arange(n, n + m, dtype=np.float64)
        terms = np.log1p(-powers)
        nxt = np.abs(powers * q)
        tails = nxt / ((1.0 - q) * (1.0 - nxt))
        hits = tails < eps
        if hits.any():
            j = int(np.argmax(hits))
            total += float(terms[: j + 1].sum())
            return total, float(tails[j]), n + j + 1, STATUS_OK
        total += float(terms.sum())
        n += m
        tail = float(tails[-1])
    return total, tail, n, STATUS_MAX_TERMS


def geometric_series(shift, q, eps, max_terms):
    """sum_{n>=0} q^(shift+n) / (1 - q^(shift+n)), truncated at the first N
    whose tail bound q^(shift+N) / ((1-q)(1-q^(shift+N))) drops below eps."""
    total = 0.0
    n = 0
    tail = np.inf
    while n < max_terms:
        m = min(_BLOCK, max_terms - n)
        powers = q ** (shift + np.arange(n, n + m, dtype=np.float64))
        terms = powers / (1.0 - powers)
        nxt = powers * q
        tails = nxt / ((1.0 - q) * (1.0 - nxt))
        hits = tails < eps
        if hits.any():
            j = int(np.argmax(hits))
            total += float(terms[: j + 1].sum())
            return total, float(tails[j]), n + j + 1, STATUS_OK
        total += float(terms.sum())
        n += m
        tail = float(tails[-1])
    return total, tail, n, STATUS_MAX_TERMS


def digamma_partial_sum(x, n_terms):
    """Partial sum of sum_{k=0}^{n_terms-1} 1/((k+1)(x+k)), pairwise-summed."""
    total = 0.0
    n = 0
    while n < n_terms:
        m = min(_DIGAMMA_BLOCK, n_terms - n)
        k = np.arange(n, n + m, dtype=np.float64)
        total += float((1.0 / ((k + 1.0) * (x + k))).sum())
        n += m
    return total
