"""Vectorised enumeration of all linearized polynomials f_a, a in F_{p^m}^k.

The evaluation map a -> (f_a(x))_x is F_p-linear, so with a written in
F_p-digits it is a single integer matrix G of shape (m k, q m).  A block of
coefficient vectors is evaluated at every field element with one matrix
product mod p.  Index n in [0, q^k) encodes a_j = (n // q^j) % q.

Work is split over disjoint index ranges; partial histograms merge by
addition, so results do not depend on the number of workers.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .field import FieldContext
from .params import FieldParams

BLOCK_ELEMENTS = 2 ** 21


def generator_matrix(ctx: FieldContext) -> np.ndarray:
    """Row (j, t): F_p-digits of p^t * x^(p^(j d)) for every x, flattened."""
    q, m, k = ctx.order, ctx.m, ctx.k
    xs = np.arange(q, dtype=np.int64)
    rows = []
    for j in range(k):
        frob = np.array([ctx.frobenius(int(x), j * ctx.d) for x in xs], dtype=np.int64)
        for t in range(m):
            vals = ctx.mul_array(np.full(q, ctx.p ** t, dtype=np.int64), frob)
            rows.append(ctx.digits_array(vals).reshape(-1))
    return np.array(rows, dtype=np.int64)


def value_block(ctx: FieldContext, G: np.ndarray, start: int, stop: int) -> np.ndarray:
    """f_a(x) for a with index in [start, stop); shape (stop - start, q)."""
    p, m, q = ctx.p, ctx.m, ctx.order
    idx = np.arange(start, stop, dtype=np.int64)
    n_dig = G.shape[0]
    D = (idx[:, None] // (p ** np.arange(n_dig, dtype=np.int64))) % p
    V = (D @ G) % p
    return V.reshape(len(idx), q, m) @ (p ** np.arange(m, dtype=np.int64))


def block_ranges(start: int, stop: int, size: int):
    for lo in range(start, stop, size):
        yield lo, min(lo + size, stop)


def split_range(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def _rebuild(spec) -> FieldContext:
    p, m, d, k, modulus = spec
    return FieldContext(FieldParams(p, m, d, k), modulus)


def weight_histogram_range(spec, start: int, stop: int) -> Counter:
    """Histogram of codeword weights for nonzero a with index in [start, stop)."""
    ctx = _rebuild(spec)
    G = generator_matrix(ctx)
    rows = max(1, BLOCK_ELEMENTS // ctx.order)
    hist: Counter = Counter()
    for lo, hi in block_ranges(max(start, 1), stop, rows):
        vals = value_block(ctx, G, lo, hi)
        # codeword positions are the nonzero field elements pi^i
        weights = np.count_nonzero(vals[:, 1:], axis=1)
        for w, c in zip(*np.unique(weights, return_counts=True)):
            hist[int(w)] += int(c)
    return hist


def root_count_histogram_range(spec, start: int, stop: int) -> Counter:
    """Histogram over (a, c) of N = #{x : f_a(x) = c}, for a with index in [start, stop).

    Every c in F_{p^m} is visited, so this is the root count of
    -c + f_a for all constants.
    """
    ctx = _rebuild(spec)
    q = ctx.order
    G = generator_matrix(ctx)
    rows = max(1, BLOCK_ELEMENTS // q)
    hist: Counter = Counter()
    for lo, hi in block_ranges(start, stop, rows):
        vals = value_block(ctx, G, lo, hi)
        n = hi - lo
        flat = (np.arange(n, dtype=np.int64)[:, None] * q + vals).ravel()
        counts = np.bincount(flat, minlength=n * q)
        for N, c in zip(*np.unique(counts, return_counts=True)):
            hist[int(N)] += int(c)
    return hist


def run_partitioned(fn, ctx: FieldContext, total: int, workers: int = 1) -> Counter:
    """Apply ``fn(spec, lo, hi)`` over [0, total) split into ``workers`` parts and merge."""
    spec = (ctx.p, ctx.m, ctx.d, ctx.k, list(ctx.modulus))
    ranges = split_range(total, workers)
    merged: Counter = Counter()
    if workers <= 1 or len(ranges) == 1:
        for lo, hi in ranges:
            merged.update(fn(spec, lo, hi))
        return merged
    with ProcessPoolExecutor(max_workers=min(workers, os.cpu_count() or 1)) as pool:
        futures = [pool.submit(fn, spec, lo, hi) for lo, hi in ranges]
        for fut in futures:
            merged.update(fut.result())
    return merged
