"""Exact associativity check over all triples of a truncation.

Two exact back ends:

* integer: when a common denominator ``D`` of every structure constant
  involved keeps ``D**2 * S**2`` inside int64 (S = largest support), all
  constants are scaled to integers and the triple loop runs compiled;
* rational: otherwise the loop runs over ``gmpy2.mpq``.

Only the commutative case is handled: ``x*(y*z)`` is evaluated as
``(y*z)*x``, which lets both sides be read from one table indexed by
(element of T*T, element of T).  Commutativity itself is checked elsewhere.
"""
from __future__ import annotations

import math
import os
from array import array

import numpy as np
from gmpy2 import mpq
from numba import config as _numba_config, njit, prange

from .core import Hypergroup, support_product

__all__ = ['check_associativity']

_INT_LIMIT = 2 ** 62

# prefer OpenMP: an outdated system TBB otherwise triggers a warning on first launch
if 'NUMBA_THREADING_LAYER_PRIORITY' not in os.environ:
    _numba_config.THREADING_LAYER_PRIORITY = ['omp', 'tbb', 'workqueue']


@njit(cache=True, parallel=True)
def _kernel(tpos, u2w, start, tgt, wt, n_t, n_u):
    bad = np.full(n_t, -1, dtype=np.int64)
    for xi in prange(n_t):
        acc = np.zeros(n_u, dtype=np.int64)
        touched = np.empty(n_u, dtype=np.int64)
        mark = np.zeros(n_u, dtype=np.uint8)
        x = tpos[xi]
        done = False
        for yi in range(n_t):
            if done:
                break
            pxy = x * n_t + yi
            y = tpos[yi]
            for zi in range(n_t):
                nt = 0
                for k in range(start[pxy], start[pxy + 1]):
                    w = u2w[tgt[k]]
                    a = wt[k]
                    pwz = w * n_t + zi
                    for m in range(start[pwz], start[pwz + 1]):
                        u = tgt[m]
                        if mark[u] == 0:
                            mark[u] = 1
                            touched[nt] = u
                            nt += 1
                        acc[u] += a * wt[m]
                pyz = y * n_t + zi
                for k in range(start[pyz], start[pyz + 1]):
                    v = u2w[tgt[k]]
                    b = wt[k]
                    pvx = v * n_t + xi
                    for m in range(start[pvx], start[pvx + 1]):
                        u = tgt[m]
                        if mark[u] == 0:
                            mark[u] = 1
                            touched[nt] = u
                            nt += 1
                        acc[u] -= b * wt[m]
                ok = True
                for i in range(nt):
                    u = touched[i]
                    if acc[u] != 0:
                        ok = False
                    acc[u] = 0
                    mark[u] = 0
                if not ok:
                    bad[xi] = yi * n_t + zi
                    done = True
                    break
    return bad


def _build_table(H: Hypergroup, T: list, W: list):
    """CSR table of (w, z) -> delta_w * delta_z, or None if int64 cannot hold it."""
    uindex: dict = {w: i for i, w in enumerate(W)}
    start = array('q', [0])
    tgt = array('q')
    num = array('q')
    den = array('q')
    D = 1
    S = 0
    for w in W:
        for z in T:
            m = H.peek(w, z)
            S = max(S, len(m))
            for u, c in m.items():
                i = uindex.get(u)
                if i is None:
                    i = uindex[u] = len(uindex)
                D = math.lcm(D, c.denominator)
                if D > _INT_LIMIT or abs(c.numerator) > _INT_LIMIT:
                    return None
                tgt.append(i)
                num.append(c.numerator)
                den.append(c.denominator)
            start.append(len(tgt))
    if D * D * S * S >= _INT_LIMIT:
        return None
    return uindex, start, tgt, num, den, D


def _rational_check(H: Hypergroup, T: list, W: list):
    col = {z: j for j, z in enumerate(T)}
    table = {}
    for w in W:
        for z in T:
            table[(w, col[z])] = [(u, mpq(c.numerator, c.denominator)) for u, c in H.peek(w, z).items()]
    for xi, x in enumerate(T):
        for yi, y in enumerate(T):
            xy = table[(x, yi)]
            for zi, z in enumerate(T):
                acc: dict = {}
                for w, a in xy:
                    for u, c in table[(w, zi)]:
                        acc[u] = acc.get(u, 0) + a * c
                for v, b in table[(y, zi)]:
                    for u, c in table[(v, xi)]:
                        acc[u] = acc.get(u, 0) - b * c
                if any(acc.values()):
                    return (x, y, z)
    return None


def check_associativity(H: Hypergroup, T) -> tuple | None:
    """First triple (x, y, z) of ``T`` with (x*y)*z != x*(y*z), or None."""
    T = sorted(set(T), key=H.order_key)
    W = sorted(support_product(H, T, T) | set(T), key=H.order_key)
    built = _build_table(H, T, W)
    if built is None:
        return _rational_check(H, T, W)
    uindex, start, tgt, num, den, D = built
    num = np.frombuffer(num, dtype=np.int64)
    den = np.frombuffer(den, dtype=np.int64)
    wt = num * (D // den)
    windex = {w: i for i, w in enumerate(W)}
    u2w = np.full(len(uindex), -1, dtype=np.int64)
    u2w[:len(W)] = np.arange(len(W))
    tpos = np.array([windex[t] for t in T], dtype=np.int64)
    bad = _kernel(tpos, u2w, np.frombuffer(start, dtype=np.int64), np.frombuffer(tgt, dtype=np.int64),
                  wt, len(T), len(uindex))
    for xi, code in enumerate(bad):
        if code >= 0:
            yi, zi = divmod(int(code), len(T))
            return (T[xi], T[yi], T[zi])
    return None
