"""Numba-compiled twins of the table-lookup kernels.

Importing this module fails cleanly when numba is absent; the backend
selector treats that as "fall back to numpy". All kernels take int64 arrays.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def mul_vec(M, xs, y):
    out = np.empty(xs.shape[0], dtype=np.int64)
    for i in range(xs.shape[0]):
        out[i] = M[xs[i], y]
    return out


@njit(cache=True)
def mul_rvec(M, x, ys):
    out = np.empty(ys.shape[0], dtype=np.int64)
    for i in range(ys.shape[0]):
        out[i] = M[x, ys[i]]
    return out


@njit(cache=True)
def mul_pairwise(M, xs, ys):
    out = np.empty(xs.shape[0], dtype=np.int64)
    for i in range(xs.shape[0]):
        out[i] = M[xs[i], ys[i]]
    return out


@njit(cache=True)
def unary_map(S, xs):
    out = np.empty(xs.shape[0], dtype=np.int64)
    for i in range(xs.shape[0]):
        out[i] = S[xs[i]]
    return out


@njit(cache=True)
def outer_add(A, xs, ys):
    out = np.empty((xs.shape[0], ys.shape[0]), dtype=np.int64)
    for i in range(xs.shape[0]):
        for j in range(ys.shape[0]):
            out[i, j] = A[xs[i], ys[j]]
    return out


@njit(cache=True)
def scan_left_dual_bc_core(M, S, a, b, memb):
    """Witness mask for b.x.a.b = b, (x.a.b)* = x.a.b, x constrained by memb."""
    n = M.shape[0]
    out = np.zeros(n, dtype=np.bool_)
    for x in range(n):
        if not memb[x]:
            continue
        xab = M[M[x, a], b]
        if M[b, xab] == b and S[xab] == xab:
            out[x] = True
    return out


@njit(cache=True)
def scan_inner(M, u):
    """Mask over g of u.g.u = u."""
    n = M.shape[0]
    out = np.zeros(n, dtype=np.bool_)
    for g in range(n):
        if M[M[u, g], u] == u:
            out[g] = True
    return out
