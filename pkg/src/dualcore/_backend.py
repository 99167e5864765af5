"""Kernel backend selection.

The finite-ring scans run on lookup tables. Two interchangeable
implementations exist: plain numpy fancy indexing, and numba-compiled loops.
`DUALCORE_BACKEND` picks one: "numpy", "numba", or "auto" (numba when
importable, numpy otherwise). Both expose the same functions and are checked
against each other in the test suite.
"""

import os

import numpy as np


class NumpyKernels:
    name = "numpy"

    @staticmethod
    def mul_vec(M, xs, y):
        return M[xs, y]

    @staticmethod
    def mul_rvec(M, x, ys):
        return M[x, ys]

    @staticmethod
    def mul_pairwise(M, xs, ys):
        return M[xs, ys]

    @staticmethod
    def unary_map(S, xs):
        return S[xs]

    @staticmethod
    def outer_add(A, xs, ys):
        return A[np.ix_(xs, ys)]

    @staticmethod
    def scan_left_dual_bc_core(M, S, a, b, memb):
        xab = M[M[:, a], b]
        return memb & (M[b][xab] == b) & (S[xab] == xab)

    @staticmethod
    def scan_inner(M, u):
        return M[M[u, :], u] == u


class NumbaKernels:
    name = "numba"

    def __init__(self, mod):
        self.mul_vec = mod.mul_vec
        self.mul_rvec = mod.mul_rvec
        self.mul_pairwise = mod.mul_pairwise
        self.unary_map = mod.unary_map
        self.outer_add = mod.outer_add
        self.scan_left_dual_bc_core = mod.scan_left_dual_bc_core
        self.scan_inner = mod.scan_inner


def _load_numba():
    from . import _kernels_numba

    return NumbaKernels(_kernels_numba)


def select_backend(name=None):
    """Resolve the kernel backend; `name` overrides the environment flag."""
    choice = name or os.environ.get("DUALCORE_BACKEND", "auto")
    if choice == "numpy":
        return NumpyKernels()
    if choice == "numba":
        return _load_numba()
    if choice == "auto":
        try:
            return _load_numba()
        except ImportError:
            return NumpyKernels()
    raise ValueError(f"unknown backend {choice!r}")
