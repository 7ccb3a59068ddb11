"""Shared numerical plumbing: quadrature nodes, spectral integration on
Chebyshev grids, adaptive Simpson, and limit extrapolation ladders."""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from numpy.polynomial import chebyshev as _cheb
from numpy.polynomial.legendre import leggauss

from .errors import NonConvergenceError


@lru_cache(maxsize=None)
def gauss_legendre(order: int):
    """Nodes and weights on [-1, 1]. Cached; callers must not mutate."""
    x, w = leggauss(order)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


@lru_cache(maxsize=None)
def cheb_grid(m: int):
    """Chebyshev-Lobatto machinery on [-1, 1] with m points.

    Returns (x, vinv, tails) where x is ascending and includes both endpoints,
    vinv maps point values to Chebyshev coefficients, and tails maps point
    values v to the exact integrals of the degree m-1 interpolant,
    (tails @ v)[k] = integral of p over [x_k, 1].
    """
    if m < 3:
        raise ValueError("need at least 3 collocation points")
    x = -np.cos(np.pi * np.arange(m) / (m - 1))
    x[0], x[-1] = -1.0, 1.0
    v = _cheb.chebvander(x, m - 1)
    vinv = np.linalg.inv(v)
    basis_tails = np.empty((m, m))
    for i in range(m):
        c = np.zeros(i + 1)
        c[i] = 1.0
        ci = _cheb.chebint(c)
        basis_tails[:, i] = _cheb.chebval(1.0, ci) - _cheb.chebval(x, ci)
    tails = basis_tails @ vinv
    for a in (x, vinv, tails):
        a.setflags(write=False)
    return x, vinv, tails


def adaptive_simpson(f, a: float, b: float, tol: float, max_depth: int = 48) -> float:
    """Recursive adaptive Simpson for a scalar real integrand."""

    def simp(lo, hi, flo, fmid, fhi):
        return (hi - lo) * (flo + 4.0 * fmid + fhi) / 6.0

    def recurse(lo, hi, flo, fmid, fhi, whole, tol, depth):
        mid = 0.5 * (lo + hi)
        fl = f(0.5 * (lo + mid))
        fr = f(0.5 * (mid + hi))
        left = simp(lo, mid, flo, fl, fmid)
        right = simp(mid, hi, fmid, fr, fhi)
        err = left + right - whole
        if abs(err) <= 15.0 * tol:
            return left + right + err / 15.0
        if depth >= max_depth:
            raise NonConvergenceError("adaptive Simpson depth exhausted")
        return recurse(lo, mid, flo, fl, fmid, left, 0.5 * tol, depth + 1) + recurse(
            mid, hi, fmid, fr, fhi, right, 0.5 * tol, depth + 1
        )

    if not b > a:
        raise ValueError("empty integration interval")
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = simp(a, b, fa, fm, fb)
    return recurse(a, b, fa, fm, fb, whole, tol, 0)


def neville_zero(hs, vals):
    """Neville extrapolation of vals(h) to h = 0.

    hs must be strictly decreasing and positive. Returns (limit, last_diff)
    where last_diff is the change contributed by the final ladder rung.
    """
    hs = np.asarray(hs, dtype=float)
    t = [v for v in vals]
    n = len(t)
    if n != hs.size or n < 2:
        raise ValueError("ladder and values must align, length >= 2")
    if np.any(hs <= 0) or np.any(np.diff(hs) >= 0):
        raise ValueError("ladder must be positive and strictly decreasing")
    diag = [t[0]]
    for j in range(1, n):
        for i in range(n - j):
            t[i] = (hs[i] * t[i + 1] - hs[i + j] * t[i]) / (hs[i] - hs[i + j])
        diag.append(t[0])
    return diag[-1], abs(diag[-1] - diag[-2])


def y_limit(values, ys):
    """Extrapolated y -> infinity limit from a doubling ladder.

    Two Richardson elimination levels in 1/y (removing the 1/y and 1/y^2
    terms of the large-y expansion). Returns (limit, cauchy_diff) where
    cauchy_diff measures the tail of the extrapolated column.
    """
    v = np.asarray(values)
    ys = np.asarray(ys, dtype=float)
    if v.size < 4:
        raise ValueError("ladder too short for order-2 extrapolation")
    if not np.allclose(ys[1:] / ys[:-1], 2.0, rtol=1e-12):
        raise ValueError("ladder must double")
    t1 = 2.0 * v[1:] - v[:-1]
    t2 = (4.0 * t1[1:] - t1[:-1]) / 3.0
    return t2[-1], abs(t2[-1] - t2[-2])
