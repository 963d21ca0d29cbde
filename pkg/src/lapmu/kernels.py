"""Numeric kernels: Laplacian quadratic form, p-norms, Hölder-dual maximizer.

All functions are pure and operate on 1-d float arrays paired with a Graph.
Signed powers route through |t| and sg(t) so non-integer exponents never see
a negative base.
"""

from __future__ import annotations

import math

import numpy as np

from .graph import Graph


def as_vector(x, n: int | None = None) -> np.ndarray:
    """Coerce to a 1-d float64 array, optionally checking the length."""
    v = np.asarray(x, dtype=np.float64)
    if v.ndim != 1:
        raise ValueError("expected a 1-d vector")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite")
    if n is not None and v.shape[0] != n:
        raise ValueError(f"vector length {v.shape[0]} does not match vertex count {n}")
    return v


def signed_power(t: np.ndarray, exponent: float) -> np.ndarray:
    """Componentwise sg(t) * |t|**exponent, with the value 0 fixed at 0."""
    return np.sign(t) * np.abs(t) ** exponent


def quadratic_form(g: Graph, x) -> float:
    """Sum of (x_i - x_j)^2 over the edges of g."""
    v = as_vector(x, g.n)
    heads, tails = g.edge_arrays
    diff = v[heads] - v[tails]
    return float(diff @ diff)


def laplacian_apply(g: Graph, x) -> np.ndarray:
    """Matrix-vector product with the Laplacian L = D - A.

    Component j is degree(j)*x_j - sum of x over the neighbors of j.
    """
    v = as_vector(x, g.n)
    heads, tails = g.edge_arrays
    out = g.degree_array * v
    out -= np.bincount(heads, weights=v[tails], minlength=g.n)
    out -= np.bincount(tails, weights=v[heads], minlength=g.n)
    return out


def p_norm(x, p: float) -> float:
    """The p-norm for p in [1, inf]; computed in scaled form for stability."""
    if p != math.inf and p < 1:
        raise ValueError("p-norm requires p >= 1")
    v = np.abs(as_vector(x))
    if v.size == 0:
        return 0.0
    m = float(v.max())
    if m == 0.0 or p == math.inf:
        return m
    return m * float(np.sum((v / m) ** p)) ** (1.0 / p)


def normalize(x, p: float) -> np.ndarray:
    """Scale x to unit p-norm."""
    v = as_vector(x)
    norm = p_norm(v, p)
    if norm == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return v / norm


def check_norm_comparison(x, p: float, q: float) -> tuple[bool, bool]:
    """Check ||x||_q <= ||x||_p <= n^(1/p - 1/q) * ||x||_q for p <= q.

    Returns (lower_ok, upper_ok), each within tolerance 1e-12 * n.
    """
    if p > q:
        raise ValueError("requires p <= q")
    v = as_vector(x)
    tol = 1e-12 * max(v.size, 1)
    norm_p = p_norm(v, p)
    norm_q = p_norm(v, q)
    inv_q = 0.0 if q == math.inf else 1.0 / q
    inv_p = 0.0 if p == math.inf else 1.0 / p
    factor = float(v.size) ** (inv_p - inv_q) if v.size else 1.0
    lower_ok = norm_q <= norm_p + tol
    upper_ok = norm_p <= factor * norm_q + tol
    return lower_ok, upper_ok


def holder_argmax(y, p: float) -> np.ndarray:
    """Unit-p-norm maximizer of the inner product with y, for finite p > 1.

    Componentwise sg(y_i) * |y_i|^(1/(p-1)), rescaled to the unit p-sphere;
    its inner product with y equals the dual-norm ||y||_q, 1/p + 1/q = 1.
    """
    if p == math.inf or p <= 1:
        raise ValueError("requires finite p > 1")
    v = as_vector(y)
    a = np.abs(v)
    m = a.max(initial=0.0)
    if m == 0.0:
        raise ValueError("undefined for the zero vector")
    # scale by the max first: (a/m) <= 1 keeps the power from overflowing
    # even as 1/(p-1) blows up near p = 1
    z = (a / m) ** (1.0 / (p - 1.0))
    x = np.sign(v) * z
    # max|z| is exactly 1, so the plain power sum is already well scaled
    return x / float(np.sum(z**p)) ** (1.0 / p)
