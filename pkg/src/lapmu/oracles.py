"""Exact reference computations for the Laplacian p-spectral radius.

The endpoints p = 1 and p = infinity are combinatorial (maximum degree and
4 * maxcut), p = 2 is a symmetric eigenvalue, complete bipartite graphs have
a closed form for p >= 2, and tiny graphs admit a brute-force grid oracle.
Edgeless graphs yield 0 everywhere and raise DegenerateGraphWarning instead
of an error so corpus sweeps never abort.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .graph import Graph, PartitionCut, complement, connected_components, max_degree
from .kernels import laplacian_apply

DEFAULT_MAXCUT_GUARD = 26
GRID_MAX_VERTICES = 4
GRID_MAX_RESOLUTION = 401


class GuardError(ValueError):
    """Input exceeds a combinatorial safety guard."""


class DegenerateGraphWarning(UserWarning):
    """Edgeless input; the objective is identically zero."""


def _warn_degenerate():
    warnings.warn(
        "graph has no edges; returning the degenerate value 0",
        DegenerateGraphWarning,
        stacklevel=3,
    )


def mu_one(g: Graph) -> int:
    """mu at p = 1: the maximum degree, attained by a canonical basis vector."""
    value = max_degree(g)
    if g.edge_count == 0:
        _warn_degenerate()
    return value


def max_cut_bruteforce(g: Graph, guard: int = DEFAULT_MAXCUT_GUARD) -> PartitionCut:
    """Maximum cut by exhaustive enumeration of the 2^(n-1) bipartitions.

    Vertex 0 is fixed on side S; among optimal cuts the lexicographically
    smallest side mask is returned. mu at p = infinity is 4 * cut_size.
    """
    n = g.n
    if n > guard:
        raise GuardError(
            f"max-cut enumeration needs 2^{n - 1} bipartitions; n = {n} exceeds guard {guard}"
        )
    if n == 0:
        return PartitionCut((), 0)
    if g.edge_count == 0:
        _warn_degenerate()
    total = 1 << (n - 1)
    best_cut = -1
    best_k = 0
    chunk = 1 << 20
    for start in range(0, total, chunk):
        ks = np.arange(start, min(start + chunk, total), dtype=np.int64)
        # vertex i (i >= 1) sits on side S iff bit n-1-i of k is set, so
        # ascending k enumerates side masks in lexicographic order
        sides = [np.ones(ks.shape, dtype=np.uint8)]
        sides.extend(((ks >> (n - 1 - i)) & 1).astype(np.uint8) for i in range(1, n))
        cuts = np.zeros(ks.shape, dtype=np.int32)
        for i, j in g.edges:
            cuts += sides[i] ^ sides[j]
        local_best = int(cuts.max())
        if local_best > best_cut:
            best_cut = local_best
            best_k = start + int(cuts.argmax())
    mask = (True,) + tuple(bool((best_k >> (n - 1 - i)) & 1) for i in range(1, n))
    return PartitionCut(mask, best_cut)


def mu_infinity(g: Graph, guard: int = DEFAULT_MAXCUT_GUARD) -> int:
    """mu at p = infinity: four times the maximum cut size."""
    return 4 * max_cut_bruteforce(g, guard).cut_size


@dataclass(frozen=True)
class EigenEstimate:
    """Top Laplacian eigenpair from power iteration (Rayleigh-quotient value)."""

    value: float
    vector: np.ndarray
    iterations: int
    converged: bool


def lap_top_eigenpair(g: Graph, tol: float = 1e-12, max_iter: int = 10**6) -> EigenEstimate:
    """Largest Laplacian eigenvalue by power iteration on L directly.

    L is positive semidefinite, so no spectral shift is needed. The start is
    a deterministic alternating +/-1 vector with a tiny index ramp; the ramp
    keeps the start out of any eigenspace orthogonal to the top one (for
    instance when the alternating pattern is constant on every component).
    """
    if g.n < 1:
        raise ValueError("needs at least one vertex")
    if g.edge_count == 0:
        _warn_degenerate()
        v = np.zeros(g.n)
        v[0] = 1.0
        return EigenEstimate(0.0, v, 0, True)
    idx = np.arange(g.n, dtype=np.float64)
    v = (-1.0) ** idx + 1e-8 * (idx + 1.0)
    v /= np.linalg.norm(v)
    rayleigh = None
    for step in range(1, max_iter + 1):
        w = laplacian_apply(g, v)
        current = float(v @ w)
        norm_w = float(np.linalg.norm(w))
        if norm_w == 0.0:
            return EigenEstimate(max(current, 0.0), v, step, False)
        v = w / norm_w
        if rayleigh is not None and abs(current - rayleigh) < tol:
            return EigenEstimate(current, v, step, True)
        rayleigh = current
    return EigenEstimate(rayleigh, v, max_iter, False)


def mu_two(g: Graph) -> float:
    """mu at p = 2: the largest eigenvalue of the Laplacian."""
    return lap_top_eigenpair(g).value


@dataclass(frozen=True)
class BipartiteClosedForm:
    """Closed-form optimum for a complete bipartite graph at finite p >= 2.

    The maximizer takes the value a on the class of size s and -b on the
    class of size t; the optimum is s*t*(a+b)^2.
    """

    s: int
    t: int
    p: float
    a: float
    b: float
    value: float


def mu_complete_bipartite(s: int, t: int, p: float) -> BipartiteClosedForm:
    if s < 1 or t < 1:
        raise ValueError("class sizes must be positive")
    if p == math.inf or p < 2:
        raise ValueError("closed form is established for finite p >= 2 only")
    p = float(p)
    ratio = s / t
    a = (s + t * ratio ** (p / (p - 1.0))) ** (-1.0 / p)
    b = ratio ** (1.0 / (p - 1.0)) * a
    return BipartiteClosedForm(s, t, p, a, b, s * t * (a + b) ** 2)


def _pair_table(axis: np.ndarray, present: bool) -> np.ndarray:
    if not present:
        return np.zeros((axis.size, axis.size))
    diff = axis[:, None] - axis[None, :]
    return diff * diff


def grid_oracle(g: Graph, p: float, resolution: int) -> float:
    """Brute-force lower bound on mu: max of F over a normalized grid.

    Every point of the uniform grid on [-1, 1]^n is projected to the unit
    p-sphere (equivalently, F(x)/||x||_p^2 is evaluated at every nonzero
    grid point) and the maximum is returned. Converges to mu from below as
    the resolution grows. Guards: n <= 4, resolution <= 401.
    """
    if g.n > GRID_MAX_VERTICES:
        raise GuardError(f"grid oracle enumerates resolution^n points; n = {g.n} exceeds {GRID_MAX_VERTICES}")
    if not 1 <= resolution <= GRID_MAX_RESOLUTION:
        raise GuardError(f"resolution must lie in 1..{GRID_MAX_RESOLUTION}")
    if p == math.inf or p < 1:
        raise ValueError("p must be finite and >= 1")
    if g.edge_count == 0:
        _warn_degenerate()
        return 0.0

    axis = np.linspace(-1.0, 1.0, resolution)
    pa = np.abs(axis) ** p
    exponent = 2.0 / p
    present = set(g.edges)

    if g.n == 2:
        f = _pair_table(axis, (0, 1) in present)
        norms = pa[:, None] + pa[None, :]
        safe = np.where(norms > 0.0, norms, 1.0)
        ratio = np.where(norms > 0.0, f / safe**exponent, 0.0)
        return float(ratio.max())

    if g.n == 3:
        d01 = _pair_table(axis, (0, 1) in present)
        d02 = _pair_table(axis, (0, 2) in present)
        d12 = _pair_table(axis, (1, 2) in present)
        best = 0.0
        for i0 in range(resolution):
            f = d01[i0][:, None] + d02[i0][None, :] + d12
            norms = pa[i0] + pa[:, None] + pa[None, :]
            safe = np.where(norms > 0.0, norms, 1.0)
            ratio = np.where(norms > 0.0, f / safe**exponent, 0.0)
            best = max(best, float(ratio.max()))
        return best

    # n == 4: compiled scan with slab pruning, optionally warm-started from
    # the embedded coarse subgrid (same floating values, so still a true max)
    from ._gridscan import scan4

    tables = {
        pair: np.ascontiguousarray(_pair_table(axis, pair in present))
        for pair in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    }
    best = 0.0
    if resolution > 6 and (resolution - 1) % 5 == 0:
        coarse = slice(None, None, 5)
        best = float(
            scan4(
                np.ascontiguousarray(pa[coarse]),
                *(np.ascontiguousarray(tables[pair][coarse, coarse]) for pair in sorted(tables)),
                exponent,
                0.0,
            )
        )
    return float(
        scan4(
            np.ascontiguousarray(pa),
            *(tables[pair] for pair in sorted(tables)),
            exponent,
            best,
        )
    )


def has_spanning_balanced_biclique(g: Graph) -> bool:
    """Whether V splits into equal halves with every cross pair an edge.

    Any valid split must keep each connected component of the complement
    graph on one side, so the question reduces to subset-summing the
    complement component sizes to n/2. Odd n is False by definition.
    """
    if g.n % 2 == 1:
        return False
    half = g.n // 2
    sizes = [len(c) for c in connected_components(complement(g))]
    reachable = 1
    for size in sizes:
        reachable |= reachable << size
    return bool((reachable >> half) & 1)
