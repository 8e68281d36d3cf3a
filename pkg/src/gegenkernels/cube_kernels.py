"""Reproducing and Cesaro kernels for the product Gegenbauer weight on the
cube [-1,1]^d: brute-force kernel, the closed form at the vertex of ones,
Cesaro smoothing, and nonnegativity scans.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .quadrature import simplex_rule

__all__ = [
    "CubeWeight", "multi_indices",
    "kernel_cube_direct", "kernel_cube_at_one_closed",
    "cesaro_kernel_gegenbauer", "cesaro_kernel_cube_at_one",
    "cesaro_cube_at_one_by_definition", "nonnegativity_scan", "ScanReport",
]


@dataclass(frozen=True)
class CubeWeight:
    """Product Gegenbauer weight with one index per axis, unit total mass."""
    lambdas: tuple

    def __post_init__(self):
        lv = tuple(float(v) for v in self.lambdas)
        object.__setattr__(self, "lambdas", lv)
        if len(lv) < 1:
            raise ValueError("need at least one axis")
        if any(l <= -0.5 for l in lv):
            raise ValueError(f"cube weight needs lam_i > -1/2, got {lv}")

    @property
    def d(self) -> int:
        return len(self.lambdas)

    @property
    def total(self) -> float:
        return float(sum(self.lambdas))


def multi_indices(total: int, d: int):
    """All d-tuples of nonnegative integers summing to `total`, colex order."""
    if d == 1:
        yield (total,)
        return
    for last in range(total + 1):
        for head in multi_indices(total - last, d - 1):
            yield head + (last,)


def _check_nonzero_axes(w: CubeWeight):
    if any(l == 0.0 for l in w.lambdas):
        raise ValueError("cube kernels need lam_i != 0 on every axis")


def kernel_cube_direct(n: int, w: CubeWeight, x, y) -> float:
    """Degree-n reproducing kernel as the explicit sum over |alpha| = n of
    normalized product Gegenbauer polynomials; the brute-force oracle."""
    _check_nonzero_axes(w)
    if n < 0:
        raise ValueError("degree must be nonnegative")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    y = np.atleast_1d(np.asarray(y, dtype=float))
    if x.size != w.d or y.size != w.d:
        raise ValueError(f"points must have dimension {w.d}")
    cx = [specfun.gegenbauer_C_table(n, l, x[i]) for i, l in enumerate(w.lambdas)]
    cy = [specfun.gegenbauer_C_table(n, l, y[i]) for i, l in enumerate(w.lambdas)]
    h = [np.array([specfun.gegenbauer_h(k, l) for k in range(n + 1)])
         for l in w.lambdas]
    total = 0.0
    for alpha in multi_indices(n, w.d):
        term = 1.0
        for i, ai in enumerate(alpha):
            term *= float(cx[i][ai]) * float(cy[i][ai]) / h[i][ai]
        total += term
    return total


def _sigma_plus_one(w: CubeWeight) -> float:
    return specfun.gamma_ratio((w.total + w.d,),
                               tuple(l + 1 for l in w.lambdas))


def kernel_cube_at_one_closed(n: int, w: CubeWeight, x,
                              order: int = None) -> float:
    """Closed form for the kernel against the vertex of ones: an alternating
    sum of at most d simplex integrals of Z_(n-2m) at the fused index."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if any(l <= -1 for l in w.lambdas):
        raise ValueError("closed form needs lam_i > -1")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if x.size != w.d:
        raise ValueError(f"point must have dimension {w.d}")
    order = order or max(16, n // 2 + 2)
    rule = simplex_rule(w.d, [l + 1 for l in w.lambdas], order)
    if rule.exactness < n:
        raise ValueError(f"order {order} gives exactness {rule.exactness} < degree {n}")
    ztab = specfun.gegenbauer_Z_table(n, w.total + w.d - 1, rule.nodes @ x)
    sig = _sigma_plus_one(w)
    total = 0.0
    for m in range(min(n // 2, w.d - 1) + 1):
        moment = float(np.add.reduce(rule.weights * ztab[n - 2 * m]))
        total += (-1) ** m * math.comb(w.d - 1, m) * sig * moment
    return total


def cesaro_kernel_gegenbauer(n: int, delta: float, lam: float, s, t) -> float:
    """(C, delta) kernel of the Gegenbauer series: binomially weighted average
    of the 1D reproducing kernels C_k(s) C_k(t) / h_k."""
    if lam <= 0:
        raise ValueError(f"needs lam > 0, got {lam}")
    if delta <= -1:
        raise ValueError(f"needs delta > -1, got {delta}")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    cs = specfun.gegenbauer_C_table(n, lam, float(s))
    ct = specfun.gegenbauer_C_table(n, lam, float(t))
    total = 0.0
    for k in range(n + 1):
        coef = specfun.binom_real(n - k + delta, n - k)
        total += coef * float(cs[k]) * float(ct[k]) / specfun.gegenbauer_h(k, lam)
    return total / specfun.binom_real(n + delta, n)


def cesaro_kernel_cube_at_one(n: int, delta: float, w: CubeWeight, x,
                              order: int = None) -> float:
    """Closed form of the (C, delta) cube kernel against the vertex of ones;
    delta is the total index and must exceed d - 2."""
    dp = delta - (w.d - 1)
    if dp <= -1:
        raise ValueError(f"needs delta > d - 2 = {w.d - 2}, got {delta}")
    if any(l <= -1 for l in w.lambdas):
        raise ValueError("closed form needs lam_i > -1")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    order = order or max(16, n // 2 + 2)
    rule = simplex_rule(w.d, [l + 1 for l in w.lambdas], order)
    if rule.exactness < n:
        raise ValueError(f"order {order} gives exactness {rule.exactness} < degree {n}")
    ztab = specfun.gegenbauer_Z_table(n, w.total + w.d - 1, rule.nodes @ x)
    zmoments = ztab @ rule.weights
    sig = _sigma_plus_one(w)
    total = 0.0
    for m in range(min(n, w.d - 1) + 1):
        # binom(n-m+dp, n-m) * k_(n-m)^dp expands into plain binomial weights
        inner = 0.0
        for k in range(n - m + 1):
            inner += specfun.binom_real(n - m - k + dp, n - m - k) * zmoments[k]
        total += math.comb(w.d - 1, m) * sig * inner
    return total / specfun.binom_real(n + delta, n)


def cesaro_cube_at_one_by_definition(n: int, delta: float, w: CubeWeight,
                                     x) -> float:
    """Definition-level Cesaro mean of kernel_cube_direct at y = ones; the
    oracle for the closed form and for the nonnegativity scans."""
    if delta <= -1:
        raise ValueError(f"needs delta > -1, got {delta}")
    ones = np.ones(w.d)
    total = 0.0
    for k in range(n + 1):
        total += (specfun.binom_real(n - k + delta, n - k)
                  * kernel_cube_direct(k, w, x, ones))
    return total / specfun.binom_real(n + delta, n)


def _kernels_at_one_grid(nmax: int, w: CubeWeight, points: np.ndarray) -> np.ndarray:
    """P_k(x, ones) for k <= nmax at every row of points, shape (nmax+1, N);
    the same sum over |alpha| = k as kernel_cube_direct, vectorized."""
    _check_nonzero_axes(w)
    tabs = []
    for i, l in enumerate(w.lambdas):
        fac = np.array([(k + l) / l for k in range(nmax + 1)])  # C_k(1)/h_k
        tabs.append(specfun.gegenbauer_C_table(nmax, l, points[:, i])
                    * fac[:, None])
    out = np.zeros((nmax + 1, points.shape[0]))
    for k in range(nmax + 1):
        for alpha in multi_indices(k, w.d):
            term = tabs[0][alpha[0]].copy()
            for i in range(1, w.d):
                term *= tabs[i][alpha[i]]
            out[k] += term
    return out


@dataclass(frozen=True)
class ScanReport:
    min_value: float
    argmin: tuple
    points: np.ndarray  # (N, d) grid
    values: np.ndarray  # (N,) kernel values


def nonnegativity_scan(n: int, delta: float, w: CubeWeight,
                       grid_resolution: int) -> ScanReport:
    """Minimum of the (C, delta) kernel against the vertex of ones over a
    uniform grid on the cube, via the definition-level Cesaro sum."""
    if grid_resolution < 2:
        raise ValueError("grid resolution must be >= 2 per axis")
    if delta <= -1:
        raise ValueError(f"needs delta > -1, got {delta}")
    axis = np.linspace(-1.0, 1.0, grid_resolution)
    grids = np.meshgrid(*([axis] * w.d), indexing="ij")
    points = np.column_stack([g.ravel() for g in grids])
    pk = _kernels_at_one_grid(n, w, points)
    coefs = np.array([specfun.binom_real(n - k + delta, n - k)
                      for k in range(n + 1)])
    values = (coefs @ pk) / specfun.binom_real(n + delta, n)
    imin = int(np.argmin(values))
    return ScanReport(float(values[imin]), tuple(points[imin]), points, values)
