"""Reproducing and Cesaro kernels on the unit ball for the weight
||x||^(2 lam) (1 - ||x||^2)^(mu - 1/2), normalized to unit mass.

The degree-n kernel has two independent realizations: a finite sum over
generalized Gegenbauer pairs (kernel_ball_direct) and a triple-integral
closed form (kernel_ball_closed, with one- and two-layer collapses at
lam = 0 and mu = 0).  The averaging operator behind the closed form also
yields Cesaro kernels and Lebesgue functions.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import specfun
from .identities import IdentityReport
from .quadrature import ball_rule, beta_rule, gauss_jacobi

__all__ = [
    "BallWeight", "kernel_ball_direct", "kernel_ball_closed",
    "kernel_ball_closed_mu0", "kernel_ball_closed_lambda0", "kernel_ball",
    "kernel_ball_at_zero", "a_const", "apply_Gx", "verify_Gx_integral",
    "cesaro_kernel_ball", "cesaro_kernel_ball_center",
    "lebesgue_function", "lebesgue_at_zero_1d",
    "critical_index_sweep", "SweepResult",
]


@dataclass(frozen=True)
class BallWeight:
    """Parameters of the normalized ball weight; lam = 0 and mu = 0 flag the
    limit regimes that select the collapsed kernel forms."""
    lam: float
    mu: float
    d: int

    def __post_init__(self):
        object.__setattr__(self, "lam", float(self.lam))
        object.__setattr__(self, "mu", float(self.mu))
        if self.lam < 0 or self.mu < 0:
            raise ValueError(f"ball weight needs lam, mu >= 0, got ({self.lam}, {self.mu})")
        if int(self.d) != self.d or self.d < 2:
            raise ValueError(f"ball weight needs integer d >= 2, got {self.d}")
        object.__setattr__(self, "d", int(self.d))

    @property
    def is_lambda_zero(self) -> bool:
        return self.lam == 0.0

    @property
    def is_mu_zero(self) -> bool:
        return self.mu == 0.0

    @property
    def fused_index(self) -> float:
        """Gegenbauer index carried by the closed-form integrand."""
        return self.lam + self.mu + (self.d - 1) / 2.0


def _point(p, d: int, name: str) -> np.ndarray:
    p = np.atleast_1d(np.asarray(p, dtype=float))
    if p.size != d:
        raise ValueError(f"{name} must have dimension {d}")
    if p @ p > 1.0 + 1e-10:
        raise ValueError(f"{name} lies outside the closed unit ball")
    return p


def _cos_complement(p: np.ndarray) -> float:
    return math.sqrt(max(0.0, 1.0 - float(p @ p)))


def kernel_ball_direct(n: int, w: BallWeight, x, y) -> float:
    """Degree-n reproducing kernel as the finite sum over generalized
    Gegenbauer pairs times zonal factors; the series-side oracle.

    At the center only the purely radial term survives, so the kernel is
    zero for odd n and needs no direction vector there.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    x = _point(x, w.d, "x")
    y = _point(y, w.d, "y")
    nx = math.sqrt(float(x @ x))
    ny = math.sqrt(float(y @ y))
    tx = _cos_complement(x)
    ty = _cos_complement(y)
    total = 0.0
    for j in range(n // 2 + 1):
        m = n - 2 * j
        if m > 0 and (nx == 0.0 or ny == 0.0):
            continue
        a = m + w.lam + (w.d - 1) / 2.0
        term = (specfun.B_coeff(j, n, w.lam, w.mu, w.d)
                / specfun.H_coeff(j, n, w.lam, w.mu, w.d))
        term *= specfun.gen_gegenbauer_D(2 * j, a, w.mu, tx)
        term *= specfun.gen_gegenbauer_D(2 * j, a, w.mu, ty)
        if m > 0:
            cosang = float(x @ y) / (nx * ny)
            cosang = min(1.0, max(-1.0, cosang))
            term *= (nx * ny) ** m
            term *= specfun.gegenbauer_Z(m, (w.d - 2) / 2.0, cosang)
        total += term
    return total


# ----------------------------------------------------------------------------
# The averaging operator and its tensor grids


@dataclass(frozen=True)
class _GxGrid:
    uv: np.ndarray       # value of u*v per node
    omu: np.ndarray      # value of 1-u per node
    t: np.ndarray        # value of t per node
    weights: np.ndarray  # normalized so they sum to 1
    raw_total: float     # mass of the unnormalized product measure

    def __post_init__(self):
        for a in (self.uv, self.omu, self.t, self.weights):
            a.setflags(write=False)


@lru_cache(maxsize=64)
def _gx_grid(lam: float, mu: float, d: int, order: int) -> _GxGrid:
    if lam == 0.0 and mu == 0.0:
        raise ValueError("the averaging operator needs lam > 0 or mu > 0")
    if order < 1:
        raise ValueError("order must be >= 1")
    if lam == 0.0:
        trule = gauss_jacobi(order, mu - 1, mu - 1)
        raw = float(np.add.reduce(trule.weights))
        return _GxGrid(np.zeros_like(trule.nodes), np.ones_like(trule.nodes),
                       trule.nodes.copy(), trule.weights / raw, raw)
    urule = beta_rule(order, lam, d / 2.0)
    vrule = gauss_jacobi(order, lam - 0.5, lam - 0.5)
    if mu == 0.0:
        tn = np.array([1.0, -1.0])
        tw = np.array([0.5, 0.5])
    else:
        trule = gauss_jacobi(order, mu - 1, mu - 1)
        tn, tw = trule.nodes, trule.weights
    T, U, V = np.meshgrid(tn, urule.nodes, vrule.nodes, indexing="ij")
    Wt = (tw[:, None, None] * urule.weights[None, :, None]
          * vrule.weights[None, None, :]).ravel()
    raw = (float(np.add.reduce(tw)) * float(np.add.reduce(urule.weights))
           * float(np.add.reduce(vrule.weights)))
    return _GxGrid((U * V).ravel(), (1.0 - U).ravel(), T.ravel(),
                   Wt / Wt.sum(), raw)


def a_const(w: BallWeight, order: int = 24) -> float:
    """Normalizer of the closed-form triple integral: the reciprocal of its
    total mass, so the degree-0 kernel is exactly 1."""
    return 1.0 / _gx_grid(w.lam, w.mu, w.d, order).raw_total


def _gx_values(f, w: BallWeight, x, ys: np.ndarray, order: int,
               chunk: int = 512) -> np.ndarray:
    """The weighted average of f along the three-parameter path, for one x
    and every row of ys; f must act elementwise on ndarrays."""
    grid = _gx_grid(w.lam, w.mu, w.d, order)
    x = _point(x, w.d, "x")
    nx = math.sqrt(float(x @ x))
    cx = _cos_complement(x)
    out = np.empty(ys.shape[0])
    for lo in range(0, ys.shape[0], chunk):
        yc = ys[lo:lo + chunk]
        nys = np.sqrt(np.einsum("ij,ij->i", yc, yc))
        A = nx * nys
        B = yc @ x
        C = cx * np.sqrt(np.maximum(0.0, 1.0 - nys ** 2))
        zeta = (A[:, None] * grid.uv[None, :] + B[:, None] * grid.omu[None, :]
                + C[:, None] * grid.t[None, :])
        vals = np.asarray(f(zeta), dtype=float)
        if not np.all(np.isfinite(vals)):
            raise ValueError("integrand returned a non-finite value")
        out[lo:lo + chunk] = vals @ grid.weights
    return out


def apply_Gx(f, w: BallWeight, x, y, order: int) -> float:
    """Average of the univariate f along the kernel path from x to y.

    f is applied to ndarray arguments in [-1, 1].  The lam = 0 and mu = 0
    regimes use the collapsed one- and two-layer grids.
    """
    y = _point(y, w.d, "y")
    return float(_gx_values(f, w, x, y[None, :], order)[0])


def _z_series_eval(zeta: np.ndarray, sig: float, coefs: np.ndarray) -> np.ndarray:
    """sum_k coefs[k] * Z_k^sig(zeta), by one pass of the recurrence."""
    n = len(coefs) - 1
    acc = np.full_like(zeta, coefs[0])
    if n == 0:
        return acc
    cprev = np.ones_like(zeta)
    ccur = 2.0 * sig * zeta
    acc += coefs[1] * (1 + sig) / sig * ccur
    for k in range(2, n + 1):
        cprev, ccur = ccur, (2 * (k + sig - 1) * zeta * ccur
                             - (k + 2 * sig - 2) * cprev) / k
        acc += coefs[k] * (k + sig) / sig * ccur
    return acc


def kernel_ball_closed(n: int, w: BallWeight, x, y, order: int = None) -> float:
    """Triple-integral closed form of the degree-n kernel (interior case)."""
    if w.lam == 0.0 or w.mu == 0.0:
        raise ValueError("lam = 0 or mu = 0: use the dedicated limit variants")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    order = order or max(16, n // 2 + 2)
    coefs = np.zeros(n + 1)
    coefs[n] = 1.0
    y = _point(y, w.d, "y")
    return float(_gx_values(lambda z: _z_series_eval(z, w.fused_index, coefs),
                            w, x, y[None, :], order)[0])


def kernel_ball_closed_mu0(n: int, w: BallWeight, x, y, order: int = None) -> float:
    """mu = 0 limit: the t-layer collapses onto the average of t = +-1."""
    if w.mu != 0.0 or w.lam <= 0.0:
        raise ValueError("this variant needs mu = 0 and lam > 0")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    order = order or max(16, n // 2 + 2)
    coefs = np.zeros(n + 1)
    coefs[n] = 1.0
    y = _point(y, w.d, "y")
    return float(_gx_values(lambda z: _z_series_eval(z, w.fused_index, coefs),
                            w, x, y[None, :], order)[0])


def kernel_ball_closed_lambda0(n: int, w: BallWeight, x, y,
                               order: int = None) -> float:
    """lam = 0 limit: the u-layer collapses to u = 0 and one integral is left."""
    if w.lam != 0.0 or w.mu <= 0.0:
        raise ValueError("this variant needs lam = 0 and mu > 0")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    order = order or max(16, n // 2 + 2)
    coefs = np.zeros(n + 1)
    coefs[n] = 1.0
    y = _point(y, w.d, "y")
    return float(_gx_values(lambda z: _z_series_eval(z, w.fused_index, coefs),
                            w, x, y[None, :], order)[0])


def kernel_ball(n: int, w: BallWeight, x, y, order: int = None) -> float:
    """Closed-form kernel with automatic routing to the limit variants."""
    if w.is_lambda_zero and w.is_mu_zero:
        raise ValueError("lam = mu = 0 is not supported")
    if w.is_lambda_zero:
        return kernel_ball_closed_lambda0(n, w, x, y, order)
    if w.is_mu_zero:
        return kernel_ball_closed_mu0(n, w, x, y, order)
    return kernel_ball_closed(n, w, x, y, order)


def kernel_ball_at_zero(n: int, w: BallWeight, x) -> float:
    """Kernel against the center: a single generalized Gegenbauer pair.

    Odd degrees vanish identically (every odd-degree basis element is zero at
    the center), matching the t-integral of the odd closed-form integrand.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    x = _point(x, w.d, "x")
    if n % 2 == 1:
        return 0.0
    a = w.lam + (w.d - 1) / 2.0
    return (specfun.gen_gegenbauer_D_at_one(n, a, w.mu)
            * specfun.gen_gegenbauer_D(n, a, w.mu, _cos_complement(x)))


def verify_Gx_integral(g, w: BallWeight, x, order: int = 16) -> IdentityReport:
    """Ball average of the operator output vs the straight weighted average
    of g at the fused Gegenbauer index; dual evaluation of the transfer law."""
    if w.d not in (2, 3):
        raise ValueError("ball integration supports d in {2, 3}")
    if w.lam <= 0 or w.mu <= 0:
        raise ValueError("needs lam > 0 and mu > 0")
    rule = ball_rule(w.d, w.lam, w.mu, order)
    vals = _gx_values(g, w, x, rule.nodes, order)
    lhs = float(np.add.reduce(rule.weights * vals))
    sig = w.fused_index
    grule = gauss_jacobi(order, sig - 0.5, sig - 0.5)
    gv = np.asarray(g(grule.nodes), dtype=float)
    rhs = float(np.add.reduce(grule.weights * gv) / np.add.reduce(grule.weights))
    return IdentityReport.from_sides(
        "eq:intGx", lhs, rhs,
        {"lambda": w.lam, "mu": w.mu, "d": w.d,
         "x": np.atleast_1d(np.asarray(x, float)).tolist()}, order)


def _cesaro_coefs(n: int, delta: float) -> np.ndarray:
    if delta <= -1:
        raise ValueError(f"needs delta > -1, got {delta}")
    norm = specfun.binom_real(n + delta, n)
    return np.array([specfun.binom_real(n - k + delta, n - k) / norm
                     for k in range(n + 1)])


def cesaro_kernel_ball(n: int, delta: float, w: BallWeight, x, y,
                       order: int = None) -> float:
    """(C, delta) kernel: the averaging operator applied to the 1D Cesaro
    Gegenbauer kernel against the endpoint 1."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    order = order or max(16, n // 2 + 2)
    coefs = _cesaro_coefs(n, delta)
    y = _point(y, w.d, "y")
    return float(_gx_values(lambda z: _z_series_eval(z, w.fused_index, coefs),
                            w, x, y[None, :], order)[0])


def cesaro_kernel_ball_center(n: int, delta: float, w: BallWeight, tau) -> float:
    """(C, delta) kernel between the center and any point with
    sqrt(1 - ||y||^2) = tau: only even degrees contribute there."""
    coefs = _cesaro_coefs(n, delta)
    a = w.lam + (w.d - 1) / 2.0
    tau = float(tau)
    total = 0.0
    dtab = specfun.gen_gegenbauer_D_table(n, a, w.mu, np.asarray(tau))
    for k in range(0, n + 1, 2):
        total += (coefs[k] * specfun.gen_gegenbauer_D_at_one(k, a, w.mu)
                  * float(dtab[k]))
    return total


def lebesgue_function(n: int, delta: float, w: BallWeight, x,
                      order: int = None) -> float:
    """Integral of |(C, delta) kernel| against the weight; the absolute value
    makes the integrand non-smooth, so the ball resolution scales with n."""
    if w.d not in (2, 3):
        raise ValueError("ball integration supports d in {2, 3}")
    order = order or max(64, 8 * n)
    inner = max(12, n // 2 + 2)
    rule = ball_rule(w.d, w.lam, w.mu, order)
    coefs = _cesaro_coefs(n, delta)
    vals = _gx_values(lambda z: _z_series_eval(z, w.fused_index, coefs),
                      w, x, rule.nodes, inner)
    return float(np.add.reduce(rule.weights * np.abs(vals)))


def lebesgue_at_zero_1d(n: int, delta: float, w: BallWeight,
                        order: int = None) -> float:
    """Lebesgue function at the center via the one-dimensional reduction:
    the radial change of variables turns the ball integral into a single
    generalized Gegenbauer average over tau = sqrt(1 - ||y||^2) in (0,1)."""
    order = order or max(64, 8 * n)
    a = w.lam + (w.d - 1) / 2.0
    b = w.mu
    srule = gauss_jacobi(order, a - 0.5, b - 0.5)  # s = tau^2 mapped to (-1,1)
    tau = np.sqrt((srule.nodes + 1.0) / 2.0)
    coefs = _cesaro_coefs(n, delta)
    dtab = specfun.gen_gegenbauer_D_table(n, a, b, tau)
    g = np.zeros_like(tau)
    for k in range(0, n + 1, 2):
        g += coefs[k] * specfun.gen_gegenbauer_D_at_one(k, a, b) * dtab[k]
    return float(np.add.reduce(srule.weights * np.abs(g))
                 / np.add.reduce(srule.weights))


@dataclass(frozen=True)
class SweepResult:
    rows: tuple            # ((delta, n, lebesgue), ...) sorted by (delta, n)
    critical_value: float


def critical_index_sweep(w: BallWeight, deltas, degrees, order: int = None,
                         threads: int = 1) -> SweepResult:
    """Table of center Lebesgue values over a (delta, n) grid, with the
    critical index reported alongside; cells may run on a thread pool but
    the output order is canonical."""
    if w.d not in (2, 3):
        raise ValueError("ball integration supports d in {2, 3}")
    cells = sorted((float(dl), int(n)) for dl in deltas for n in degrees)

    def one(cell):
        dl, n = cell
        return dl, n, lebesgue_at_zero_1d(n, dl, w, order)

    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(one, cells))
    else:
        rows = [one(c) for c in cells]
    rows.sort(key=lambda r: (r[0], r[1]))
    return SweepResult(tuple(rows), w.fused_index)
