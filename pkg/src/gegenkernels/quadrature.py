"""Quadrature rules: Gauss-Jacobi on (-1,1), beta weights on (0,1), conical
products on the homogeneous simplex, and spherical-polar rules on the ball.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import gammaln

__all__ = [
    "QuadRule1D", "SimplexRule", "BallRule",
    "gauss_jacobi", "beta_rule", "simplex_rule", "ball_rule", "integrate",
]


def _freeze(*arrays):
    for a in arrays:
        a.setflags(write=False)


@dataclass(frozen=True)
class QuadRule1D:
    """Nodes/weights on an interval together with the weight they integrate."""
    nodes: np.ndarray
    weights: np.ndarray
    weight_descriptor: dict
    exactness: int

    def __post_init__(self):
        _freeze(self.nodes, self.weights)


@dataclass(frozen=True)
class SimplexRule:
    """Conical-product rule on {u >= 0, sum u = 1} for the weight prod u_i^(a_i - 1)."""
    dim: int
    nodes: np.ndarray  # (N, dim), homogeneous coordinates
    weights: np.ndarray
    exponents: tuple
    exactness: int

    def __post_init__(self):
        _freeze(self.nodes, self.weights)


@dataclass(frozen=True)
class BallRule:
    """Spherical-polar rule on the unit ball for the normalized weight
    ||x||^(2 lam) (1 - ||x||^2)^(mu - 1/2); total weight is 1."""
    dim: int
    nodes: np.ndarray  # (N, dim)
    weights: np.ndarray
    lam: float
    mu: float
    exactness: int

    def __post_init__(self):
        _freeze(self.nodes, self.weights)


def gauss_jacobi(n: int, alpha: float, beta: float) -> QuadRule1D:
    """n-point Gauss rule for (1-t)^alpha (1+t)^beta on (-1,1).

    Built from the symmetric tridiagonal eigenproblem of the three-term
    recurrence coefficients; exact through degree 2n-1.
    """
    if n < 1:
        raise ValueError("node count must be >= 1")
    if alpha <= -1 or beta <= -1:
        raise ValueError(f"Jacobi exponents must exceed -1, got ({alpha}, {beta})")
    ab = alpha + beta
    diag = np.empty(n)
    diag[0] = (beta - alpha) / (ab + 2)
    if n > 1:
        k = np.arange(1, n, dtype=float)
        diag[1:] = (beta * beta - alpha * alpha) / ((2 * k + ab) * (2 * k + ab + 2))
    off_sq = np.empty(max(n - 1, 0))
    if n > 1:
        off_sq[0] = 4 * (alpha + 1) * (beta + 1) / ((ab + 2) ** 2 * (ab + 3))
    if n > 2:
        k = np.arange(2, n, dtype=float)
        off_sq[1:] = (4 * k * (k + alpha) * (k + beta) * (k + ab)
                      / ((2 * k + ab) ** 2 * (2 * k + ab + 1) * (2 * k + ab - 1)))
    nodes, vecs = eigh_tridiagonal(diag, np.sqrt(off_sq))
    mass = math.exp((ab + 1) * math.log(2) + gammaln(alpha + 1)
                    + gammaln(beta + 1) - gammaln(ab + 2))
    weights = mass * vecs[0] ** 2
    return QuadRule1D(nodes, weights,
                      {"kind": "jacobi", "alpha": alpha, "beta": beta},
                      2 * n - 1)


def beta_rule(n: int, a: float, b: float) -> QuadRule1D:
    """n-point rule for s^(a-1) (1-s)^(b-1) on (0,1); total weight B(a,b)."""
    if a <= 0 or b <= 0:
        raise ValueError(f"beta exponents must be positive, got ({a}, {b})")
    gj = gauss_jacobi(n, b - 1, a - 1)
    nodes = (gj.nodes + 1) / 2
    weights = gj.weights / 2 ** (a + b - 1)
    return QuadRule1D(nodes, weights, {"kind": "beta", "a": a, "b": b}, 2 * n - 1)


def simplex_rule(d: int, exponents, n: int) -> SimplexRule:
    """Conical-product rule on the homogeneous simplex in d coordinates.

    The iterated reduction u_1 = t_1, u_2 = (1-t_1) t_2, ... turns the weight
    prod u_i^(a_i - 1) into nested beta weights with accumulated tail
    exponents, so the rule is a tensor product of d-1 beta rules and is exact
    for every monomial of total degree <= 2n-1.
    """
    exps = tuple(float(a) for a in np.atleast_1d(exponents))
    if d < 2:
        raise ValueError("simplex dimension must be >= 2")
    if len(exps) != d:
        raise ValueError(f"need {d} exponents, got {len(exps)}")
    if any(a <= 0 for a in exps):
        raise ValueError(f"simplex exponents must be positive, got {exps}")
    rules = [beta_rule(n, exps[i], sum(exps[i + 1:])) for i in range(d - 1)]
    tgrids = np.meshgrid(*[r.nodes for r in rules], indexing="ij")
    wgrids = np.meshgrid(*[r.weights for r in rules], indexing="ij")
    ts = [g.ravel() for g in tgrids]
    weights = np.ones_like(ts[0])
    for g in wgrids:
        weights = weights * g.ravel()
    npts = ts[0].size
    nodes = np.empty((npts, d))
    rem = np.ones(npts)
    for i in range(d - 1):
        nodes[:, i] = ts[i] * rem
        rem = rem * (1.0 - ts[i])
    nodes[:, d - 1] = rem
    return SimplexRule(d, nodes, weights, exps, 2 * n - 1)


def ball_rule(d: int, lam: float, mu: float, n: int) -> BallRule:
    """Product rule on the unit ball for the normalized weight with radial
    part r^(2 lam) (1-r^2)^(mu-1/2): mapped Gauss-Jacobi in r^2 times a
    trapezoidal angle rule (d=2) or Gauss-Legendre x trapezoid (d=3)."""
    if d not in (2, 3):
        raise ValueError(f"ball rules support d in {{2, 3}}, got {d}")
    if lam < 0:
        raise ValueError(f"ball weight needs lam >= 0, got {lam}")
    if mu <= 0:
        raise ValueError(f"ball weight needs mu > 0, got {mu}")
    if n < 1:
        raise ValueError("resolution must be >= 1")
    radial = beta_rule(n, lam + d / 2.0, mu + 0.5)  # in rho = r^2
    r = np.sqrt(radial.nodes)
    wr = radial.weights
    m = 2 * n + 1
    phi = 2 * np.pi * np.arange(m) / m
    if d == 2:
        x = np.outer(r, np.cos(phi)).ravel()
        y = np.outer(r, np.sin(phi)).ravel()
        nodes = np.column_stack([x, y])
        weights = np.repeat(wr, m)
    else:
        polar = gauss_jacobi(n, 0.0, 0.0)  # cos(theta) on (-1,1)
        ct = polar.nodes
        st = np.sqrt(1 - ct ** 2)
        R, CT, PH = np.meshgrid(r, ct, phi, indexing="ij")
        ST = np.sqrt(1 - CT ** 2)
        nodes = np.column_stack([
            (R * ST * np.cos(PH)).ravel(),
            (R * ST * np.sin(PH)).ravel(),
            (R * CT).ravel(),
        ])
        weights = (wr[:, None, None] * polar.weights[None, :, None]
                   * np.ones((1, 1, m))).ravel()
    weights = weights / weights.sum()
    return BallRule(d, nodes, weights, float(lam), float(mu), 2 * n - 1)


def integrate(rule, f) -> float:
    """Sum w_i f(node_i) in the rule's fixed node order.

    Non-finite integrand values are rejected rather than propagated.
    """
    vals = np.array([float(f(x)) for x in rule.nodes])
    if not np.all(np.isfinite(vals)):
        bad = int(np.flatnonzero(~np.isfinite(vals))[0])
        raise ValueError(f"integrand returned a non-finite value at node {bad}")
    return float(np.add.reduce(rule.weights * vals))
