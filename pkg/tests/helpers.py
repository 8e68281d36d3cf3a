"""Shared test oracles: closed-form moments, a quadrature-Gram kernel built
independently of the library's coefficient formulas, and polynomial builders
for reproducing-property checks."""

import math

import numpy as np
from scipy.special import gammaln

from gegenkernels import ball_rule, gauss_jacobi
from gegenkernels.cube_kernels import multi_indices


def beta_fn(a, b):
    return math.exp(gammaln(a) + gammaln(b) - gammaln(a + b))


def jacobi_shifted_moment(j, alpha, beta):
    """integral of ((1+t)/2)^j (1-t)^alpha (1+t)^beta over (-1,1)."""
    return 2 ** (alpha + beta + 1) * beta_fn(beta + j + 1, alpha + 1)


def beta_moment(j, a, b):
    """integral of s^j s^(a-1) (1-s)^(b-1) over (0,1)."""
    return beta_fn(a + j, b)


def simplex_moment(powers, exponents):
    """integral of prod u_i^p_i prod u_i^(a_i-1) over the homogeneous simplex."""
    args = [a + p for a, p in zip(exponents, powers)]
    return math.exp(sum(gammaln(v) for v in args) - gammaln(sum(args)))


def ball_moment(powers, lam, mu, d):
    """Moment of prod x_i^p_i under the normalized ball weight."""
    if any(p % 2 for p in powers):
        return 0.0
    betas = [(p + 1) / 2 for p in powers]
    total = sum(powers)
    ang = math.exp(sum(gammaln(b) for b in betas) - gammaln(sum(betas)))
    ang0 = math.exp(d * gammaln(0.5) - gammaln(d / 2))
    rad = beta_fn(lam + (total + d) / 2, mu + 0.5)
    rad0 = beta_fn(lam + d / 2, mu + 0.5)
    return (ang / ang0) * (rad / rad0)


def graded_monomials(max_degree, d):
    """Exponent tuples ordered by total degree then lexicographically."""
    out = []
    for deg in range(max_degree + 1):
        block = sorted(multi_indices(deg, d), reverse=True)
        out.extend(block)
    return out


def eval_monomials(exponents, points):
    """Vandermonde-style matrix: points (N, d) -> (N, len(exponents))."""
    points = np.atleast_2d(points)
    cols = [np.prod(points ** np.asarray(e), axis=1) for e in exponents]
    return np.column_stack(cols)


class GramKernel:
    """Degree-graded orthonormalization of monomials under ball quadrature.

    The degree-n reproducing kernel falls out of a weighted QR factorization
    and depends on no expansion coefficients, which makes it an
    implementation-independent oracle for the series kernel.
    """

    def __init__(self, max_degree, lam, mu, d, order=None):
        order = order or (2 * max_degree + 4)
        rule = ball_rule(d, lam, mu, order)
        self.exponents = graded_monomials(max_degree, d)
        self.degrees = np.array([sum(e) for e in self.exponents])
        V = eval_monomials(self.exponents, rule.nodes)
        A = np.sqrt(rule.weights)[:, None] * V
        _, R = np.linalg.qr(A)
        signs = np.sign(np.diag(R))
        self.Rinv = np.linalg.inv(R * signs[:, None])

    def basis(self, x):
        """Orthonormal polynomial values at one point, graded order."""
        return (eval_monomials(self.exponents, np.atleast_2d(x)) @ self.Rinv)[0]

    def kernel(self, n, x, y):
        bx = self.basis(x)
        by = self.basis(y)
        mask = self.degrees == n
        return float(np.dot(bx[mask], by[mask]))


def random_gegenbauer_product_poly(rng, nmax, lambdas):
    """Random polynomial given by coefficients on the product Gegenbauer
    basis up to total degree nmax; returns (coeffs dict, evaluator)."""
    from gegenkernels.specfun import gegenbauer_C_table

    d = len(lambdas)
    coeffs = {}
    for deg in range(nmax + 1):
        for alpha in multi_indices(deg, d):
            coeffs[alpha] = rng.normal()

    def evaluate(points, only_degree=None):
        points = np.atleast_2d(points)
        tabs = [gegenbauer_C_table(nmax, lambdas[i], points[:, i])
                for i in range(d)]
        out = np.zeros(points.shape[0])
        for alpha, c in coeffs.items():
            if only_degree is not None and sum(alpha) != only_degree:
                continue
            term = np.full(points.shape[0], c)
            for i, ai in enumerate(alpha):
                term = term * tabs[i][ai]
            out += term
        return out

    return coeffs, evaluate


def tensor_cube_rule(lambdas, order):
    """Tensor Gauss-Jacobi rule for the normalized product Gegenbauer weight."""
    rules = [gauss_jacobi(order, l - 0.5, l - 0.5) for l in lambdas]
    grids = np.meshgrid(*[r.nodes for r in rules], indexing="ij")
    wgrids = np.meshgrid(*[r.weights / np.sum(r.weights) for r in rules],
                         indexing="ij")
    nodes = np.column_stack([g.ravel() for g in grids])
    weights = np.ones(nodes.shape[0])
    for g in wgrids:
        weights = weights * g.ravel()
    return nodes, weights
