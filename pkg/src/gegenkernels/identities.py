"""Dual-route numeric verification of the standalone integral identities.

Every verify_* function evaluates both sides independently (closed form vs
quadrature, or full sum vs factored sum) and returns an IdentityReport; the
two routes never share intermediate values.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import specfun
from .quadrature import beta_rule, gauss_jacobi, simplex_rule

__all__ = [
    "IdentityReport", "default_order",
    "verify_main_identity", "verify_poisson_product",
    "verify_gegen1", "verify_gegen2", "verify_addition_formula",
    "verify_generating", "generating_tail_bound", "verify_product_formula",
    "divided_difference", "verify_hermite_genocchi",
]


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    params: dict = field(default_factory=dict)
    order: int = 0

    @staticmethod
    def from_sides(identity, lhs, rhs, params, order=0):
        lhs = float(lhs)
        rhs = float(rhs)
        abs_err = abs(lhs - rhs)
        if not math.isfinite(abs_err):
            raise ValueError(f"non-finite residual for {identity}: lhs={lhs}, rhs={rhs}")
        return IdentityReport(identity, lhs, rhs, abs_err,
                              abs_err / max(1.0, abs(lhs)), dict(params), order)


def default_order(n: int) -> int:
    """Documented default quadrature order for degree-n verifications."""
    return max(30, 2 * n + 10)


def verify_main_identity(lambdas, x, r: float, order: int = None) -> IdentityReport:
    """Product of binomial factors vs the simplex integral of the fused factor.

    lhs = prod (1 - r x_i)^(-lam_i); rhs pushes all indices into a single
    exponent |lam| under the simplex beta weight.
    """
    lv = np.atleast_1d(np.asarray(lambdas, dtype=float))
    x = np.atleast_1d(np.asarray(x, dtype=float))
    d = lv.size
    if d < 2 or x.size != d:
        raise ValueError("lambda vector and x must share a common length d >= 2")
    if np.any(lv <= 0):
        raise ValueError(f"main identity needs lam_i > 0, got {lv.tolist()}")
    if r < 0:
        raise ValueError("r must be nonnegative")
    if np.any(r * np.abs(x) >= 1):
        raise ValueError("need r*|x_i| < 1 for a bounded integrand")
    order = order or default_order(0)
    # canonical factor order keeps the product permutation-invariant bit-for-bit
    pairs = sorted(zip(lv.tolist(), x.tolist()))
    lhs = 1.0
    for lam_i, x_i in pairs:
        lhs *= (1.0 - r * x_i) ** (-lam_i)
    total = float(lv.sum())
    rule = simplex_rule(d, lv, order)
    sig = specfun.gamma_ratio((total,), tuple(lv))
    vals = (1.0 - r * (rule.nodes @ x)) ** (-total)
    rhs = sig * float(np.add.reduce(rule.weights * vals))
    return IdentityReport.from_sides(
        "eq:main", lhs, rhs,
        {"lambda": lv.tolist(), "x": x.tolist(), "r": r}, order)


def verify_poisson_product(lam: float, mu: float, s: float, t: float,
                           r: float, order: int = None) -> IdentityReport:
    """Two Poisson-type factors vs a single beta-averaged factor.

    The beta weight is y^mu (1-y)^lam against the argument y*t + (1-y)*s:
    the exponent paired with each variable is the one from the other factor,
    as the polarization of the main identity dictates.
    """
    if lam <= 0 or mu <= 0:
        raise ValueError(f"needs lam, mu > 0, got ({lam}, {mu})")
    if not 0 <= r < 1:
        raise ValueError(f"needs 0 <= r < 1, got {r}")
    order = order or default_order(0)
    lhs = (1 - 2 * r * s + r * r) ** (-(lam + 1)) * (1 - 2 * r * t + r * r) ** (-(mu + 1))
    rule = beta_rule(order, mu + 1, lam + 1)
    c = specfun.c_lambda_mu(lam + 0.5, mu + 0.5)
    args = rule.nodes * t + (1 - rule.nodes) * s
    vals = (1 - 2 * r * args + r * r) ** (-(lam + mu + 2))
    rhs = c * float(np.add.reduce(rule.weights * vals))
    return IdentityReport.from_sides(
        "poisson-product", lhs, rhs,
        {"lambda": lam, "mu": mu, "s": s, "t": t, "r": r}, order)


def _inner_w_mu_average(n, lam_plus_mu, mu, x, svals, order, use_Z):
    """c_mu-weighted y-average of the index-raised polynomial at s x + (1-s) y,
    evaluated for every s in svals; returns g(svals) plus g(0)."""
    yrule = gauss_jacobi(order, mu - 0.5, mu - 0.5)
    s_all = np.concatenate([svals, [0.0]])
    args = s_all[:, None] * x + (1 - s_all)[:, None] * yrule.nodes[None, :]
    if use_Z:
        vals = specfun.gegenbauer_Z_table(n, lam_plus_mu, args)[n]
    else:
        vals = specfun.gegenbauer_C_table(n, lam_plus_mu, args)[n]
    g = specfun.c_lambda(mu) * (vals @ yrule.weights)
    return g[:-1], g[-1]


def verify_gegen1(n: int, lam: float, mu: float, x: float,
                  order: int = None) -> IdentityReport:
    """Index-lowering identity for C_n: beta average in s times w_mu average in y.

    For -1/2 < lam < 0 the s-integral exists only as an analytic
    continuation; it is realized by subtracting the s = 0 value, which turns
    the divergent beta factor into the exact constant 1.
    """
    if lam <= -0.5 or lam == 0.0:
        raise ValueError(f"needs lam > -1/2 and lam != 0, got {lam}")
    if mu <= 0:
        raise ValueError(f"needs mu > 0, got {mu}")
    order = order or default_order(n)
    lhs = specfun.gegenbauer_C(n, lam, x)
    sig = specfun.sigma(lam, mu)
    if lam > 0:
        srule = beta_rule(order, lam, mu)
        g, _ = _inner_w_mu_average(n, lam + mu, mu, x, srule.nodes, order, False)
        rhs = sig * float(np.add.reduce(srule.weights * g))
    else:
        srule = beta_rule(order, lam + 1, mu)
        g, g0 = _inner_w_mu_average(n, lam + mu, mu, x, srule.nodes, order, False)
        rhs = g0 + sig * float(np.add.reduce(srule.weights * (g - g0) / srule.nodes))
    return IdentityReport.from_sides(
        "eq:Gegen-1", lhs, rhs, {"n": n, "lambda": lam, "mu": mu, "x": x}, order)


def verify_gegen2(n: int, lam: float, mu: float, x: float,
                  order: int = None) -> IdentityReport:
    """Index-lowering identity for Z_n; the s-exponent is lam, so the whole
    range lam > -1/2 integrates classically.  lam = 0 uses the Chebyshev
    limit of Z; for lam < 0 the ratio normalization (with its sign flip) is
    formed directly."""
    if lam <= -0.5:
        raise ValueError(f"needs lam > -1/2, got {lam}")
    if mu <= 0 or lam + mu <= 0:
        raise ValueError(f"needs mu > 0 and lam + mu > 0, got ({lam}, {mu})")
    order = order or default_order(n)
    if lam >= 0:
        lhs = specfun.gegenbauer_Z(n, lam, x)
    else:
        lhs = (n + lam) / lam * specfun.gegenbauer_C(n, lam, x)
    srule = beta_rule(order, lam + 1, mu)
    g, _ = _inner_w_mu_average(n, lam + mu, mu, x, srule.nodes, order, True)
    rhs = specfun.sigma(lam + 1, mu) * float(np.add.reduce(srule.weights * g))
    return IdentityReport.from_sides(
        "eq:Gegen-2", lhs, rhs, {"n": n, "lambda": lam, "mu": mu, "x": x}, order)


def verify_addition_formula(n: int, lam: float, mu: float, theta: float,
                            phi: float, t: float, s: float) -> IdentityReport:
    """Shifted-argument C_n^(lam+mu) vs its expansion into generalized
    Gegenbauer pairs and lower-index Gegenbauer factors."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    ct, cp = math.cos(theta), math.cos(phi)
    st, sp = math.sin(theta), math.sin(phi)
    lhs = specfun.gegenbauer_C(n, lam + mu, ct * cp * t + st * sp * s)
    rhs = 0.0
    for m in range(n // 2 + 1):
        for k in range(n - 2 * m + 1):
            j = n - 2 * m - k
            term = specfun.b_coeff(k, j, n, lam, mu)
            term *= (ct * cp) ** k * (st * sp) ** j
            term *= specfun.gen_gegenbauer_D(2 * m, lam + j, mu + k, ct)
            term *= specfun.gen_gegenbauer_D(2 * m, lam + j, mu + k, cp)
            if k:
                term *= specfun.gegenbauer_C(k, mu - 0.5, t)
            if j:
                term *= specfun.gegenbauer_C(j, lam - 0.5, s)
            rhs += term
    return IdentityReport.from_sides(
        "eq:addition", lhs, rhs,
        {"n": n, "lambda": lam, "mu": mu, "theta": theta, "phi": phi,
         "t": t, "s": s}, 0)


def verify_generating(lam: float, r: float, t: float, N: int):
    """Both generating functions vs their truncated series.

    Returns a pair of reports (C series, Z series); the truncation residual
    should sit below generating_tail_bound at the same arguments.
    """
    if lam <= 0:
        raise ValueError(f"needs lam > 0, got {lam}")
    if not 0 <= r < 1:
        raise ValueError(f"needs 0 <= r < 1, got {r}")
    params = {"lambda": lam, "r": r, "t": t, "N": N}
    ctab = specfun.gegenbauer_C_table(N, lam, np.asarray(t, dtype=float))
    powers = r ** np.arange(N + 1)
    sum_c = float(np.add.reduce(ctab.ravel() * powers))
    zfac = (np.arange(N + 1) + lam) / lam
    sum_z = float(np.add.reduce(ctab.ravel() * zfac * powers))
    lhs_c = (1 - 2 * r * t + r * r) ** (-lam)
    lhs_z = (1 - r * r) * (1 - 2 * r * t + r * r) ** (-(lam + 1))
    rep_c = IdentityReport.from_sides("eq:generatingC", lhs_c, sum_c, params, N)
    rep_z = IdentityReport.from_sides("eq:generatingZ", lhs_z, sum_z, params, N)
    return rep_c, rep_z


def generating_tail_bound(lam: float, r: float, N: int, kind: str = "C",
                          extra: int = 200) -> float:
    """Majorant of the truncation tail: |terms| <= endpoint values at t=1, so
    the tail is summed explicitly for `extra` terms and closed by a geometric
    bound on the endpoint growth ratio."""
    if kind not in ("C", "Z"):
        raise ValueError("kind must be 'C' or 'Z'")
    end = [specfun.gegenbauer_C_at_one(n, lam) for n in range(N + 1, N + extra + 2)]
    if kind == "Z":
        end = [(n + lam) / lam * v
               for n, v in zip(range(N + 1, N + extra + 2), end)]
    powers = [r ** n for n in range(N + 1, N + extra + 2)]
    head = sum(e * p for e, p in zip(end[:-1], powers[:-1]))
    M = N + extra + 1
    ratio = r * max(1.0, (M + 2 * lam) / (M + 1))
    if kind == "Z":
        ratio = r * max(1.0, (M + 1 + lam) * (M + 2 * lam) / ((M + lam) * (M + 1)))
    if ratio >= 1:
        raise ValueError("tail bound needs a contracting term ratio; raise N")
    return head + end[-1] * powers[-1] / (1 - ratio)


def verify_product_formula(n: int, lam: float, x: float, y: float,
                           order: int = None) -> IdentityReport:
    """Gegenbauer product formula: C_n(x) C_n(y) / C_n(1) as a w_(lam-1/2)
    average of C_n along the law-of-cosines path."""
    if lam <= 0:
        raise ValueError(f"needs lam > 0, got {lam}")
    order = order or default_order(n)
    lhs = (specfun.gegenbauer_C(n, lam, x) * specfun.gegenbauer_C(n, lam, y)
           / specfun.gegenbauer_C_at_one(n, lam))
    rule = gauss_jacobi(order, lam - 1, lam - 1)
    args = x * y + math.sqrt(1 - x * x) * math.sqrt(1 - y * y) * rule.nodes
    vals = specfun.gegenbauer_C_table(n, lam, args)[n]
    rhs = specfun.c_lambda(lam - 0.5) * float(np.add.reduce(rule.weights * vals))
    return IdentityReport.from_sides(
        "product-formula", lhs, rhs,
        {"n": n, "lambda": lam, "x": x, "y": y}, order)


def divided_difference(xs, f) -> float:
    """Classical divided difference [x_1, ..., x_d] f over distinct nodes."""
    xs = [float(v) for v in xs]
    if len(xs) == 0:
        raise ValueError("need at least one node")
    if len(set(xs)) != len(xs):
        raise ValueError("divided difference needs pairwise distinct nodes")
    table = [float(f(v)) for v in xs]
    n = len(xs)
    for level in range(1, n):
        for i in range(n - level):
            table[i] = (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
    return table[0]


def verify_hermite_genocchi(xs, f, f_deriv, order: int = None) -> IdentityReport:
    """Divided difference of f vs the simplex average of its (d-1)-th
    derivative; f_deriv must be that derivative."""
    xs = [float(v) for v in xs]
    d = len(xs)
    if d < 2:
        raise ValueError("need at least two nodes")
    order = order or default_order(d)
    lhs = divided_difference(xs, f)
    rule = simplex_rule(d, np.ones(d), order)
    vals = np.asarray(f_deriv(rule.nodes @ np.asarray(xs)), dtype=float)
    rhs = float(np.add.reduce(rule.weights * vals))
    return IdentityReport.from_sides(
        "eq:HG", lhs, rhs, {"xs": xs}, order)
