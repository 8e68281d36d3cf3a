"""Gegenbauer, Jacobi, and generalized Gegenbauer polynomials plus the
ratio-of-Gamma constants shared by the kernel modules.

Conventions:
  * C_n^lam is the Gegenbauer polynomial for the weight (1-t^2)^(lam-1/2),
    normalized by C_n^lam(1) = binom(n + 2*lam - 1, n); it needs lam != 0.
  * Z_n^lam = ((n+lam)/lam) * C_n^lam; at lam = 0 it means the limit,
    Z_0 = 1 and Z_n = 2*T_n for n >= 1 (T_n the Chebyshev polynomial).
  * D_n^(a,b) is the orthonormal polynomial of degree n for the weight
    |t|^(2b) * (1-t^2)^(a-1/2) normalized to unit mass, with positive
    leading coefficient.

All Gamma ratios are evaluated in log space with sign tracking so degrees up
to several hundred stay finite in double precision.
"""

import math

import numpy as np
from scipy.special import gammaln, gammasgn

__all__ = [
    "gegenbauer_C", "gegenbauer_C_table", "gegenbauer_C_at_one",
    "gegenbauer_h", "gegenbauer_Z", "gegenbauer_Z_table",
    "jacobi_P", "jacobi_P_table",
    "gen_gegenbauer_D", "gen_gegenbauer_D_table", "gen_gegenbauer_D_at_one",
    "gamma_ratio", "binom_real", "pochhammer",
    "c_lambda", "c_lambda_mu", "sigma", "b_coeff", "B_coeff", "H_coeff",
    "dim_Vn", "constant",
]


# ----------------------------------------------------------------------------
# Gamma-ratio machinery


def _is_gamma_pole(x) -> bool:
    x = float(x)
    return x <= 0.0 and x == math.floor(x)


def gamma_ratio(num=(), den=()):
    """prod Gamma(num_i) / prod Gamma(den_j), sign-aware and overflow-safe.

    Raises ValueError if any argument sits on a pole of Gamma.
    """
    num = [float(v) for v in np.atleast_1d(num)]
    den = [float(v) for v in np.atleast_1d(den)]
    for v in num + den:
        if _is_gamma_pole(v):
            raise ValueError(f"Gamma argument {v} is a pole")
    log = sum(gammaln(v) for v in num) - sum(gammaln(v) for v in den)
    sign = np.prod([gammasgn(v) for v in num + den])  # 1/sign == sign for +-1
    return float(sign) * math.exp(log)


def binom_real(x: float, k: int) -> float:
    """binom(x, k) for real x > k-1, integer k >= 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return gamma_ratio((x + 1,), (k + 1.0, x - k + 1))


def pochhammer(a: float, m: int) -> float:
    """Rising factorial (a)_m = a (a+1) ... (a+m-1) for a > 0."""
    if a <= 0:
        raise ValueError("pochhammer needs a > 0")
    return math.exp(gammaln(a + m) - gammaln(a))


# ----------------------------------------------------------------------------
# Gegenbauer C and Z


def _check_gegen_lambda(lam: float):
    if lam <= -0.5:
        raise ValueError(f"Gegenbauer index must satisfy lam > -1/2, got {lam}")
    if lam == 0.0:
        raise ValueError("lam = 0 degenerates C_n^lam; use gegenbauer_Z")


def gegenbauer_C_table(nmax: int, lam: float, t):
    """C_0^lam .. C_nmax^lam at t via the three-term recurrence.

    Returns an array of shape (nmax+1,) + shape(t).  The recurrence runs in
    extended precision so endpoint values stay within ~1 ulp of the closed
    binomial form through degree a few hundred.
    """
    _check_gegen_lambda(lam)
    if nmax < 0:
        raise ValueError("degree must be nonnegative")
    t = np.asarray(t, dtype=np.longdouble)
    lam = np.longdouble(lam)  # keep coefficient rounding below the growth rate
    out = np.empty((nmax + 1,) + t.shape, dtype=np.longdouble)
    out[0] = 1.0
    if nmax == 0:
        return out.astype(float)
    out[1] = 2.0 * lam * t
    for n in range(2, nmax + 1):
        out[n] = (2.0 * (n + lam - 1) * t * out[n - 1]
                  - (n + 2.0 * lam - 2) * out[n - 2]) / n
    return out.astype(float)


def gegenbauer_C(n: int, lam: float, t):
    """Gegenbauer polynomial C_n^lam(t), normalized so C_n^lam(1) is binomial."""
    t = np.asarray(t, dtype=float)
    val = gegenbauer_C_table(n, lam, t)[n]
    return float(val) if val.ndim == 0 else val


def gegenbauer_C_at_one(n: int, lam: float) -> float:
    """C_n^lam(1) = binom(n + 2*lam - 1, n), as a running product: exact to a
    few ulps, where the exp(log Gamma) route would lose ~n ulps."""
    _check_gegen_lambda(lam)
    out = 1.0
    for k in range(1, n + 1):
        out *= (2.0 * lam - 1.0 + k) / k
    return out


def gegenbauer_h(n: int, lam: float) -> float:
    """Squared norm of C_n^lam under the unit-mass Gegenbauer weight."""
    return lam / (n + lam) * gegenbauer_C_at_one(n, lam)


def gegenbauer_Z_table(nmax: int, lam: float, t):
    """Z_0^lam .. Z_nmax^lam at t; lam = 0 uses the Chebyshev limit 2*T_n."""
    if lam < 0:
        raise ValueError(f"Z_n^lam needs lam >= 0, got {lam}")
    if nmax < 0:
        raise ValueError("degree must be nonnegative")
    t = np.asarray(t, dtype=float)
    out = np.empty((nmax + 1,) + t.shape)
    out[0] = 1.0
    if nmax == 0:
        return out
    if lam == 0.0:
        tl = t.astype(np.longdouble)
        tprev = np.ones_like(tl)
        tcur = tl.copy()
        out[1] = 2.0 * t
        for n in range(2, nmax + 1):
            tprev, tcur = tcur, 2.0 * tl * tcur - tprev
            out[n] = 2.0 * tcur.astype(float)
        return out
    ctab = gegenbauer_C_table(nmax, lam, t)
    for n in range(1, nmax + 1):
        out[n] = (n + lam) / lam * ctab[n]
    return out


def gegenbauer_Z(n: int, lam: float, t):
    """Z_n^lam(t) = ((n+lam)/lam) C_n^lam(t), Chebyshev limit at lam = 0."""
    t = np.asarray(t, dtype=float)
    val = gegenbauer_Z_table(n, lam, t)[n]
    return float(val) if val.ndim == 0 else val


# ----------------------------------------------------------------------------
# Jacobi


def jacobi_P_table(nmax: int, alpha: float, beta: float, t):
    """P_0^(alpha,beta) .. P_nmax^(alpha,beta) at t, by the recurrence."""
    if alpha <= -1 or beta <= -1:
        raise ValueError(f"Jacobi exponents must exceed -1, got ({alpha}, {beta})")
    if nmax < 0:
        raise ValueError("degree must be nonnegative")
    t = np.asarray(t, dtype=np.longdouble)
    alpha = np.longdouble(alpha)  # forward recurrence at t = 1 amplifies
    beta = np.longdouble(beta)    # coefficient rounding by ~n^(beta-alpha)
    out = np.empty((nmax + 1,) + t.shape, dtype=np.longdouble)
    out[0] = 1.0
    if nmax == 0:
        return out.astype(float)
    ab = alpha + beta
    out[1] = (alpha + 1) + (ab + 2) * (t - 1) / 2.0
    for n in range(2, nmax + 1):
        c1 = 2.0 * n * (n + ab) * (2 * n + ab - 2)
        c2 = (2 * n + ab - 1) * (alpha * alpha - beta * beta)
        c3 = (2 * n + ab - 1) * (2 * n + ab) * (2 * n + ab - 2)
        c4 = 2.0 * (n + alpha - 1) * (n + beta - 1) * (2 * n + ab)
        out[n] = ((c2 + c3 * t) * out[n - 1] - c4 * out[n - 2]) / c1
    return out.astype(float)


def jacobi_P(n: int, alpha: float, beta: float, t):
    """Jacobi polynomial P_n^(alpha,beta)(t) with P_n(1) = binom(n+alpha, n)."""
    t = np.asarray(t, dtype=float)
    val = jacobi_P_table(n, alpha, beta, t)[n]
    return float(val) if val.ndim == 0 else val


# ----------------------------------------------------------------------------
# Generalized Gegenbauer (orthonormal)


def _check_gen_gegen(a: float, b: float):
    if a <= -0.5 or b <= -0.5:
        raise ValueError(f"generalized Gegenbauer needs a, b > -1/2, got ({a}, {b})")


def _gen_gegen_lognorm(m: int, a: float, b: float, odd: bool) -> float:
    # log of the squared norm of the Jacobi factor under the unit-mass weight;
    # n = 0 is exactly 1 and is special-cased by the callers.
    lc = gammaln(a + b + 1) - gammaln(b + 0.5) - gammaln(a + 0.5)
    if odd:
        return (lc - math.log(2 * m + a + b + 1) + gammaln(m + a + 0.5)
                + gammaln(m + b + 1.5) - gammaln(m + a + b + 1) - gammaln(m + 1.0))
    return (lc - math.log(2 * m + a + b) + gammaln(m + a + 0.5)
            + gammaln(m + b + 0.5) - gammaln(m + a + b) - gammaln(m + 1.0))


def gen_gegenbauer_D_table(nmax: int, a: float, b: float, t):
    """Orthonormal D_0^(a,b) .. D_nmax^(a,b) at t.

    Even degrees are Jacobi (a-1/2, b-1/2) in 2t^2-1, odd degrees carry an
    extra factor t with Jacobi (a-1/2, b+1/2); both are rescaled to unit norm
    under the normalized weight |t|^(2b) (1-t^2)^(a-1/2).
    """
    _check_gen_gegen(a, b)
    if nmax < 0:
        raise ValueError("degree must be nonnegative")
    t = np.asarray(t, dtype=float)
    u = 2.0 * t * t - 1.0
    meven = nmax // 2
    modd = (nmax - 1) // 2
    ptab_e = jacobi_P_table(meven, a - 0.5, b - 0.5, u)
    ptab_o = jacobi_P_table(max(modd, 0), a - 0.5, b + 0.5, u) if nmax >= 1 else None
    out = np.empty((nmax + 1,) + t.shape)
    for n in range(nmax + 1):
        m, r = divmod(n, 2)
        if n == 0:
            out[0] = 1.0
        elif r == 0:
            out[n] = ptab_e[m] * math.exp(-0.5 * _gen_gegen_lognorm(m, a, b, False))
        else:
            out[n] = t * ptab_o[m] * math.exp(-0.5 * _gen_gegen_lognorm(m, a, b, True))
    return out


def gen_gegenbauer_D(n: int, a: float, b: float, t):
    """Orthonormal generalized Gegenbauer polynomial D_n^(a,b)(t)."""
    t = np.asarray(t, dtype=float)
    val = gen_gegenbauer_D_table(n, a, b, t)[n]
    return float(val) if val.ndim == 0 else val


def gen_gegenbauer_D_at_one(n: int, a: float, b: float) -> float:
    """D_n^(a,b)(1), via the Jacobi endpoint value binom(m + a - 1/2, m)."""
    _check_gen_gegen(a, b)
    if n == 0:
        return 1.0
    m, r = divmod(n, 2)
    lend = gammaln(m + a + 0.5) - gammaln(m + 1.0) - gammaln(a + 0.5)
    return math.exp(lend - 0.5 * _gen_gegen_lognorm(m, a, b, r == 1))


# ----------------------------------------------------------------------------
# Named constants


def c_lambda(lam: float) -> float:
    """Normalization of (1-t^2)^(lam-1/2) on (-1,1): reciprocal total mass."""
    if lam <= -0.5:
        raise ValueError(f"c_lambda needs lam > -1/2, got {lam}")
    return gamma_ratio((lam + 1,), (0.5, lam + 0.5))


def c_lambda_mu(lam: float, mu: float) -> float:
    """Normalization of |t|^(2 mu) (1-t^2)^(lam-1/2) on (-1,1)."""
    _check_gen_gegen(lam, mu)
    return gamma_ratio((lam + mu + 1,), (mu + 0.5, lam + 0.5))


def sigma(lam: float, mu: float) -> float:
    """Gamma(lam+mu) / (Gamma(lam) Gamma(mu))."""
    return gamma_ratio((lam + mu,), (lam, mu))


def b_coeff(k: int, j: int, n: int, lam: float, mu: float) -> float:
    """Expansion coefficient of the shifted-argument Gegenbauer addition sum.

    Restricted to lam, mu > 1/2 so every Gamma argument is positive; the
    boundary cases are handled by the independent closed kernel forms instead.
    """
    if lam <= 0.5 or mu <= 0.5:
        raise ValueError(f"b_coeff needs lam, mu > 1/2, got ({lam}, {mu})")
    if min(k, j, n) < 0 or k + j > n:
        raise ValueError("b_coeff needs 0 <= k + j <= n")
    return gamma_ratio((mu - 0.5, lam - 0.5, lam + mu + k + j + 1),
                       (lam + mu, k + mu - 0.5, j + lam - 0.5)) / (n + lam + mu)


def B_coeff(j: int, n: int, lam: float, mu: float, d: int) -> float:
    """Squared connection coefficient between the radial Jacobi factor and D_2j."""
    if not 0 <= 2 * j <= n:
        raise ValueError("B_coeff needs 0 <= j <= n/2")
    return gamma_ratio(
        (n - 2 * j + lam + mu + (d + 1) / 2, j + mu + 0.5, n - j + lam + d / 2),
        (mu + 0.5, n - 2 * j + lam + d / 2, n - j + lam + mu + (d - 1) / 2, j + 1.0),
    ) / (n + lam + mu + (d - 1) / 2)


def H_coeff(j: int, n: int, lam: float, mu: float, d: int) -> float:
    """Squared norm of the degree-n, index-j radial-times-harmonic basis element."""
    if not 0 <= 2 * j <= n:
        raise ValueError("H_coeff needs 0 <= j <= n/2")
    num = (pochhammer(lam + d / 2, n - j) * pochhammer(mu + 0.5, j)
           * (n - j + lam + mu + (d - 1) / 2))
    den = (math.factorial(j) * pochhammer(lam + mu + (d + 1) / 2, n - j)
           * (n + lam + mu + (d - 1) / 2))
    return num / den


def dim_Vn(n: int, d: int) -> int:
    """Dimension of the space of degree-n orthogonal polynomials in d variables."""
    if not (isinstance(n, (int, np.integer)) and isinstance(d, (int, np.integer))):
        raise ValueError("dim_Vn needs integer n and d")
    if n < 0 or d < 1:
        raise ValueError("dim_Vn needs n >= 0 and d >= 1")
    return math.comb(n + d - 1, n)


_CONSTANTS = {
    "c_lambda": c_lambda,
    "c_lambda_mu": c_lambda_mu,
    "sigma": sigma,
    "c_mu_thm12": c_lambda,
    "b_coeff": b_coeff,
    "B_coeff": B_coeff,
    "H_coeff": H_coeff,
    "dim_Vn": dim_Vn,
}


def constant(kind: str, *args, **kwargs):
    """Dispatch to a named constant; kind is one of _CONSTANTS' keys."""
    try:
        fn = _CONSTANTS[kind]
    except KeyError:
        raise ValueError(f"unknown constant kind {kind!r}; "
                         f"expected one of {sorted(_CONSTANTS)}") from None
    return fn(*args, **kwargs)
