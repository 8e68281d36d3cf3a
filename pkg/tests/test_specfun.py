"""Special-function values, parity laws, orthonormality, and constants."""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from gegenkernels import (
    B_coeff, H_coeff, b_coeff, beta_rule, c_lambda, c_lambda_mu, constant,
    dim_Vn, gauss_jacobi, gegenbauer_C, gegenbauer_C_at_one, gegenbauer_h,
    gegenbauer_Z, gen_gegenbauer_D, gen_gegenbauer_D_at_one, jacobi_P, sigma,
)
from gegenkernels.specfun import (
    gegenbauer_C_table, gen_gegenbauer_D_table, jacobi_P_table,
)


class TestGegenbauerC:
    def test_degree_zero(self):
        assert gegenbauer_C(0, 0.7, 0.3) == 1.0

    def test_endpoint_binomial(self):
        assert_allclose(gegenbauer_C(2, 1.0, 1.0), 3.0, rtol=1e-14)

    def test_degree_one(self):
        assert_allclose(gegenbauer_C(1, 0.5, 0.3), 0.3, rtol=1e-14)

    def test_rejects_bad_lambda(self):
        with pytest.raises(ValueError):
            gegenbauer_C(2, -0.6, 0.1)

    def test_rejects_lambda_zero_with_hint(self):
        with pytest.raises(ValueError, match="gegenbauer_Z"):
            gegenbauer_C(2, 0.0, 0.1)

    @pytest.mark.parametrize("lam", [-0.3, 0.5, 1.0, 2.5])
    def test_endpoint_matches_closed_form(self, lam):
        tab = gegenbauer_C_table(50, lam, np.asarray(1.0))
        for n in range(51):
            assert_allclose(tab[n], gegenbauer_C_at_one(n, lam), rtol=1e-13)

    @pytest.mark.parametrize("lam", [-0.3, 0.8, 2.0])
    @pytest.mark.parametrize("n", [1, 2, 5, 10])
    def test_parity(self, lam, n):
        t = 0.37
        assert_allclose(gegenbauer_C(n, lam, -t),
                        (-1) ** n * gegenbauer_C(n, lam, t), rtol=1e-13)


class TestGegenbauerH:
    def test_degree_zero_is_one(self):
        for lam in (0.3, 1.0, 2.2):
            assert_allclose(gegenbauer_h(0, lam), 1.0, rtol=1e-14)

    def test_values(self):
        assert_allclose(gegenbauer_h(1, 1.0), 1.0, rtol=1e-14)
        assert_allclose(gegenbauer_h(2, 0.5), 0.2, rtol=1e-14)

    @pytest.mark.parametrize("lam", [0.5, 1.3])
    def test_matches_quadrature(self, lam):
        rule = gauss_jacobi(40, lam - 0.5, lam - 0.5)
        cl = c_lambda(lam)
        for n in (0, 1, 3, 7):
            tab = gegenbauer_C_table(n, lam, rule.nodes)
            val = cl * float(np.add.reduce(rule.weights * tab[n] ** 2))
            assert_allclose(val, gegenbauer_h(n, lam), rtol=1e-12)


class TestGegenbauerZ:
    def test_degree_zero(self):
        assert gegenbauer_Z(0, 1.4, -0.2) == 1.0

    def test_degree_one(self):
        assert_allclose(gegenbauer_Z(1, 1.0, 0.5), 2.0, rtol=1e-14)

    def test_chebyshev_limit(self):
        assert_allclose(gegenbauer_Z(2, 0.0, 1.0), 2.0, rtol=1e-14)
        t = 0.43
        assert_allclose(gegenbauer_Z(5, 0.0, t),
                        2 * math.cos(5 * math.acos(t)), rtol=1e-12)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            gegenbauer_Z(2, -0.1, 0.5)

    @pytest.mark.parametrize("lam", [0.4, 1.7])
    @pytest.mark.parametrize("n", [0, 1, 4, 9])
    def test_orthonormal_chain(self, lam, n):
        # normalized pair product equals Z pointwise
        t = -0.62
        h = gegenbauer_h(n, lam)
        lhs = (gegenbauer_C_at_one(n, lam) / math.sqrt(h)
               * gegenbauer_C(n, lam, t) / math.sqrt(h))
        assert_allclose(lhs, gegenbauer_Z(n, lam, t), rtol=1e-12)


class TestJacobi:
    def test_degree_zero(self):
        assert jacobi_P(0, 0.5, 2.0, 0.9) == 1.0

    def test_odd_symmetry_at_zero(self):
        assert jacobi_P(1, 0.0, 0.0, 0.0) == 0.0

    def test_endpoint(self):
        assert_allclose(jacobi_P(2, 1.0, 0.5, 1.0), 3.0, rtol=1e-14)

    def test_rejects_bad_exponents(self):
        with pytest.raises(ValueError):
            jacobi_P(2, -1.0, 0.0, 0.5)
        with pytest.raises(ValueError):
            jacobi_P(2, 0.0, -1.5, 0.5)

    @pytest.mark.parametrize("ab", [(0.0, 0.0), (1.5, -0.5), (-0.3, 2.0)])
    def test_endpoint_matches_closed_form(self, ab):
        alpha, beta = ab
        tab = jacobi_P_table(50, alpha, beta, np.asarray(1.0))
        expect = 1.0
        for n in range(51):
            if n:
                expect *= (alpha + n) / n  # binom(n+alpha, n) running product
            assert_allclose(tab[n], expect, rtol=1e-13)

    def test_parity_symmetric_weight(self):
        t = 0.51
        for n in range(1, 9):
            assert_allclose(jacobi_P(n, 0.7, 0.7, -t),
                            (-1) ** n * jacobi_P(n, 0.7, 0.7, t), rtol=1e-12)


class TestGenGegenbauer:
    def test_degree_zero(self):
        assert gen_gegenbauer_D(0, 0.9, 0.4, 0.77) == 1.0

    def test_degree_one(self):
        lam, mu, t = 1.1, 0.6, -0.35
        expect = t * math.sqrt((lam + mu + 1) / (mu + 0.5))
        assert_allclose(gen_gegenbauer_D(1, lam, mu, t), expect, rtol=1e-14)

    @pytest.mark.parametrize("params", [(0.5, 0.5), (1.3, 0.2)])
    def test_orthonormality_by_quadrature(self, params):
        lam, mu = params
        # substitute s = t^2: the weight becomes a beta weight on (0,1) and
        # even/odd products reduce to polynomials in s (odd*even vanishes)
        rule = beta_rule(60, mu + 0.5, lam + 0.5)
        tau = np.sqrt(rule.nodes)
        clm = c_lambda_mu(lam, mu)
        tab_p = gen_gegenbauer_D_table(20, lam, mu, tau)
        tab_m = gen_gegenbauer_D_table(20, lam, mu, -tau)
        for n in range(21):
            for m in range(n + 1):
                sym = 0.5 * (tab_p[n] * tab_p[m] + tab_m[n] * tab_m[m])
                val = clm * float(np.add.reduce(rule.weights * sym))
                assert abs(val - (1.0 if n == m else 0.0)) < 1e-12, (n, m)

    def test_at_one_matches_table(self):
        lam, mu = 0.8, 1.3
        tab = gen_gegenbauer_D_table(15, lam, mu, np.asarray(1.0))
        for n in range(16):
            assert_allclose(tab[n], gen_gegenbauer_D_at_one(n, lam, mu),
                            rtol=1e-13)

    def test_parity(self):
        t = 0.42
        for n in range(9):
            assert_allclose(gen_gegenbauer_D(n, 0.7, 1.2, -t),
                            (-1) ** n * gen_gegenbauer_D(n, 0.7, 1.2, t),
                            rtol=1e-13)

    def test_rejects_bad_params(self):
        with pytest.raises(ValueError):
            gen_gegenbauer_D(2, -0.6, 0.5, 0.1)


class TestConstants:
    def test_sigma_one_one(self):
        assert_allclose(sigma(1.0, 1.0), 1.0, rtol=1e-14)

    def test_c_mu_half(self):
        assert_allclose(constant("c_mu_thm12", 0.5), 0.5, rtol=1e-14)

    def test_b_coeff_base(self):
        assert_allclose(b_coeff(0, 0, 0, 0.9, 1.4), 1.0, rtol=1e-13)

    def test_B_coeff_j_zero(self):
        for n in (0, 1, 5, 12):
            assert_allclose(B_coeff(0, n, 0.7, 1.1, 3), 1.0, rtol=1e-13)

    def test_dim_Vn(self):
        assert dim_Vn(2, 3) == 6
        assert dim_Vn(0, 5) == 1

    def test_dim_Vn_rejects_non_integer(self):
        with pytest.raises(ValueError):
            dim_Vn(2.5, 3)

    def test_b_coeff_rejects_boundary(self):
        with pytest.raises(ValueError):
            b_coeff(1, 1, 2, 0.5, 1.0)

    def test_sigma_rejects_poles(self):
        with pytest.raises(ValueError):
            sigma(0.0, 1.0)
        with pytest.raises(ValueError):
            sigma(-1.0, 0.5)

    def test_unknown_kind(self):
        with pytest.raises(ValueError, match="unknown constant"):
            constant("nope", 1.0)

    @pytest.mark.parametrize("lam", [0.3, 1.0, 2.4])
    def test_c_lambda_vs_quadrature(self, lam):
        rule = gauss_jacobi(40, lam - 0.5, lam - 0.5)
        assert_allclose(c_lambda(lam), 1.0 / float(np.sum(rule.weights)),
                        rtol=1e-12)

    @pytest.mark.parametrize("params", [(0.5, 0.5), (1.3, 0.2), (2.0, 1.7)])
    def test_c_lambda_mu_vs_quadrature(self, params):
        lam, mu = params
        rule = beta_rule(40, mu + 0.5, lam + 0.5)
        assert_allclose(c_lambda_mu(lam, mu), 1.0 / float(np.sum(rule.weights)),
                        rtol=1e-12)

    def test_H_coeff_positive(self):
        for n in range(8):
            for j in range(n // 2 + 1):
                assert H_coeff(j, n, 0.6, 0.9, 2) > 0
                assert B_coeff(j, n, 0.6, 0.9, 2) > 0
