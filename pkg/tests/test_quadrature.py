"""Rule construction, exactness, positivity, and the integrate driver."""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.special import roots_jacobi

from gegenkernels import ball_rule, beta_rule, gauss_jacobi, integrate, simplex_rule

from helpers import ball_moment, beta_fn, beta_moment, jacobi_shifted_moment, simplex_moment


class TestGaussJacobi:
    def test_single_point_legendre(self):
        rule = gauss_jacobi(1, 0.0, 0.0)
        assert_allclose(rule.nodes, [0.0], atol=1e-15)
        assert_allclose(rule.weights, [2.0], rtol=1e-15)

    def test_monomial_degree_eight(self):
        rule = gauss_jacobi(5, 0.0, 0.0)
        val = float(np.sum(rule.weights * rule.nodes ** 8))
        assert abs(val - 2.0 / 9.0) < 1e-14

    def test_total_mass_half_half(self):
        rule = gauss_jacobi(8, 0.5, 0.5)
        assert_allclose(float(np.sum(rule.weights)), math.pi / 2, rtol=1e-13)

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            gauss_jacobi(0, 0.0, 0.0)
        with pytest.raises(ValueError):
            gauss_jacobi(4, -1.0, 0.0)
        with pytest.raises(ValueError):
            gauss_jacobi(4, 0.0, -1.2)

    @pytest.mark.parametrize("params", [(6, 0.0, 0.0), (9, 0.5, -0.5),
                                        (12, 2.3, 0.1), (5, -0.9, 1.4)])
    def test_matches_scipy(self, params):
        n, alpha, beta = params
        rule = gauss_jacobi(n, alpha, beta)
        xs, ws = roots_jacobi(n, alpha, beta)
        assert_allclose(rule.nodes, xs, atol=1e-12)
        assert_allclose(rule.weights, ws, rtol=2e-11, atol=1e-14)

    @pytest.mark.parametrize("params", [(7, 0.0, 0.0), (10, 1.5, -0.5),
                                        (4, -0.3, 2.0)])
    def test_shifted_monomial_exactness(self, params):
        n, alpha, beta = params
        rule = gauss_jacobi(n, alpha, beta)
        s = (rule.nodes + 1) / 2
        for j in range(rule.exactness + 1):
            val = float(np.add.reduce(rule.weights * s ** j))
            assert_allclose(val, jacobi_shifted_moment(j, alpha, beta),
                            rtol=1e-12, err_msg=f"degree {j}")

    def test_nodes_interior_increasing_weights_positive(self):
        rule = gauss_jacobi(20, -0.5, 1.7)
        assert np.all(np.diff(rule.nodes) > 0)
        assert rule.nodes[0] > -1 and rule.nodes[-1] < 1
        assert np.all(rule.weights > 0)


class TestBetaRule:
    def test_uniform_total(self):
        rule = beta_rule(4, 1.0, 1.0)
        assert_allclose(float(np.sum(rule.weights)), 1.0, rtol=1e-14)

    def test_total_two_three(self):
        rule = beta_rule(6, 2.0, 3.0)
        assert_allclose(float(np.sum(rule.weights)), 1.0 / 12.0, rtol=1e-13)

    def test_first_moment_fractional(self):
        rule = beta_rule(6, 1.5, 0.5)
        val = float(np.sum(rule.weights * rule.nodes))
        assert_allclose(val, beta_fn(2.5, 0.5), rtol=1e-13)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            beta_rule(4, 0.0, 1.0)
        with pytest.raises(ValueError):
            beta_rule(4, 1.0, -0.5)

    @pytest.mark.parametrize("ab", [(1.0, 1.0), (0.4, 2.6), (3.0, 0.2)])
    def test_monomial_exactness(self, ab):
        a, b = ab
        rule = beta_rule(8, a, b)
        for j in range(rule.exactness + 1):
            val = float(np.add.reduce(rule.weights * rule.nodes ** j))
            assert_allclose(val, beta_moment(j, a, b), rtol=1e-12)

    def test_nodes_in_unit_interval(self):
        rule = beta_rule(12, 0.3, 0.8)
        assert np.all(rule.nodes > 0) and np.all(rule.nodes < 1)
        assert np.all(rule.weights > 0)


class TestSimplexRule:
    def test_total_is_one_for_unit_exponents_d2(self):
        rule = simplex_rule(2, (1.0, 1.0), 5)
        assert_allclose(float(np.sum(rule.weights)), 1.0, rtol=1e-14)

    def test_first_coordinate_moment_d3(self):
        rule = simplex_rule(3, (1.0, 1.0, 1.0), 4)
        val = float(np.sum(rule.weights * rule.nodes[:, 0]))
        assert_allclose(val, 1.0 / 6.0, rtol=1e-13)

    def test_fractional_exponent_moment(self):
        rule = simplex_rule(2, (0.5, 1.5), 5)
        val = float(np.sum(rule.weights * rule.nodes[:, 0] ** 2))
        assert_allclose(val, simplex_moment((2, 0), (0.5, 1.5)), rtol=1e-13)

    def test_rejects_nonpositive_exponents(self):
        with pytest.raises(ValueError):
            simplex_rule(2, (0.0, 1.0), 4)

    def test_homogeneous_coordinates(self):
        rule = simplex_rule(4, (0.7, 1.1, 2.0, 0.4), 3)
        assert np.all(rule.nodes >= 0)
        assert_allclose(rule.nodes.sum(axis=1), 1.0, atol=1e-14)
        assert np.all(rule.weights > 0)

    @pytest.mark.parametrize("d,exps", [(2, (0.5, 1.5)), (3, (1.0, 0.3, 2.1)),
                                        (4, (1.0, 1.0, 1.0, 1.0))])
    def test_monomial_exactness(self, d, exps):
        rng = np.random.default_rng(7)
        rule = simplex_rule(d, exps, 6)
        for _ in range(20):
            total = rng.integers(0, rule.exactness + 1)
            cuts = rng.multinomial(total, np.ones(d) / d)
            vals = np.prod(rule.nodes ** cuts, axis=1)
            got = float(np.add.reduce(rule.weights * vals))
            assert_allclose(got, simplex_moment(cuts, exps), rtol=1e-12)


class TestBallRule:
    def test_total_weight_one(self):
        rule = ball_rule(2, 0.5, 1.0, 6)
        assert_allclose(float(np.sum(rule.weights)), 1.0, rtol=1e-14)

    def test_odd_moment_vanishes(self):
        for d in (2, 3):
            rule = ball_rule(d, 0.8, 0.6, 5)
            val = float(np.sum(rule.weights * rule.nodes[:, 0]))
            assert abs(val) < 1e-15

    def test_radial_second_moment(self):
        rule = ball_rule(2, 0.0, 0.5, 6)
        val = float(np.sum(rule.weights * np.sum(rule.nodes ** 2, axis=1)))
        assert_allclose(val, 0.5, rtol=1e-13)

    def test_rejects_bad_dimension(self):
        with pytest.raises(ValueError):
            ball_rule(4, 0.5, 1.0, 4)

    def test_nodes_inside_ball(self):
        rule = ball_rule(3, 1.2, 0.7, 5)
        assert np.all(np.sum(rule.nodes ** 2, axis=1) < 1)
        assert np.all(rule.weights > 0)

    @pytest.mark.parametrize("d,lam,mu", [(2, 0.6, 0.9), (3, 1.2, 0.7),
                                          (2, 0.0, 1.4)])
    def test_monomial_exactness(self, d, lam, mu):
        rng = np.random.default_rng(11)
        rule = ball_rule(d, lam, mu, 8)
        for _ in range(20):
            total = int(rng.integers(0, rule.exactness + 1))
            cuts = rng.multinomial(total, np.ones(d) / d)
            vals = np.prod(rule.nodes ** cuts, axis=1)
            got = float(np.add.reduce(rule.weights * vals))
            assert_allclose(got, ball_moment(cuts, lam, mu, d),
                            rtol=1e-12, atol=1e-14)


class TestIntegrate:
    def test_constant_gives_total(self):
        rule = beta_rule(5, 2.0, 3.0)
        assert_allclose(integrate(rule, lambda s: 1.0),
                        float(np.sum(rule.weights)), rtol=1e-15)

    def test_exponential(self):
        rule = gauss_jacobi(30, 0.0, 0.0)
        assert abs(integrate(rule, math.exp) - 2 * math.sinh(1)) < 1e-14

    def test_monomial_within_exactness(self):
        rule = gauss_jacobi(6, 1.0, 0.5)
        got = integrate(rule, lambda t: ((1 + t) / 2) ** 7)
        assert_allclose(got, jacobi_shifted_moment(7, 1.0, 0.5), rtol=1e-13)

    def test_multivariate_nodes(self):
        rule = simplex_rule(3, (1.0, 1.0, 1.0), 4)
        got = integrate(rule, lambda u: u[0] * u[2])
        assert_allclose(got, simplex_moment((1, 0, 1), (1, 1, 1)), rtol=1e-12)

    def test_rejects_non_finite(self):
        rule = beta_rule(5, 1.0, 1.0)
        with pytest.raises(ValueError, match="non-finite"):
            integrate(rule, lambda s: float("nan"))

    def test_bit_identical_reruns(self):
        rule = gauss_jacobi(25, 0.3, 1.1)
        f = lambda t: math.exp(t) * math.cos(3 * t)
        assert integrate(rule, f) == integrate(rule, f)

    def test_refinement_convergence(self):
        vals = [integrate(beta_rule(n, 1.3, 0.7), math.exp) for n in (20, 40, 80)]
        assert abs(vals[1] - vals[0]) < 1e-10
        assert abs(vals[2] - vals[1]) < 1e-12

    def test_rule_arrays_frozen(self):
        rule = gauss_jacobi(4, 0.0, 0.0)
        with pytest.raises(ValueError):
            rule.nodes[0] = 0.5
