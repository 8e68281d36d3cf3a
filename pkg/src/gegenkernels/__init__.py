"""Gegenbauer-family special functions, quadrature on the interval, simplex,
and ball, dual-route verification of the underlying integral identities, and
reproducing/Cesaro kernels for product Gegenbauer weights on the cube and for
radially weighted Gegenbauer-type weights on the ball.
"""

from .specfun import (
    gegenbauer_C, gegenbauer_C_at_one, gegenbauer_h, gegenbauer_Z,
    jacobi_P, gen_gegenbauer_D, gen_gegenbauer_D_at_one,
    c_lambda, c_lambda_mu, sigma, b_coeff, B_coeff, H_coeff, dim_Vn, constant,
)
from .quadrature import (
    QuadRule1D, SimplexRule, BallRule,
    gauss_jacobi, beta_rule, simplex_rule, ball_rule, integrate,
)
from .identities import (
    IdentityReport, default_order,
    verify_main_identity, verify_poisson_product, verify_gegen1, verify_gegen2,
    verify_addition_formula, verify_generating, generating_tail_bound,
    verify_product_formula, divided_difference, verify_hermite_genocchi,
)
from .cube_kernels import (
    CubeWeight, kernel_cube_direct, kernel_cube_at_one_closed,
    cesaro_kernel_gegenbauer, cesaro_kernel_cube_at_one,
    cesaro_cube_at_one_by_definition, nonnegativity_scan,
)
from .ball_kernels import (
    BallWeight, kernel_ball_direct, kernel_ball_closed, kernel_ball_closed_mu0,
    kernel_ball_closed_lambda0, kernel_ball, kernel_ball_at_zero, a_const,
    apply_Gx, verify_Gx_integral, cesaro_kernel_ball, cesaro_kernel_ball_center,
    lebesgue_function, lebesgue_at_zero_1d, critical_index_sweep,
)

__version__ = "0.1.0"
