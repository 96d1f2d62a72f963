"""Sharp constant of the L2 Markov inequality with the Gegenbauer weight.

The constant for polynomials of degree at most n is computed as twice the
square root of the dominant eigenvalue of a parity block of the derivative
Gram matrix, cross-checked by coefficient-space and quadrature oracles.
"""

from .asymptotics import (
    AsymptoticsReport,
    LegendreBracket,
    asymptotic_report,
    bessel_first_zero,
    limit_bracket,
    legendre_bracket,
)
from .basis import (
    DerivativeExpansion,
    Lambda,
    derivative_expansion,
    eval_gegenbauer,
    eval_gegenbauer_derivative,
    eval_weight,
    h_squared_ratio,
)
from .checks import DEFAULT_LAMBDA_GRID, VerifyOutcome, run_all
from .constant import (
    ExtremalPolynomial,
    MarkovReport,
    extremal_polynomial,
    interlacing_check,
    sharp_constant,
    theorem_bound,
    trace_bound,
)
from .matrices import (
    CoefficientSet,
    SpdMatrix,
    TraceReport,
    TriFactor,
    build_factor,
    build_matrix,
    prefix_and_diag,
    seq_coefficients,
    traces,
)
from .quadrature import (
    QuadratureRule,
    gauss_gegenbauer,
    oracle_constant_coefficient,
    oracle_constant_quadrature,
    rayleigh_sample,
)
from .spectral import (
    ConvergenceError,
    SpectralResult,
    dominant_eig,
    full_spectrum_jacobi,
    generalized_dominant,
)

__version__ = "0.1.0"
