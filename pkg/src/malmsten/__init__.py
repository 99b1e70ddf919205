"""Multi-method numerical verification workbench for Malmsten's integral

    I(phi) = integral_0^1 ln ln(1/x) / (1 + 2 x cos phi + x^2) dx,
    -pi < phi < pi.

Four independent routes are implemented and cross-validated: the gamma
closed form, the Cauchy-product series with Euler-style acceleration, the
assembly through Kummer's Fourier expansion of ln Gamma, and a
double-exponential quadrature oracle.
"""

from .closed_form import SpecialCase, malmsten_closed, special_value, zero_limit
from .domain import Angle, Classification, Evaluation, Method
from .errors import (
    DomainError,
    InternalInconsistencyError,
    MalmstenError,
    NonConvergenceError,
    ZeroAngleError,
)
from .kernels import BACKEND
from .kummer import KummerPoint, derived_sum_identity, kummer_closed_eval, kummer_partial
from .quadrature import (
    QuadConfig,
    QuadResult,
    Transform,
    integrand_exp,
    integrand_tan,
    integrand_unit,
    quad_eval,
    quad_jn,
    quad_tan_form,
)
from .series import (
    CoefficientWitness,
    SeriesConfig,
    coeff_a,
    j_n,
    log_sine_sum,
    sawtooth_partial,
    series_eval,
)
from .special_functions import EULER_GAMMA, digamma, log_gamma, reflection_product

__version__ = "0.1.0"
