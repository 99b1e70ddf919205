"""Closed-form evaluation of Malmsten's integral

    I(phi) = (pi / (2 sin phi)) * ln[ (2 pi)^(phi/pi)
             Gamma(1/2 + phi/(2 pi)) / Gamma(1/2 - phi/(2 pi)) ]

on the open interval (-pi, pi), including the three classical special values
and the removable singularity at phi = 0.  Everything is computed in
log-space (sums of log-gammas), never through Gamma ratios.
"""

import enum
import math

from .domain import Angle, Evaluation, Method
from .errors import InternalInconsistencyError, ZeroAngleError
from .special_functions import LN_TWO_PI, digamma, log_gamma

# Per-call log-gamma error (~1e-13 abs) enters twice and is divided by sin(phi).
_LG_ERR = 2.5e-13


class SpecialCase(enum.Enum):
    PI_OVER_2 = math.pi / 2
    PI_OVER_3 = math.pi / 3
    TWO_PI_OVER_3 = 2 * math.pi / 3


def malmsten_closed(phi):
    """Generic closed form; REGULAR angles only (use zero_limit at phi ~ 0)."""
    if phi.is_zero:
        raise ZeroAngleError(
            "phi is below the zero threshold; call zero_limit() instead"
        )
    p = phi.phi
    t = p / (2.0 * math.pi)
    s = math.sin(p)
    value = (math.pi / (2.0 * s)) * (
        2.0 * t * LN_TWO_PI + log_gamma(0.5 + t) - log_gamma(0.5 - t)
    )
    est = _LG_ERR * math.pi / (2.0 * abs(s))
    return Evaluation(phi=phi, value=value, method=Method.CLOSED, est_error=est, work=1)


def zero_limit():
    """lim_{phi -> 0} I(phi) = (ln(2 pi) + psi(1/2))/2 = (ln(pi/2) - gamma)/2."""
    value = 0.5 * (LN_TWO_PI + digamma(0.5))
    return Evaluation(
        phi=Angle(0.0), value=value, method=Method.CLOSED, est_error=1e-15, work=1
    )


def two_pi_over_3_forms():
    """The two printed right-hand sides at phi = 2 pi / 3, as (form_a, form_b)."""
    form_a = (2.0 * math.pi / math.sqrt(3.0)) * (
        (5.0 / 6.0) * LN_TWO_PI - log_gamma(1.0 / 6.0)
    )
    form_b = (math.pi / math.sqrt(3.0)) * (
        log_gamma(5.0 / 6.0) + (2.0 / 3.0) * LN_TWO_PI - log_gamma(1.0 / 6.0)
    )
    return form_a, form_b


def special_value(which):
    """The classically tabulated right-hand sides at phi = pi/2, pi/3, 2pi/3.

    For TWO_PI_OVER_3 both printed forms are evaluated and must agree to
    1e-12, else InternalInconsistencyError.
    """
    if which is SpecialCase.PI_OVER_2:
        value = (math.pi / 2.0) * (
            log_gamma(0.75) + 0.5 * LN_TWO_PI - log_gamma(0.25)
        )
    elif which is SpecialCase.PI_OVER_3:
        value = (math.pi / math.sqrt(3.0)) * (
            log_gamma(2.0 / 3.0) + LN_TWO_PI / 3.0 - log_gamma(1.0 / 3.0)
        )
    else:
        form_a, form_b = two_pi_over_3_forms()
        if abs(form_a - form_b) > 1e-12:
            raise InternalInconsistencyError(
                f"the two printed forms at 2pi/3 disagree: {form_a!r} vs {form_b!r}"
            )
        value = form_a
    return Evaluation(
        phi=Angle(which.value),
        value=value,
        method=Method.CLOSED,
        est_error=1e-12,
        work=1,
    )
