"""Kummer's Fourier expansion of ln Gamma on (0, 1) and the log-sine sum
identity it yields:

  ln Gamma(x) = (1/2 - x)(gamma + ln 2) + (1 - x) ln pi - (1/2) ln sin(pi x)
                + (1/pi) sum_{n>=1} ln n sin(2 pi n x)/n

  sum_{n>=2} ln n sin(n(pi - phi))/n
      = pi ln Gamma(1/2 - phi/(2 pi)) - (phi/2)(gamma + ln 2 pi)
        - (pi/2) ln pi + (pi/2) ln cos(phi/2)

The series side of the identity is always summed in its alternating form
via the parity map (-1)^n sin(n phi) = -sin(n(pi - phi)), which is where
the acceleration guarantees of the series engine apply.
"""

import cmath
import math
from dataclasses import dataclass

from . import kernels
from .acceleration import accelerated_limit
from .domain import Evaluation, Method
from .errors import DomainError, ZeroAngleError
from .series import DEFAULT_CONFIG, log_sine_sum
from .special_functions import EULER_GAMMA, LN_PI, LN_TWO_PI, log_gamma

# ln sin(pi x) dominates past these endpoints; the identity's useful range
# is interior.
ENDPOINT_GUARD = 1e-6

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class KummerPoint:
    """An abscissa strictly inside (0, 1) for the Fourier expansion."""

    x: float

    def __post_init__(self):
        if not 0.0 < self.x < 1.0:
            raise DomainError(f"x must lie strictly in (0, 1), got {self.x!r}")


def kummer_partial(x, n_terms, accel=True, accel_depth=16):
    """Truncated Kummer expansion of ln Gamma(x); optionally accelerated."""
    if isinstance(x, KummerPoint):
        x = x.x
    if not ENDPOINT_GUARD < x < 1.0 - ENDPOINT_GUARD:
        raise DomainError(
            f"kummer_partial requires {ENDPOINT_GUARD} < x < {1 - ENDPOINT_GUARD}"
        )
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    closed_part = (
        (0.5 - x) * (EULER_GAMMA + _LN2)
        + (1.0 - x) * LN_PI
        - 0.5 * math.log(math.sin(math.pi * x))
    )
    if n_terms == 1:
        return closed_part  # the n = 1 term is ln(1) = 0
    if x == 0.5:
        # every series term is sin(pi n) = 0 analytically; short-circuit so
        # the midpoint stays exactly (1/2) ln pi at every truncation instead
        # of picking up sin(n * rounded-pi) rounding dust
        return closed_part
    theta = 2.0 * math.pi * x
    if accel:
        window = min(n_terms - 1, accel_depth + 24)
        partials = kernels.log_sine_partials(theta, n_terms, window)
        value, _, _ = accelerated_limit(partials, cmath.exp(1j * theta), accel_depth)
        series = value.imag
    else:
        series = kernels.log_sine_partials(theta, n_terms, 1)[-1].imag
    return closed_part + series / math.pi


def derived_closed_side(phi):
    """Closed side of the log-sine sum identity, via log_gamma."""
    p = phi.phi
    return (
        math.pi * log_gamma(0.5 - p / (2.0 * math.pi))
        - 0.5 * p * (EULER_GAMMA + LN_TWO_PI)
        - 0.5 * math.pi * LN_PI
        + 0.5 * math.pi * math.log(math.cos(0.5 * p))
    )


def derived_sum_identity(phi, cfg=DEFAULT_CONFIG):
    """Both sides of the identity for sum_{n>=2} ln n sin(n(pi - phi))/n.

    Returns (series_side, closed_side).  The series side goes through the
    parity map to the alternating sum handled by the series engine; at a
    ZERO-classified phi every series term is sin(n pi) = 0 exactly.
    """
    closed_side = derived_closed_side(phi)
    if phi.is_zero:
        series_side = 0.0
    else:
        series_side = -log_sine_sum(phi, cfg)
    return series_side, closed_side


def kummer_closed_eval(phi):
    """I(phi) assembled from the identity's closed side (pre-reflection form).

    This is the route that closes the derivation: it uses a single
    log-gamma at 1/2 - phi/(2 pi) plus ln cos(phi/2), and must agree with
    the reflected two-gamma closed form.
    """
    if phi.is_zero:
        raise ZeroAngleError(
            "phi is below the zero threshold; call zero_limit() instead"
        )
    p = phi.phi
    value = -(0.5 * EULER_GAMMA * p + derived_closed_side(phi)) / math.sin(p)
    est = 5e-13 * math.pi / abs(math.sin(p))
    return Evaluation(phi=phi, value=value, method=Method.KUMMER, est_error=est, work=1)
