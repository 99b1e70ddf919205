"""Series route for I(phi).

Evaluates I(phi) = (1/sin phi) [ -gamma*phi/2 + sum_{n>=2} (-1)^n ln n sin(n phi)/n ]
from the Cauchy-product expansion of the integrand.  The conditionally
convergent sums are taken strictly in increasing n and accelerated with
phase-weighted Euler averaging; (-1)^n e^{i n phi} = e^{i n (phi + pi)}, so
the oscillation factor handed to the accelerator is exp(i(phi + pi)).
"""

import cmath
import math
from dataclasses import dataclass

from . import kernels
from .acceleration import accelerated_limit
from .domain import Angle, Evaluation, Method
from .errors import DomainError, NonConvergenceError, ZeroAngleError
from .special_functions import EULER_GAMMA

# |phi| band inside which series_eval advertises its default tolerance; the
# alternating structure degrades towards |phi| = pi and the error estimate
# is widened instead of failing hard.
SERIES_BAND = 2.9


@dataclass(frozen=True)
class SeriesConfig:
    max_terms: int = 2000
    accel_depth: int = 16
    tail_tol: float = 1e-9

    def __post_init__(self):
        if not 0 <= self.accel_depth <= 30:
            raise ValueError("accel_depth must be in [0, 30]")
        if self.max_terms < self.accel_depth + 2:
            raise ValueError("max_terms must be >= accel_depth + 2")
        if not self.tail_tol > 0.0:
            raise ValueError("tail_tol must be positive")


DEFAULT_CONFIG = SeriesConfig()


@dataclass(frozen=True)
class CoefficientWitness:
    """Closed-form and brute-force values of the power-series coefficient a_n."""

    n: int
    closed: float
    brute: float


def _require_regular(phi):
    if phi.is_zero:
        raise ZeroAngleError("operation requires a REGULAR angle (|phi| >= 1e-6)")


def coeff_a(n, phi):
    """a_n = sin((n+1) phi)/sin(phi), with its brute-force trigonometric twin."""
    if n < 0:
        raise DomainError("n must be >= 0")
    _require_regular(phi)
    p = phi.phi
    closed = math.sin((n + 1) * p) / math.sin(p)
    brute = math.fsum(math.cos((n - 2 * k) * p) for k in range(n + 1))
    return CoefficientWitness(n=n, closed=closed, brute=brute)


def j_n(n):
    """J_n = integral_0^1 x^n ln ln(1/x) dx = -(gamma + ln(n+1))/(n+1)."""
    if n < 0:
        raise DomainError("n must be >= 0")
    return -(EULER_GAMMA + math.log(n + 1)) / (n + 1)


def _window(cfg):
    return cfg.accel_depth + 24


def sawtooth_partial(phi, n_terms, accel_depth=0):
    """Partial sum of sum_{n>=1} (-1)^{n+1} sin(n phi)/n (limit: phi/2).

    accel_depth = 0 returns the raw N-term partial sum; a positive depth
    applies the Euler averaging to the trailing partial sums.
    """
    p = phi.phi
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    theta = p + math.pi
    if accel_depth == 0:
        s = kernels.recip_sine_partials(theta, n_terms, 1)[-1]
        return -s.imag
    window = min(n_terms, accel_depth + 24)
    partials = kernels.recip_sine_partials(theta, n_terms, window)
    value, _, _ = accelerated_limit(partials, cmath.exp(1j * theta), accel_depth)
    return -value.imag


def _log_sine_sum_impl(phi, cfg):
    theta = phi.phi + math.pi
    partials = kernels.log_sine_partials(theta, cfg.max_terms, _window(cfg))
    value, est, _ = accelerated_limit(partials, cmath.exp(1j * theta), cfg.accel_depth)
    # accumulation noise of the raw partial sums: eps * sum |ln n / n|
    est += 2.3e-16 * 0.5 * math.log(cfg.max_terms) ** 2
    return value.imag, est, cfg.max_terms


def log_sine_sum(phi, cfg=DEFAULT_CONFIG):
    """Accelerated value of sum_{n>=2} (-1)^n ln n sin(n phi)/n."""
    _require_regular(phi)
    value, est, _ = _log_sine_sum_impl(phi, cfg)
    if est > cfg.tail_tol:
        raise NonConvergenceError(
            f"log-sine series did not reach tail_tol={cfg.tail_tol} "
            f"(estimated error {est:.3e})",
            best_estimate=value,
            est_error=est,
        )
    return value


def series_eval(phi, cfg=DEFAULT_CONFIG):
    """I(phi) assembled from the sawtooth constant and the log-sine series."""
    _require_regular(phi)
    p = phi.phi
    tail, est, work = _log_sine_sum_impl(phi, cfg)
    if est > cfg.tail_tol and abs(p) <= SERIES_BAND:
        raise NonConvergenceError(
            f"series route did not converge at phi={p!r} "
            f"(estimated error {est:.3e})",
            best_estimate=(-EULER_GAMMA * p / 2.0 + tail) / math.sin(p),
            est_error=est / abs(math.sin(p)),
        )
    value = (-EULER_GAMMA * p / 2.0 + tail) / math.sin(p)
    return Evaluation(
        phi=phi,
        value=value,
        method=Method.SERIES,
        est_error=est / abs(math.sin(p)),
        work=work,
    )
