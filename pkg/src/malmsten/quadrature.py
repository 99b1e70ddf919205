"""Independent quadrature oracle for every integral representation.

Primary scheme: double-exponential (tanh-sinh) quadrature.  The
EXP_SUBSTITUTION route integrates e^{-u} ln u / (1 + 2 e^{-u} cos phi + e^{-2u})
split at u = 1 into a tanh-sinh piece on [0, 1] (ln u endpoint singularity)
and an exp-sinh piece on [1, inf) (exponential decay).  UNIT_DIRECT applies
tanh-sinh straight to ln ln(1/x) on (0, 1) as a structurally different
second oracle.  Node count doubles per level; termination when two
successive levels agree within tolerance, est_error = last inter-level
delta.  Node sums use math.fsum (compensated accumulation).
"""

import enum
import math
from dataclasses import dataclass, replace

from .errors import DomainError

# The integral diverges at |phi| = pi; accuracy claims stop at this band.
GUARD_BAND = 1e-3

_T_MAX = 6.5
_Q_MIN = 1e-280


class Transform(enum.Enum):
    UNIT_DIRECT = "unit"
    EXP_SUBSTITUTION = "exp"
    TAN_FORM = "tan"


@dataclass(frozen=True)
class QuadConfig:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_level: int = 10
    transform: Transform = Transform.EXP_SUBSTITUTION

    def __post_init__(self):
        if not (self.abs_tol > 0.0 and self.rel_tol > 0.0):
            raise ValueError("tolerances must be positive")
        if not 1 <= self.max_level <= 14:
            raise ValueError("max_level must be in [1, 14]")


DEFAULT_CONFIG = QuadConfig()


@dataclass(frozen=True)
class QuadResult:
    value: float
    est_error: float
    nodes: int
    converged: bool


def _refine_levels(node_term, cfg):
    """Shared level driver: trapezoid in t, node doubling per level.

    node_term(t) returns the weighted integrand value at abscissa t, or
    None once the transform has pushed the node past representable range.
    """
    terms = [node_term(0.0)]
    nodes = 1

    def add_strip(h, step_j):
        nonlocal nodes
        scale = max(abs(math.fsum(terms)), 1.0)
        for sign in (1.0, -1.0):
            small = 0
            j = 1
            while j * h <= _T_MAX:
                v = node_term(sign * j * h)
                if v is None:
                    break
                terms.append(v)
                nodes += 1
                if abs(v) <= 1e-20 * scale:
                    small += 1
                    if small >= 2:
                        break
                else:
                    small = 0
                j += step_j

    h = 1.0
    add_strip(h, 1)
    value = h * math.fsum(terms)
    est = math.inf
    for _ in range(cfg.max_level):
        h *= 0.5
        add_strip(h, 2)
        new_value = h * math.fsum(terms)
        est = abs(new_value - value)
        value = new_value
        if est <= max(cfg.abs_tol, cfg.rel_tol * abs(value)):
            # never report below ~1 ulp of the value; deeper refinement can
            # still move the last bit even when the inter-level delta is 0
            est = max(est, 2.3e-16 * max(1.0, abs(value)))
            return QuadResult(value, est, nodes, True)
    return QuadResult(value, est, nodes, False)


def _tanh_sinh(f, a, b, cfg):
    """Tanh-sinh on (a, b); f is called as f(x, dist_a, dist_b)."""
    width = b - a

    def node_term(t):
        g = 0.5 * math.pi * math.sinh(abs(t))
        if g > 320.0:
            return None
        q = math.exp(-2.0 * g)
        if q < _Q_MIN:
            return None
        w = 0.5 * math.pi * math.cosh(t) * 4.0 * q / ((1.0 + q) * (1.0 + q))
        near = width * q / (1.0 + q)
        far = width - near
        if t >= 0.0:
            x, da, db = b - near, far, near
        else:
            x, da, db = a + near, near, far
        return 0.5 * width * w * f(x, da, db)

    return _refine_levels(node_term, cfg)


def _exp_sinh(f, a, cfg):
    """Exp-sinh on (a, inf); f is called as f(x, dist_a, None)."""

    def node_term(t):
        g = 0.5 * math.pi * math.sinh(t)
        if g > 690.0:
            return None
        eg = math.exp(g)
        if eg < _Q_MIN:
            return None
        w = 0.5 * math.pi * math.cosh(t) * eg
        return w * f(a + eg, eg, None)

    return _refine_levels(node_term, cfg)


def _unit_f(phi_val):
    c = math.cos(phi_val)
    s2 = math.sin(phi_val) ** 2
    one_plus_c = 2.0 * math.cos(0.5 * phi_val) ** 2

    def f(x, da, db):
        # ln(1/x) near x = 1 via log1p of the endpoint distance
        inner = -math.log1p(-db) if x > 0.5 else -math.log(da)
        # x + cos(phi) loses digits when cos(phi) ~ -1; regroup via 1 + cos(phi)
        xc = one_plus_c - db if c < -0.5 else x + c
        den = xc * xc + s2
        assert den > 0.0
        return math.log(inner) / den

    return f


def _exp_f(phi_val):
    c = math.cos(phi_val)
    s2 = math.sin(phi_val) ** 2
    one_plus_c = 2.0 * math.cos(0.5 * phi_val) ** 2

    def f(u, da, db):
        e = math.exp(-u)
        ec = math.expm1(-u) + one_plus_c if c < -0.5 else e + c
        den = ec * ec + s2
        assert den > 0.0
        return e * math.log(u) / den

    return f


def integrand_unit(x, phi):
    """ln ln(1/x) / (1 + 2 x cos phi + x^2), pointwise."""
    if not 0.0 < x < 1.0:
        raise DomainError(f"x must lie strictly in (0, 1), got {x!r}")
    return _unit_f(phi.phi)(x, x, 1.0 - x)


def integrand_exp(u, phi):
    """e^{-u} ln u / (1 + 2 e^{-u} cos phi + e^{-2u}), pointwise."""
    if not u > 0.0:
        raise DomainError(f"u must be positive, got {u!r}")
    return _exp_f(phi.phi)(u, u, None)


def _check_guard_band(p):
    if abs(p) > math.pi - GUARD_BAND:
        raise DomainError(
            f"quadrature guard band: |phi| must be <= pi - {GUARD_BAND}, got {p!r}"
        )


def quad_eval(phi, cfg=DEFAULT_CONFIG):
    """I(phi) by the transform selected in cfg."""
    p = phi.phi
    _check_guard_band(p)
    if cfg.transform is Transform.UNIT_DIRECT:
        return _tanh_sinh(_unit_f(p), 0.0, 1.0, cfg)
    if cfg.transform is Transform.TAN_FORM:
        if abs(p - math.pi / 2) > 1e-12:
            raise DomainError("TAN_FORM is only defined at phi = pi/2")
        return quad_tan_form(cfg)
    # split tolerances so the combined estimate still honours the config
    half_cfg = replace(cfg, abs_tol=0.5 * cfg.abs_tol, rel_tol=0.5 * cfg.rel_tol)
    f = _exp_f(p)
    left = _tanh_sinh(f, 0.0, 1.0, half_cfg)
    right = _exp_sinh(f, 1.0, half_cfg)
    return QuadResult(
        value=left.value + right.value,
        est_error=left.est_error + right.est_error,
        nodes=left.nodes + right.nodes,
        converged=left.converged and right.converged,
    )


def _tan_f(y, da, db):
    # da = y - pi/4, db = pi/2 - y; tan(y) = (1 + tan da)/(1 - tan da) = cot(db)
    if da <= math.pi / 8:
        td = math.tan(da)
        lntan = math.log1p(td) - math.log1p(-td)
    else:
        lntan = -math.log(math.tan(db))
    return math.log(lntan)


def integrand_tan(y):
    """ln ln tan y on (pi/4, pi/2), pointwise (zero crossing at y = arctan e)."""
    if not math.pi / 4 < y < math.pi / 2:
        raise DomainError(f"y must lie strictly in (pi/4, pi/2), got {y!r}")
    return _tan_f(y, y - math.pi / 4, math.pi / 2 - y)


def quad_tan_form(cfg=DEFAULT_CONFIG):
    """Vardi's tangent form: integral_{pi/4}^{pi/2} ln ln tan y dy."""
    return _tanh_sinh(_tan_f, math.pi / 4, math.pi / 2, cfg)


def quad_jn(n, cfg=DEFAULT_CONFIG):
    """J_n = integral_0^1 x^n ln ln(1/x) dx, via the e^{-(n+1)u} ln u form."""
    if n < 0:
        raise DomainError("n must be >= 0")
    k = n + 1

    def f(u, da, db):
        return math.exp(-k * u) * math.log(u)

    half_cfg = replace(cfg, abs_tol=0.5 * cfg.abs_tol, rel_tol=0.5 * cfg.rel_tol)
    left = _tanh_sinh(f, 0.0, 1.0, half_cfg)
    right = _exp_sinh(f, 1.0, half_cfg)
    return QuadResult(
        value=left.value + right.value,
        est_error=left.est_error + right.est_error,
        nodes=left.nodes + right.nodes,
        converged=left.converged and right.converged,
    )
