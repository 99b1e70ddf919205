"""Domain types: evaluation angles and tagged numeric results."""

import enum
import math
from dataclasses import dataclass

from .errors import DomainError

# Below this |phi| the generic closed form loses ~6 digits to cancellation
# in sin(phi); such angles are classified ZERO and served by zero_limit.
ZERO_THRESHOLD = 1e-6


class Classification(enum.Enum):
    ZERO = "zero"
    REGULAR = "regular"


class Method(enum.Enum):
    CLOSED = "closed"
    SERIES = "series"
    QUAD_UNIT = "quad_unit"
    QUAD_EXP = "quad_exp"
    QUAD_TAN = "quad_tan"
    KUMMER = "kummer"


@dataclass(frozen=True)
class Angle:
    """An evaluation point phi, strictly inside the open interval (-pi, pi)."""

    phi: float

    def __post_init__(self):
        if not abs(self.phi) < math.pi:
            raise DomainError(
                f"phi must lie strictly in (-pi, pi), got {self.phi!r}"
            )

    @property
    def classification(self):
        if abs(self.phi) < ZERO_THRESHOLD:
            return Classification.ZERO
        return Classification.REGULAR

    @property
    def is_zero(self):
        return self.classification is Classification.ZERO


@dataclass(frozen=True)
class Evaluation:
    """One numeric result: value, method tag, error estimate, work count."""

    phi: Angle
    value: float
    method: Method
    est_error: float
    work: int

    def __post_init__(self):
        if self.est_error < 0.0:
            raise ValueError("est_error must be nonnegative")
        if self.work < 1:
            raise ValueError("work must be >= 1")
        if self.method is Method.QUAD_TAN and abs(self.phi.phi - math.pi / 2) > 1e-12:
            raise ValueError("QUAD_TAN evaluations are only defined at phi = pi/2")
