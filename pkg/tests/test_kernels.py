"""Tests for the summation kernels: pure-Python / compiled parity, the
phase-weighted averaging on sums with known limits, and backend selection."""

import cmath
import math
import os
import subprocess
import sys

import pytest

from malmsten import _kernels_py
from malmsten.acceleration import accelerated_limit, effective_depth
from malmsten.kernels import BACKEND

try:
    from malmsten import _kernels_cy
except ImportError:
    _kernels_cy = None

needs_extension = pytest.mark.skipif(
    _kernels_cy is None, reason="compiled extension not built"
)


def test_backend_name():
    assert BACKEND in ("python", "cython")


@needs_extension
@pytest.mark.parametrize("theta", [0.5, math.pi / 2 + math.pi, 2.9 + math.pi])
def test_backend_parity_log_sine(theta):
    a = _kernels_py.log_sine_partials(theta, 5000, 40)
    b = _kernels_cy.log_sine_partials(theta, 5000, 40)
    assert len(a) == len(b) == 40
    assert max(abs(x - y) for x, y in zip(a, b)) <= 1e-12


@needs_extension
def test_backend_parity_recip_sine():
    theta = 1.1 + math.pi
    a = _kernels_py.recip_sine_partials(theta, 3000, 30)
    b = _kernels_cy.recip_sine_partials(theta, 3000, 30)
    assert max(abs(x - y) for x, y in zip(a, b)) <= 1e-12


@needs_extension
def test_backend_parity_averaging():
    theta = 2.0 + math.pi
    z = cmath.exp(1j * theta)
    partials = _kernels_py.log_sine_partials(theta, 2000, 40)
    va, ea = _kernels_py.weighted_average_limit(partials, z, 16)
    vb, eb = _kernels_cy.weighted_average_limit(partials, z, 16)
    assert abs(va - vb) <= 1e-13
    assert abs(ea - eb) <= 1e-13


def test_averaging_alternating_harmonic():
    # sum (-1)^{n+1}/n = ln 2; oscillation factor z = -1 recovers the
    # classic Euler averaging
    partials = []
    s = 0.0
    for n in range(1, 201):
        s += (-1.0) ** (n + 1) / n
        partials.append(complex(s, 0.0))
    value, est = _kernels_py.weighted_average_limit(partials[-40:], -1.0 + 0.0j, 12)
    assert abs(value.real - math.log(2.0)) <= 1e-12
    assert abs(value.imag) <= 1e-15


def test_raw_partial_sums_converge_slowly():
    # the raw 200-term partial sum of the same series is off by ~1/400
    partials = []
    s = 0.0
    for n in range(1, 201):
        s += (-1.0) ** (n + 1) / n
        partials.append(complex(s, 0.0))
    assert abs(partials[-1].real - math.log(2.0)) > 1e-3


def test_effective_depth_caps_near_unit_gap():
    # as z -> 1 the averaging amplifies noise and the depth must collapse
    deep = effective_depth(cmath.exp(1j * (math.pi / 2)), 16, 100)
    shallow = effective_depth(cmath.exp(1j * 0.01), 16, 100)
    assert deep == 16
    assert shallow < 4
    assert effective_depth(1.0 + 0.0j, 16, 100) == 1


def test_accelerated_limit_reports_wider_error_near_gap():
    theta = 0.05  # z close to 1: little acceleration is possible
    partials = _kernels_py.log_sine_partials(theta, 2000, 40)
    _, est_narrow, depth = accelerated_limit(partials, cmath.exp(1j * theta), 16)
    assert depth < 16
    assert est_narrow > 1e-10


def test_pure_python_env_override():
    code = "import malmsten; print(malmsten.BACKEND)"
    env = dict(os.environ, MALMSTEN_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.returncode == 0
    assert out.stdout.strip() == "python"


def test_window_semantics():
    full = _kernels_py.log_sine_partials(1.0, 50, 49)
    tail = _kernels_py.log_sine_partials(1.0, 50, 5)
    assert tail == full[-5:]
    single = _kernels_py.log_sine_partials(1.0, 50, 1)
    assert single == [full[-1]]
