"""Backend selection for the summation kernels.

Prefers the compiled Cython extension; falls back to the pure-Python
implementation when the extension is missing or when the environment
variable MALMSTEN_PURE_PYTHON is set (used by the benchmark and tests).
"""

import os

from . import _kernels_py

if os.environ.get("MALMSTEN_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

log_sine_partials = _impl.log_sine_partials
recip_sine_partials = _impl.recip_sine_partials
weighted_average_limit = _impl.weighted_average_limit
