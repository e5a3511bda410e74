"""Kernel backend selection.

The compiled (numba) kernels are used when numba imports and the
environment variable ``SELFOVERLAP_NO_NUMBA`` is unset or ``0``; otherwise
the vectorized numpy kernels are used.  Both expose the same functions.
"""

import logging
import os
from types import ModuleType

from . import _numpy_kernels

log = logging.getLogger(__name__)

ENV_FLAG = "SELFOVERLAP_NO_NUMBA"

try:
    from . import _numba_kernels
except ImportError:  # pragma: no cover
    _numba_kernels = None

BACKENDS = {"numpy": _numpy_kernels}
if _numba_kernels is not None:
    BACKENDS["numba"] = _numba_kernels


def default_backend_name() -> str:
    disabled = os.environ.get(ENV_FLAG, "").strip().lower() not in ("", "0", "false", "no")
    if disabled or "numba" not in BACKENDS:
        return "numpy"
    return "numba"


def get_backend(name: str | None = None) -> ModuleType:
    name = name or default_backend_name()
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable backend {name!r}; have {sorted(BACKENDS)}") from None
