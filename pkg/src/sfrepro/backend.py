"""Selects the compiled or NumPy special-function backend at import time.

The environment variable SFR_BACKEND controls the choice:

* ``auto`` (default): compiled extension when importable, NumPy otherwise
* ``cython``: compiled extension, error if missing
* ``python``: NumPy fallback
"""
import os

from . import _purefuncs
from .errors import ConfigError

_requested = os.environ.get("SFR_BACKEND", "auto").strip().lower()
if _requested not in ("auto", "cython", "python"):
    raise ConfigError(
        f"SFR_BACKEND={_requested!r} not recognized; use auto, cython or python"
    )

if _requested == "python":
    _impl = _purefuncs
else:
    try:
        from . import _fastfuncs as _impl
    except ImportError as exc:
        if _requested == "cython":
            raise ConfigError(
                "SFR_BACKEND=cython but the compiled extension is not importable"
            ) from exc
        _impl = _purefuncs

BACKEND_NAME: str = _impl.BACKEND_NAME
j0_complex = _impl.j0_complex
sph_j0 = _impl.sph_j0
hankel2_0 = _impl.hankel2_0
