"""Special functions on the complex plane used by the wave and kernel layers.

All routines accept scalars or arrays; scalar input yields a Python complex.
"""
import numpy as np

from . import backend
from .errors import DomainError

#: Largest |z| accepted by bessel_J0_complex. The ascending series converges
#: everywhere, but its partial sums pass through e^{|z|}-scale values, so
#: roundoff eats into the result as |z| grows: measured accuracy is ~1e-13
#: for |z| <= 10, ~1e-9 around 20, and only a couple of digits near the
#: bound. Kernel arguments in this package stay below ~25.
MAX_J0_ARG = 80.0


def _as_complex_array(z):
    arr = np.asarray(z, dtype=np.complex128)
    if arr.size and not np.all(np.isfinite(arr)):
        raise DomainError("non-finite argument")
    return arr


def _scalar_or_array(z, out):
    if out.ndim == 0:
        return complex(out)
    return out


def sph_bessel_j0(z):
    """Spherical Bessel function of order 0, sin(z)/z, for complex z.

    Total on the finite plane; the removable singularity at 0 is replaced by
    the Taylor polynomial 1 - z^2/6 for |z| < 1e-8.
    """
    arr = _as_complex_array(z)
    return _scalar_or_array(z, backend.sph_j0(arr))


def bessel_J0_complex(z, tol=1e-13):
    """Bessel function of the first kind, order 0, for complex z.

    Computed from the ascending power series sum((-z^2/4)^m / (m!)^2) with
    compensated summation, truncated once a term falls below `tol` relative
    to the partial sum. Arguments with |z| > MAX_J0_ARG are rejected.
    """
    arr = _as_complex_array(z)
    if arr.size and float(np.max(np.abs(arr))) > MAX_J0_ARG:
        raise DomainError(f"bessel_J0_complex: |z| exceeds {MAX_J0_ARG}")
    return _scalar_or_array(z, backend.j0_complex(arr, tol))


def hankel2_0(x):
    """Hankel function of the second kind, order 0, for real x > 0.

    Used by the outgoing line-source field; complex arguments never occur
    there, so only the real axis is supported.
    """
    arr = np.asarray(x, dtype=np.float64)
    if arr.size and (not np.all(np.isfinite(arr)) or np.any(arr <= 0.0)):
        raise DomainError("hankel2_0 requires finite x > 0")
    out = backend.hankel2_0(arr)
    if out.ndim == 0:
        return complex(out)
    return out
