"""NumPy implementations of the low-level special functions.

This is the fallback backend used when the compiled extension is not
available. Both backends expose the same callables with identical semantics;
`backend` picks one at import time.
"""
import numpy as np
import scipy.special as _sp

BACKEND_NAME = "python"

# Generous bound: at |z| = 80 the series needs about 140 terms.
_MAX_TERMS = 600


def j0_complex(z, tol=1e-13):
    """Bessel function J0 for complex argument via the ascending series.

    Terms are accumulated with compensated (Kahan) summation and the series
    stops once the latest term drops below `tol` relative to the running sum.
    The series converges for every z, but its partial sums grow roughly like
    e^{|z|}, so the caller is responsible for restricting |z| to a range where
    double precision still holds meaningful digits.
    """
    arr = np.asarray(z, dtype=np.complex128)
    q = (-0.25 * arr * arr).ravel()
    term = np.ones_like(q)
    total = np.ones_like(q)
    comp = np.zeros_like(q)
    for m in range(1, _MAX_TERMS + 1):
        term = term * q / (m * m)
        y = term - comp
        s = total + y
        comp = (s - total) - y
        total = s
        done = np.abs(term) <= tol * np.abs(total)
        if done.all():
            break
        # freeze converged lanes so late huge terms of other lanes
        # cannot resurrect them
        term = np.where(done, 0.0, term)
    return total.reshape(arr.shape)


def sph_j0(z):
    """Spherical Bessel function j0(z) = sin(z)/z for complex z.

    Near the removable singularity (|z| < 1e-8) the two-term Taylor
    polynomial 1 - z^2/6 is used; the truncation error there is ~1e-34.
    """
    arr = np.asarray(z, dtype=np.complex128)
    flat = arr.ravel()
    out = np.empty_like(flat)
    small = np.abs(flat) < 1e-8
    out[small] = 1.0 - flat[small] * flat[small] / 6.0
    big = ~small
    out[big] = np.sin(flat[big]) / flat[big]
    return out.reshape(arr.shape)


def hankel2_0(x):
    """Hankel function of the second kind, order 0, for real x > 0."""
    arr = np.asarray(x, dtype=np.float64)
    return _sp.j0(arr) - 1j * _sp.y0(arr)
