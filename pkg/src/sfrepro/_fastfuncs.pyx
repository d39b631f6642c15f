# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the low-level special functions.

Same surface as `_purefuncs`; scalar series loops run in C, and the real
Bessel functions J0/Y0 come from scipy's Cephes bindings.
"""
import numpy as np

cimport numpy as cnp
from libc.math cimport cos, cosh, hypot, sin, sinh
from scipy.special.cython_special cimport j0 as _cephes_j0
from scipy.special.cython_special cimport y0 as _cephes_y0

cnp.import_array()

BACKEND_NAME = "cython"

cdef enum:
    MAX_TERMS = 600


cdef inline double complex _csin(double complex z) noexcept nogil:
    # sin(a+jb) = sin a cosh b + j cos a sinh b; avoids relying on a
    # platform csin
    return sin(z.real) * cosh(z.imag) + 1j * (cos(z.real) * sinh(z.imag))


cdef inline double complex _j0_series(double complex z, double tol) noexcept nogil:
    cdef double complex q = -0.25 * z * z
    cdef double complex term = 1.0
    cdef double complex total = 1.0
    cdef double complex comp = 0.0
    cdef double complex y, s
    cdef int m
    for m in range(1, MAX_TERMS + 1):
        term = term * q / (<double> m * m)
        y = term - comp
        s = total + y
        comp = (s - total) - y
        total = s
        if hypot(term.real, term.imag) <= tol * hypot(total.real, total.imag):
            break
    return total


cdef inline double complex _sph_j0_one(double complex z) noexcept nogil:
    if hypot(z.real, z.imag) < 1e-8:
        return 1.0 - z * z / 6.0
    return _csin(z) / z


def j0_complex(z, double tol=1e-13):
    """Bessel function J0 for complex argument via the ascending series."""
    arr = np.asarray(z, dtype=np.complex128)
    flat = np.ascontiguousarray(arr).ravel()
    out = np.empty(flat.shape[0], dtype=np.complex128)
    cdef double complex[::1] zv = flat
    cdef double complex[::1] ov = out
    cdef Py_ssize_t i, n = zv.shape[0]
    with nogil:
        for i in range(n):
            ov[i] = _j0_series(zv[i], tol)
    return out.reshape(arr.shape)


def sph_j0(z):
    """Spherical Bessel function j0(z) = sin(z)/z for complex z."""
    arr = np.asarray(z, dtype=np.complex128)
    flat = np.ascontiguousarray(arr).ravel()
    out = np.empty(flat.shape[0], dtype=np.complex128)
    cdef double complex[::1] zv = flat
    cdef double complex[::1] ov = out
    cdef Py_ssize_t i, n = zv.shape[0]
    with nogil:
        for i in range(n):
            ov[i] = _sph_j0_one(zv[i])
    return out.reshape(arr.shape)


def hankel2_0(x):
    """Hankel function of the second kind, order 0, for real x > 0."""
    arr = np.asarray(x, dtype=np.float64)
    flat = np.ascontiguousarray(arr).ravel()
    out = np.empty(flat.shape[0], dtype=np.complex128)
    cdef double[::1] xv = flat
    cdef double complex[::1] ov = out
    cdef Py_ssize_t i, n = xv.shape[0]
    with nogil:
        for i in range(n):
            ov[i] = _cephes_j0(xv[i]) - 1j * _cephes_y0(xv[i])
    return out.reshape(arr.shape)
