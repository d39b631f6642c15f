"""Elementary free-field wave solutions: plane waves and point sources.

All fields share the e^{+j omega t} time convention, so outgoing waves carry
e^{-jk r} phase and the 2D line source uses the Hankel function of the
second kind.
"""
import numpy as np

from . import special
from .errors import DomainError
from .geometry import Wavenumber, direction, position, position_stack

#: Observation distances below this are rejected as coincident with the
#: source rather than clamped; a clamp would hide geometry bugs.
SINGULARITY_LIMIT = 1e-9


def _collapse(r, out):
    # single position in -> scalar out
    if np.asarray(r).ndim == 1:
        return complex(out[0])
    return out


def plane_wave(k: Wavenumber, prop_dir, r):
    """Unit-amplitude plane wave propagating along `prop_dir`.

    For an arrival direction xi the wave vector is -k*xi, and a wave
    propagating along d_p arrives from xi = -d_p, so the pressure at r is
    exp(-j * k * d_p . r). `r` may be one position or an (n, dim) stack.
    """
    d = direction(prop_dir)
    pts = position_stack(r)
    if pts.shape[1] != d.shape[0]:
        raise DomainError("dimension mismatch between direction and positions")
    out = np.exp(-1j * k.k * (pts @ d))
    return _collapse(r, out)


def green_point_source(k: Wavenumber, src, r):
    """Field of a unit point source at `src` observed at `r`.

    The dimension of the coordinates picks the formula: 2D gives the line
    source (-j/4) H0^(2)(k d), 3D the spherical wave e^{-jkd} / (4 pi d).
    """
    s = position(src)
    pts = position_stack(r)
    if pts.shape[1] != s.shape[0]:
        raise DomainError("dimension mismatch between source and positions")
    dist = np.linalg.norm(pts - s[None, :], axis=1)
    if np.any(dist < SINGULARITY_LIMIT):
        raise DomainError(
            f"observation point within {SINGULARITY_LIMIT} m of the source"
        )
    if s.shape[0] == 2:
        out = -0.25j * special.hankel2_0(k.k * dist)
    else:
        out = np.exp(-1j * k.k * dist) / (4.0 * np.pi * dist)
    return _collapse(r, out)
