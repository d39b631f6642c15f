"""Plane-wave and point-source field checks."""
import math

import numpy as np
import pytest

from sfrepro.errors import DomainError
from sfrepro.geometry import Medium, Wavenumber
from sfrepro.wave import green_point_source, plane_wave

# exp(-j * (2 pi 450/343) * 0.1 * cos(pi/4)), mpmath at 30 digits
PW_450_RE = 0.83487783762758687076690439167
PW_450_IM = -0.550435278882344797163109010569

# (-j/4) (J0(1) - j Y0(1)), mpmath at 30 digits
G2D_KD1_RE = -0.0220642410539192394957316915059
G2D_KD1_IM = -0.191299421639491637862429381526

K450 = Wavenumber.from_frequency(450.0, Medium())


def test_plane_wave_unity_at_origin():
    d = np.array([math.cos(0.3), math.sin(0.3)])
    assert plane_wave(K450, d, np.zeros(2)) == 1.0 + 0.0j


def test_plane_wave_matches_hand_computed_phase():
    d = np.array([math.cos(math.pi / 4), math.sin(math.pi / 4)])
    got = plane_wave(K450, d, np.array([0.1, 0.0]))
    assert got.real == pytest.approx(PW_450_RE, rel=1e-14)
    assert got.imag == pytest.approx(PW_450_IM, rel=1e-14)


def test_plane_wave_has_unit_magnitude(rng):
    d = rng.normal(size=3)
    d /= np.linalg.norm(d)
    pts = rng.uniform(-5, 5, (40, 3))
    assert np.allclose(np.abs(plane_wave(K450, d, pts)), 1.0, atol=1e-14)


def test_plane_wave_constant_on_wavefronts():
    d = np.array([1.0, 0.0])
    r1 = np.array([0.2, -0.7])
    r2 = r1 + np.array([0.0, 1.3])  # offset orthogonal to propagation
    assert plane_wave(K450, d, r1) == plane_wave(K450, d, r2)


def test_plane_wave_rejects_mismatched_dimensions():
    with pytest.raises(DomainError):
        plane_wave(K450, np.array([1.0, 0.0]), np.zeros(3))
    with pytest.raises(DomainError):
        plane_wave(K450, np.array([2.0, 0.0]), np.zeros(2))  # not unit length


def test_green_3d_at_full_period_distance():
    k = Wavenumber(omega=2 * math.pi * 343.0, k=2 * math.pi)
    got = green_point_source(k, np.zeros(3), np.array([1.0, 0.0, 0.0]))
    assert got == pytest.approx(1.0 / (4 * math.pi), rel=1e-14)
    assert abs(got.imag) < 1e-15


def test_green_2d_reference_value():
    k = Wavenumber(omega=343.0, k=1.0)
    got = green_point_source(k, np.zeros(2), np.array([1.0, 0.0]))
    assert got.real == pytest.approx(G2D_KD1_RE, rel=1e-13)
    assert got.imag == pytest.approx(G2D_KD1_IM, rel=1e-13)


def test_green_2d_amplitude_decays_beyond_kd_one():
    k = Wavenumber(omega=343.0, k=1.0)
    dists = np.linspace(1.1, 6.0, 10)
    mags = [
        abs(green_point_source(k, np.zeros(2), np.array([d, 0.0])))
        for d in dists
    ]
    assert all(b < a for a, b in zip(mags, mags[1:]))


def test_green_reciprocity_is_exact(rng):
    for dim in (2, 3):
        a = rng.uniform(-2, 2, dim)
        b = rng.uniform(-2, 2, dim)
        assert green_point_source(K450, a, b) == green_point_source(K450, b, a)


def test_green_rejects_coincident_points():
    p = np.array([0.3, 0.4])
    with pytest.raises(DomainError):
        green_point_source(K450, p, p + 1e-12)


def test_green_accepts_point_stacks():
    pts = np.array([[1.0, 0.0], [0.0, 2.0], [1.0, 1.0]])
    out = green_point_source(K450, np.zeros(2), pts)
    assert out.shape == (3,)
    assert np.all(np.isfinite(out))
