import numpy as np
import pytest

from sfrepro.errors import ConfigError, DomainError
from sfrepro.geometry import (
    Medium,
    Region,
    SourceKind,
    SourceModel,
    Wavenumber,
)
from sfrepro.kernels import KernelSpec
from sfrepro.quadrature import QuadratureSpec
from sfrepro.solvers import (
    DriveVector,
    Loudspeaker,
    Scene,
    build_transfer_matrix,
    build_weight_shared,
    build_weights_general,
    solve_pm,
    solve_wpm_general,
    solve_wpm_shared,
    synthesize_field,
    transfer_block,
)
from sfrepro.wave import green_point_source, plane_wave

OMEGA_450 = 2.0 * np.pi * 450.0
UNIFORM = KernelSpec(2, "uniform")


def mono(dim):
    return SourceModel(kind=SourceKind[f"POINT_SOURCE_{dim}D"])


def tiny_scene_2d(edge=1.0, control=None):
    if control is None:
        control = np.zeros((1, 2))
    return Scene(
        dimension=2,
        medium=Medium(),
        loudspeakers=(Loudspeaker(np.array([1.5, 0.0]), mono(2)),),
        control_points=control,
        region=Region(np.zeros(2), np.array([edge, edge])),
    )


def cell_centered_grid(n, side=1.0):
    step = side / n
    axis = -side / 2 + step * (np.arange(n) + 0.5)
    gx, gy = np.meshgrid(axis, axis, indexing="ij")
    return np.stack([gx.ravel(), gy.ravel()], axis=1)


def test_transfer_entries_are_point_source_fields():
    scene = Scene(
        dimension=3,
        medium=Medium(),
        loudspeakers=(Loudspeaker(np.array([2.0, 0.0, 0.0]), mono(3)),),
        control_points=np.zeros((1, 3)),
        region=Region(np.zeros(3), np.full(3, 0.5)),
    )
    tm = build_transfer_matrix(scene, OMEGA_450)
    k = scene.wavenumber(OMEGA_450)
    expect = green_point_source(k, np.array([2.0, 0.0, 0.0]), np.zeros(3))
    assert tm.G[0, 0] == expect
    assert abs(tm.G[0, 0]) == pytest.approx(1.0 / (4.0 * np.pi * 2.0), rel=1e-13)


def test_preset_transfer_shape_and_finiteness(preset_scene):
    tm = build_transfer_matrix(preset_scene, OMEGA_450)
    assert tm.G.shape == (16, 12)
    assert np.all(np.isfinite(tm.G))
    assert tm.omega == OMEGA_450


def test_transfer_unchanged_under_rigid_translation(preset_scene):
    shift = np.array([0.31, -0.12])
    moved = Scene(
        dimension=2,
        medium=preset_scene.medium,
        loudspeakers=tuple(
            Loudspeaker(s.position + shift, s.model) for s in preset_scene.loudspeakers
        ),
        control_points=preset_scene.control_points + shift,
        region=Region(
            preset_scene.region.center + shift, preset_scene.region.edge_lengths
        ),
    )
    g0 = build_transfer_matrix(preset_scene, OMEGA_450).G
    g1 = build_transfer_matrix(moved, OMEGA_450).G
    # distances only move by floating point roundoff
    assert np.allclose(g1, g0, rtol=1e-12, atol=0.0)


def test_pm_zero_data_gives_zero_drive(preset_scene):
    tm = build_transfer_matrix(preset_scene, OMEGA_450)
    d = solve_pm(tm, np.zeros(16), 1e-6)
    assert np.all(d.d == 0)
    assert d.method == "pm"
    assert d.omega == OMEGA_450


def test_pm_identity_transfer_recovers_data(rng):
    u = rng.normal(size=6) + 1j * rng.normal(size=6)
    d = solve_pm(np.eye(6), u, 0.0)
    assert np.allclose(d.d, u, rtol=1e-13, atol=1e-15)


def test_pm_rejects_singular_system_without_ridge():
    g = np.ones((4, 3), dtype=complex)  # rank one
    with pytest.raises(DomainError):
        solve_pm(g, np.ones(4), 0.0)


def test_pm_rejects_negative_ridge(preset_scene):
    tm = build_transfer_matrix(preset_scene, OMEGA_450)
    with pytest.raises(DomainError):
        solve_pm(tm, np.ones(16), -1e-9)


def test_identity_weight_reduces_weighted_solver_to_pm(preset_scene, preset_desired):
    tm = build_transfer_matrix(preset_scene, OMEGA_450)
    k = preset_scene.wavenumber(OMEGA_450)
    u = preset_desired.pressures(k, preset_scene.control_points)
    d_pm = solve_pm(tm, u, 1e-6).d
    d_w = solve_wpm_shared(tm, np.eye(16), u, 1e-6).d
    assert np.linalg.norm(d_w - d_pm) <= 1e-10 * np.linalg.norm(d_pm)


def test_general_solver_matches_shared_when_kernels_coincide(
    preset_scene, preset_desired
):
    tm = build_transfer_matrix(preset_scene, OMEGA_450)
    k = preset_scene.wavenumber(OMEGA_450)
    u = preset_desired.pressures(k, preset_scene.control_points)
    quad = QuadratureSpec("gauss", 30)
    lam, eta = 1e-6, 1e-6

    wm = build_weight_shared(
        UNIFORM, k, preset_scene.control_points, lam, preset_scene.region, quad
    )
    d_shared = solve_wpm_shared(tm, wm, u, eta).d

    specs = [UNIFORM] * preset_scene.num_sources
    gw = build_weights_general(
        specs, UNIFORM, k, preset_scene.control_points, lam,
        preset_scene.region, quad, tm,
    )
    d_general = solve_wpm_general(gw, None, u, eta).d
    assert np.linalg.norm(d_general - d_shared) <= 1e-8 * np.linalg.norm(d_shared)


def test_single_source_weights_collapse_on_a_tiny_region():
    # region so small that the interpolant is constant across it
    scene = tiny_scene_2d(edge=0.01)
    tm = build_transfer_matrix(scene, OMEGA_450)
    g = tm.G[0, 0]
    k = scene.wavenumber(OMEGA_450)
    quad = QuadratureSpec("gauss", 8)
    gw = build_weights_general(
        [UNIFORM], UNIFORM, k, scene.control_points, 0.0,
        scene.region, quad, tm,
    )
    area = scene.region.measure
    assert gw.w_gg[0, 0] == pytest.approx(area * abs(g) ** 2, rel=1e-3)
    assert gw.w_gu[0, 0] == pytest.approx(area * np.conj(g), rel=1e-3)


def test_weight_is_scaled_identity_on_matching_cell_quadrature(preset_scene):
    # control points at the cell centers of the 4x4 midpoint rule make every
    # interpolation row a basis vector, so W collapses to area/N * I
    control = cell_centered_grid(4)
    scene = Scene(
        dimension=2,
        medium=preset_scene.medium,
        loudspeakers=preset_scene.loudspeakers,
        control_points=control,
        region=preset_scene.region,
    )
    k = scene.wavenumber(OMEGA_450)
    wm = build_weight_shared(
        UNIFORM, k, control, 0.0, scene.region, QuadratureSpec("midpoint", 4)
    )
    assert np.max(np.abs(wm.W - np.eye(16) / 16.0)) < 1e-9

    tm = build_transfer_matrix(scene, OMEGA_450)
    u = plane_wave(k, np.array([np.cos(0.7), np.sin(0.7)]), control)
    eta = 1e-6
    d_w = solve_wpm_shared(tm, wm, u, eta).d
    d_pm = solve_pm(tm, u, 16.0 * eta).d  # W = I/16 folds into the ridge
    assert np.linalg.norm(d_w - d_pm) <= 1e-10 * np.linalg.norm(d_pm)


def test_solvers_commute_with_conjugation(preset_scene, preset_desired):
    tm = build_transfer_matrix(preset_scene, OMEGA_450)
    k = preset_scene.wavenumber(OMEGA_450)
    u = preset_desired.pressures(k, preset_scene.control_points)
    d = solve_pm(tm, u, 1e-6).d
    d_conj = solve_pm(np.conj(tm.G), np.conj(u), 1e-6).d
    assert np.allclose(d_conj, np.conj(d), rtol=1e-13, atol=1e-18)


def test_weight_matrices_are_hermitian_psd(preset_scene, rng):
    k = preset_scene.wavenumber(OMEGA_450)
    quad = QuadratureSpec("gauss", 30)
    wm = build_weight_shared(
        UNIFORM, k, preset_scene.control_points, 1e-6, preset_scene.region, quad
    )
    assert np.array_equal(wm.W, wm.W.conj().T)
    tm = build_transfer_matrix(preset_scene, OMEGA_450)
    gw = build_weights_general(
        [UNIFORM] * 12, UNIFORM, k, preset_scene.control_points, 1e-6,
        preset_scene.region, quad, tm,
    )
    assert np.array_equal(gw.w_gg, gw.w_gg.conj().T)
    tr_w = np.trace(wm.W).real
    tr_gg = np.trace(gw.w_gg).real
    for _ in range(20):
        v = rng.normal(size=16) + 1j * rng.normal(size=16)
        q = np.real(v.conj() @ wm.W @ v)
        assert q >= -1e-10 * tr_w * (v.conj() @ v).real
        w = rng.normal(size=12) + 1j * rng.normal(size=12)
        q2 = np.real(w.conj() @ gw.w_gg @ w)
        assert q2 >= -1e-10 * tr_gg * (w.conj() @ w).real


def test_build_weights_general_validates_spec_count(preset_scene):
    k = preset_scene.wavenumber(OMEGA_450)
    tm = build_transfer_matrix(preset_scene, OMEGA_450)
    with pytest.raises(ConfigError):
        build_weights_general(
            [UNIFORM] * 5, UNIFORM, k, preset_scene.control_points, 1e-6,
            preset_scene.region, QuadratureSpec("gauss", 8), tm,
        )


def test_synthesized_field_is_linear_in_the_drive(preset_scene, rng):
    pts = rng.uniform(-0.4, 0.4, (30, 2))
    d1 = rng.normal(size=12) + 1j * rng.normal(size=12)
    d2 = rng.normal(size=12) + 1j * rng.normal(size=12)
    f1 = synthesize_field(preset_scene, DriveVector(d1, OMEGA_450, "x"), pts)
    f2 = synthesize_field(preset_scene, DriveVector(d2, OMEGA_450, "x"), pts)
    f12 = synthesize_field(preset_scene, DriveVector(d1 + d2, OMEGA_450, "x"), pts)
    assert np.allclose(f12, f1 + f2, rtol=1e-12, atol=1e-15)

    zero = synthesize_field(
        preset_scene, DriveVector(np.zeros(12, complex), OMEGA_450, "x"), pts
    )
    assert np.all(zero == 0)


def test_single_source_drive_reproduces_transfer_column(preset_scene, rng):
    pts = rng.uniform(-0.4, 0.4, (10, 2))
    block = transfer_block(preset_scene, OMEGA_450, pts)
    e3 = np.zeros(12, complex)
    e3[3] = 1.0
    field = synthesize_field(preset_scene, DriveVector(e3, OMEGA_450, "x"), pts)
    assert np.array_equal(field, block[:, 3])


def test_synthesize_guards(preset_scene):
    with pytest.raises(DomainError):
        synthesize_field(
            preset_scene, DriveVector(np.zeros(12, complex), None, "x"), np.zeros(2)
        )
    with pytest.raises(DomainError):
        synthesize_field(
            preset_scene, DriveVector(np.zeros(5, complex), OMEGA_450, "x"), np.zeros(2)
        )


def test_scene_validation():
    with pytest.raises(ConfigError):
        tiny_scene_2d(control=np.array([[2.0, 2.0]]))  # outside the region
    with pytest.raises(ConfigError):
        Scene(
            dimension=2,
            medium=Medium(),
            loudspeakers=(Loudspeaker(np.array([0.1, 0.1]), mono(2)),),
            control_points=np.zeros((1, 2)),
            region=Region(np.zeros(2), np.ones(2)),
        )  # speaker inside the region
    with pytest.raises(ConfigError):
        Scene(
            dimension=3,
            medium=Medium(),
            loudspeakers=(Loudspeaker(np.array([1.5, 0.0]), mono(2)),),
            control_points=np.zeros((1, 2)),
            region=Region(np.zeros(2), np.ones(2)),
        )  # dimension mismatch
    with pytest.raises(ConfigError):
        Scene(
            dimension=2,
            medium=Medium(),
            loudspeakers=(),
            control_points=np.zeros((1, 2)),
            region=Region(np.zeros(2), np.ones(2)),
        )
