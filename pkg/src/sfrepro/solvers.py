"""Driving-signal solvers for loudspeaker-array field reproduction.

`solve_pm` is plain regularized least squares on the control-point pressures.
The weighted variants replace the discrete mismatch with a regional integral
of the kernel-interpolated error, either sharing one interpolation kernel for
all fields (`solve_wpm_shared`) or using one kernel per source plus one for
the desired field (`solve_wpm_general`). The weight matrices are regional
quadrature sums over interpolation-weight rows.
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np
import scipy.linalg

from .errors import ConfigError, DomainError, SfrError
from .geometry import (
    Medium,
    Region,
    SourceKind,
    SourceModel,
    Wavenumber,
    position,
    position_stack,
)
from .kernels import KernelSpec, weight_rows
from .quadrature import QuadratureSpec, rect_nodes
from .wave import green_point_source, plane_wave

#: Condition ceiling for solving a normal system without ridge loading.
MAX_UNREGULARIZED_COND = 1e12


@dataclass(frozen=True)
class Loudspeaker:
    position: np.ndarray
    model: SourceModel

    def __post_init__(self):
        object.__setattr__(self, "position", position(self.position))


@dataclass(frozen=True)
class Scene:
    """Reproduction geometry: sources around a control region."""

    dimension: int
    medium: Medium
    loudspeakers: Tuple[Loudspeaker, ...]
    control_points: np.ndarray
    region: Region

    def __post_init__(self):
        if self.dimension not in (2, 3):
            raise ConfigError("scene dimension must be 2 or 3")
        object.__setattr__(self, "loudspeakers", tuple(self.loudspeakers))
        if len(self.loudspeakers) < 1:
            raise ConfigError("need at least one loudspeaker")
        pts = position_stack(self.control_points)
        object.__setattr__(self, "control_points", pts)
        if pts.shape[0] < 1:
            raise ConfigError("need at least one control point")
        if pts.shape[1] != self.dimension or self.region.dimension != self.dimension:
            raise ConfigError("scene members disagree about the dimension")
        for spk in self.loudspeakers:
            if spk.position.shape[0] != self.dimension:
                raise ConfigError("loudspeaker dimension mismatch")
            dim = spk.model.dimension
            if dim is not None and dim != self.dimension:
                raise ConfigError("source model dimension mismatch")
        if not bool(np.all(self.region.contains(pts))):
            raise ConfigError("control points must lie inside the region")
        spk_pts = np.stack([s.position for s in self.loudspeakers])
        if bool(np.any(self.region.contains(spk_pts))):
            raise ConfigError("loudspeakers must lie outside the region")

    @property
    def num_sources(self) -> int:
        return len(self.loudspeakers)

    @property
    def num_control_points(self) -> int:
        return int(self.control_points.shape[0])

    def wavenumber(self, omega: float) -> Wavenumber:
        return Wavenumber(omega=omega, k=omega / self.medium.sound_speed)


@dataclass(frozen=True)
class TransferMatrix:
    """Source-to-control-point transfer functions, one column per source."""

    G: np.ndarray
    omega: float


@dataclass(frozen=True)
class WeightMatrix:
    """Regional weighting W for the shared-kernel solver."""

    W: np.ndarray
    quad: QuadratureSpec


@dataclass(frozen=True)
class GeneralWeights:
    """Weight matrices of the per-source-kernel solver."""

    w_gg: np.ndarray
    w_gu: np.ndarray
    quad: QuadratureSpec


@dataclass(frozen=True)
class DriveVector:
    """Per-source complex drive at one frequency."""

    d: np.ndarray
    omega: Optional[float]
    method: str


def _source_field(model: SourceModel, src_pos, k: Wavenumber, pts) -> np.ndarray:
    if model.kind is SourceKind.PLANE_WAVE:
        return plane_wave(k, model.propagation, pts)
    return green_point_source(k, src_pos, pts)


def transfer_block(scene: Scene, omega: float, pts) -> np.ndarray:
    """Transfer functions from every source to an arbitrary point stack."""
    k = scene.wavenumber(omega)
    stack = position_stack(pts)
    cols = [
        _source_field(s.model, s.position, k, stack) for s in scene.loudspeakers
    ]
    return np.stack(cols, axis=1)


def build_transfer_matrix(scene: Scene, omega: float) -> TransferMatrix:
    """Transfer matrix at the scene's control points."""
    return TransferMatrix(G=transfer_block(scene, omega, scene.control_points), omega=omega)


def _as_array(mat, attr: str) -> np.ndarray:
    value = getattr(mat, attr, mat)
    return np.asarray(value, dtype=np.complex128)


def _solve_normal(a: np.ndarray, b: np.ndarray, eta: float, method: str,
                  omega: Optional[float]) -> DriveVector:
    """Solve the Hermitian system a d = b with a residual check."""
    if not (eta >= 0.0):
        raise DomainError("eta must be nonnegative")
    if eta == 0.0:
        cond = np.linalg.cond(a)
        if not (cond < MAX_UNREGULARIZED_COND):
            raise DomainError(
                f"normal system too ill-conditioned for eta=0 (cond ~ {cond:.3e})"
            )
    try:
        chol = scipy.linalg.cho_factor(a, check_finite=False)

        def _solve(rhs):
            return scipy.linalg.cho_solve(chol, rhs, check_finite=False)
    except scipy.linalg.LinAlgError:
        def _solve(rhs):
            return scipy.linalg.solve(a, rhs, assume_a="her", check_finite=False)
    d = _solve(b)
    b_norm = float(np.linalg.norm(b))
    resid = b - a @ d
    if np.linalg.norm(resid) > 1e-12 * b_norm:
        d = d + _solve(resid)
        resid = b - a @ d
    if b_norm > 0.0 and np.linalg.norm(resid) > 1e-10 * b_norm:
        raise SfrError("drive solve residual above 1e-10 of the data norm")
    return DriveVector(d=d, omega=omega, method=method)


def solve_pm(G: Union[TransferMatrix, np.ndarray], u_des, eta: float) -> DriveVector:
    """Pressure matching: d = (G^H G + eta I)^{-1} G^H u_des."""
    g = _as_array(G, "G")
    u = np.asarray(u_des, dtype=np.complex128)
    a = g.conj().T @ g + eta * np.eye(g.shape[1])
    b = g.conj().T @ u
    return _solve_normal(a, b, eta, "pm", getattr(G, "omega", None))


def build_weight_shared(spec: KernelSpec, k: Wavenumber, control_points,
                        lam: float, region: Region,
                        quad: QuadratureSpec) -> WeightMatrix:
    """Regional weight W = integral of z(r)* z(r)^T over the region.

    z(r) are the interpolation-weight rows for the control points; the
    integral is the tensor quadrature from `quad`. W is Hermitian PSD up to
    quadrature truncation and is symmetrized exactly before returning.
    """
    nodes, wts = rect_nodes(region, quad)
    z = weight_rows(spec, k, control_points, lam, nodes)
    w = (z.conj().T * wts) @ z
    w = 0.5 * (w + w.conj().T)
    return WeightMatrix(W=w, quad=quad)


def build_weights_general(specs: Sequence[KernelSpec], spec_des: KernelSpec,
                          k: Wavenumber, control_points, lam: float,
                          region: Region, quad: QuadratureSpec,
                          transfer: Union[TransferMatrix, np.ndarray]) -> GeneralWeights:
    """Weight matrices with one interpolation kernel per source.

    Each source's field is interpolated from its control-point values with
    its own kernel, g_hat_l(r) = z_l(r)^T g_l, and the desired field with
    `spec_des`. Returns W_gg (source-by-source regional Gram of the g_hat
    fields) and W_gu (regional cross weights applied to the desired
    pressures).
    """
    g = _as_array(transfer, "G")
    pts = position_stack(control_points)
    if len(specs) != g.shape[1]:
        raise ConfigError("need exactly one kernel spec per source")
    if g.shape[0] != pts.shape[0]:
        raise ConfigError("transfer matrix rows must match control points")
    nodes, wts = rect_nodes(region, quad)
    ghat = np.empty((nodes.shape[0], g.shape[1]), dtype=np.complex128)
    for col, spec in enumerate(specs):
        z = weight_rows(spec, k, pts, lam, nodes)
        ghat[:, col] = z @ g[:, col]
    z_des = weight_rows(spec_des, k, pts, lam, nodes)
    w_gg = (ghat.conj().T * wts) @ ghat
    w_gg = 0.5 * (w_gg + w_gg.conj().T)
    w_gu = (ghat.conj().T * wts) @ z_des
    return GeneralWeights(w_gg=w_gg, w_gu=w_gu, quad=quad)


def solve_wpm_shared(G: Union[TransferMatrix, np.ndarray],
                     W: Union[WeightMatrix, np.ndarray], u_des,
                     eta: float) -> DriveVector:
    """Weighted pressure matching, shared kernel:
    d = (G^H W G + eta I)^{-1} G^H W u_des."""
    g = _as_array(G, "G")
    w = _as_array(W, "W")
    u = np.asarray(u_des, dtype=np.complex128)
    gw = g.conj().T @ w
    a = gw @ g + eta * np.eye(g.shape[1])
    b = gw @ u
    return _solve_normal(a, b, eta, "wpm", getattr(G, "omega", None))


def solve_wpm_general(w_gg: Union[GeneralWeights, np.ndarray], w_gu, u_des,
                      eta: float, omega: Optional[float] = None) -> DriveVector:
    """Weighted pressure matching, per-source kernels:
    d = (W_gg + eta I)^{-1} W_gu u_des.

    The first argument may be a `GeneralWeights` bundle, in which case
    `w_gu` is taken from it and the second argument is ignored if None.
    """
    if isinstance(w_gg, GeneralWeights):
        if w_gu is None:
            w_gu = w_gg.w_gu
        w_gg = w_gg.w_gg
    gg = np.asarray(w_gg, dtype=np.complex128)
    a = gg + eta * np.eye(gg.shape[0])
    b = np.asarray(w_gu, dtype=np.complex128) @ np.asarray(u_des, dtype=np.complex128)
    return _solve_normal(a, b, eta, "wpm_general", omega)


def synthesize_field(scene: Scene, drive: DriveVector, eval_points) -> np.ndarray:
    """Superpose the source fields scaled by the drive vector."""
    if drive.omega is None:
        raise DomainError("drive vector carries no frequency")
    if drive.d.shape[0] != scene.num_sources:
        raise DomainError("drive length does not match source count")
    block = transfer_block(scene, drive.omega, eval_points)
    return block @ drive.d
