"""Dense-grid evaluation, the SDR metric, and frequency sweeps."""
import math
import os
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import ConfigError, DomainError
from .geometry import Region, Wavenumber, direction, position, unit_toward
from .kernels import KernelSpec
from .quadrature import QuadratureSpec
from .solvers import (
    DriveVector,
    Scene,
    build_transfer_matrix,
    build_weight_shared,
    build_weights_general,
    solve_pm,
    solve_wpm_general,
    solve_wpm_shared,
    transfer_block,
)
from .wave import green_point_source, plane_wave

_NAME_RE = re.compile(r"^[A-Za-z0-9_-]+$")


@dataclass(frozen=True)
class EvalGrid:
    """Cell-centered rectangular grid covering a region.

    Points are row-major over the axes (last axis fastest); `shape` gives the
    per-axis counts. The first point sits half a step inside the region
    corner, so no point touches the boundary.
    """

    region: Region
    spacing: float
    shape: Tuple[int, ...]
    axes: Tuple[np.ndarray, ...]
    points: np.ndarray


def make_eval_grid(region: Region, spacing: float = 0.01) -> EvalGrid:
    if not (spacing > 0.0):
        raise ConfigError("grid spacing must be positive")
    axes = []
    shape = []
    for lo, edge in zip(region.lower, region.edge_lengths):
        n = int(round(float(edge) / spacing))
        if n < 1:
            raise ConfigError("grid spacing larger than the region")
        # the step follows the region edge exactly; it equals `spacing`
        # whenever the edge is a multiple of it
        step = float(edge) / n
        axes.append(float(lo) + step * (np.arange(n) + 0.5))
        shape.append(n)
    grids = np.meshgrid(*axes, indexing="ij")
    points = np.stack([g.ravel() for g in grids], axis=1)
    return EvalGrid(
        region=region,
        spacing=spacing,
        shape=tuple(shape),
        axes=tuple(axes),
        points=points,
    )


@dataclass(frozen=True)
class FieldMap:
    """Values aligned with an evaluation grid at one frequency."""

    grid: EvalGrid
    values: np.ndarray
    frequency: float

    def __post_init__(self):
        if self.values.shape != (self.grid.points.shape[0],):
            raise DomainError("value vector does not match the grid")


def _require_same_grid(a: FieldMap, b: FieldMap):
    if a.grid is not b.grid and not np.array_equal(a.grid.points, b.grid.points):
        raise DomainError("field maps live on different grids")


def error_map(u_syn: FieldMap, u_des: FieldMap) -> FieldMap:
    """Pointwise squared reproduction error |u_syn - u_des|^2."""
    _require_same_grid(u_syn, u_des)
    values = np.abs(u_syn.values - u_des.values) ** 2
    return FieldMap(grid=u_des.grid, values=values, frequency=u_des.frequency)


def sdr(u_syn: FieldMap, u_des: FieldMap) -> float:
    """Signal-to-distortion ratio in dB over the grid.

    10 log10 of desired energy over error energy; cell areas cancel. An
    exact reproduction returns +inf (serialized as null downstream).
    """
    _require_same_grid(u_syn, u_des)
    num = float(np.sum(np.abs(u_des.values) ** 2))
    if num == 0.0:
        raise DomainError("desired field has zero energy on the grid")
    den = float(np.sum(error_map(u_syn, u_des).values))
    if den == 0.0:
        return math.inf
    return 10.0 * math.log10(num / den)


@dataclass(frozen=True)
class DesiredField:
    """Target field: a unit plane wave or a unit point source."""

    kind: str
    propagation: Optional[np.ndarray] = None
    source_position: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.kind == "plane_wave":
            if self.propagation is None or self.source_position is not None:
                raise ConfigError("plane_wave target takes only a propagation direction")
            object.__setattr__(self, "propagation", direction(self.propagation))
        elif self.kind == "point_source":
            if self.source_position is None or self.propagation is not None:
                raise ConfigError("point_source target takes only a position")
            object.__setattr__(self, "source_position", position(self.source_position))
        else:
            raise ConfigError(f"unknown desired-field kind {self.kind!r}")

    def pressures(self, k: Wavenumber, pts) -> np.ndarray:
        if self.kind == "plane_wave":
            return plane_wave(k, self.propagation, pts)
        return green_point_source(k, self.source_position, pts)

    def arrival_direction(self, region_center) -> np.ndarray:
        """Direction the target field arrives from, seen from the region."""
        if self.kind == "plane_wave":
            return -self.propagation
        return unit_toward(region_center, self.source_position)


@dataclass(frozen=True)
class MethodSpec:
    """One solver configuration in an experiment.

    solver "pm" ignores the kernel fields. "wpm" interpolates every field
    with one shared kernel; family "directional" aims it at the desired
    field's arrival direction. "wpm_general" gives each source a directional
    kernel aimed along its own bearing from the region center (uniform family
    turns those into uniform kernels, which coincides with "wpm").
    """

    name: str
    solver: str
    kernel_family: str = "uniform"
    rho: float = 0.0
    lam: float = 1e-6
    eta: float = 1e-6

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise ConfigError(f"method name {self.name!r} is not filesystem-safe")
        if self.solver not in ("pm", "wpm", "wpm_general"):
            raise ConfigError(f"unknown solver {self.solver!r}")
        if self.kernel_family not in ("uniform", "directional"):
            raise ConfigError(f"unknown kernel family {self.kernel_family!r}")
        if not (self.lam >= 0.0 and self.eta >= 0.0):
            raise ConfigError("lam and eta must be nonnegative")
        if not (self.rho >= 0.0):
            raise ConfigError("rho must be nonnegative")


def solve_method(scene: Scene, desired: DesiredField, method: MethodSpec,
                 freq_hz: float, quad: QuadratureSpec) -> DriveVector:
    """Drive vector for one method at one frequency."""
    omega = 2.0 * math.pi * freq_hz
    k = scene.wavenumber(omega)
    transfer = build_transfer_matrix(scene, omega)
    u_des = desired.pressures(k, scene.control_points)
    if method.solver == "pm":
        return solve_pm(transfer, u_des, method.eta)
    center = scene.region.center
    if method.solver == "wpm":
        if method.kernel_family == "directional":
            spec = KernelSpec(scene.dimension, "directional", method.rho,
                              desired.arrival_direction(center))
        else:
            spec = KernelSpec(scene.dimension, "uniform")
        weight = build_weight_shared(spec, k, scene.control_points, method.lam,
                                     scene.region, quad)
        return solve_wpm_shared(transfer, weight, u_des, method.eta)
    if method.kernel_family == "directional":
        specs = [
            KernelSpec(scene.dimension, "directional", method.rho,
                       unit_toward(center, spk.position))
            for spk in scene.loudspeakers
        ]
        spec_des = KernelSpec(scene.dimension, "directional", method.rho,
                              desired.arrival_direction(center))
    else:
        specs = [KernelSpec(scene.dimension, "uniform")] * scene.num_sources
        spec_des = KernelSpec(scene.dimension, "uniform")
    weights = build_weights_general(specs, spec_des, k, scene.control_points,
                                    method.lam, scene.region, quad, transfer)
    drive = solve_wpm_general(weights.w_gg, weights.w_gu, u_des, method.eta,
                              omega=omega)
    return DriveVector(d=drive.d, omega=omega, method=drive.method)


@dataclass(frozen=True)
class FrequencyResult:
    """Everything computed at one frequency of a sweep."""

    frequency: float
    desired: FieldMap
    drives: Dict[str, DriveVector]
    fields: Dict[str, FieldMap]
    sdrs: Dict[str, float]


def evaluate_frequency(scene: Scene, desired: DesiredField,
                       methods: Sequence[MethodSpec], freq_hz: float,
                       quad: QuadratureSpec, grid: EvalGrid) -> FrequencyResult:
    omega = 2.0 * math.pi * freq_hz
    k = scene.wavenumber(omega)
    des_map = FieldMap(grid=grid, values=desired.pressures(k, grid.points),
                       frequency=freq_hz)
    block = transfer_block(scene, omega, grid.points)
    drives: Dict[str, DriveVector] = {}
    fields: Dict[str, FieldMap] = {}
    sdrs: Dict[str, float] = {}
    for method in methods:
        drive = solve_method(scene, desired, method, freq_hz, quad)
        syn = FieldMap(grid=grid, values=block @ drive.d, frequency=freq_hz)
        drives[method.name] = drive
        fields[method.name] = syn
        sdrs[method.name] = sdr(syn, des_map)
    return FrequencyResult(frequency=freq_hz, desired=des_map, drives=drives,
                           fields=fields, sdrs=sdrs)


@dataclass(frozen=True)
class SdrSeries:
    """Per-method SDR values over a frequency list."""

    frequencies: List[float]
    values: Dict[str, List[float]] = field(default_factory=dict)


def sweep_frequencies(f_start: float, f_end: float, f_step: float) -> List[float]:
    if not (f_start > 0.0 and f_step > 0.0 and f_end >= f_start):
        raise ConfigError("need f_start > 0, f_step > 0 and f_end >= f_start")
    count = int(math.floor((f_end - f_start) / f_step + 1e-9)) + 1
    return [f_start + i * f_step for i in range(count)]


def thread_count() -> int:
    """Worker count from SFR_THREADS; 0 or unset picks a machine default."""
    raw = os.environ.get("SFR_THREADS", "0").strip()
    try:
        n = int(raw)
    except ValueError:
        raise ConfigError(f"SFR_THREADS={raw!r} is not an integer") from None
    if n < 0:
        raise ConfigError("SFR_THREADS must be >= 0")
    if n == 0:
        return min(os.cpu_count() or 1, 8)
    return n


def frequency_sweep(scene: Scene, desired: DesiredField,
                    methods: Sequence[MethodSpec], f_start: float,
                    f_end: float, f_step: float, *,
                    quad: QuadratureSpec = QuadratureSpec(),
                    eval_spacing: float = 0.01,
                    grid: Optional[EvalGrid] = None) -> SdrSeries:
    """SDR of every method at every frequency of the sweep.

    Frequencies are computed concurrently (SFR_THREADS workers); each
    frequency is a pure task, so results do not depend on the worker count.
    """
    methods = list(methods)
    if not methods:
        raise ConfigError("methods list is empty")
    names = [m.name for m in methods]
    if len(set(names)) != len(names):
        raise ConfigError("method names must be unique")
    freqs = sweep_frequencies(f_start, f_end, f_step)
    if grid is None:
        grid = make_eval_grid(scene.region, eval_spacing)

    def task(freq: float) -> Dict[str, float]:
        return evaluate_frequency(scene, desired, methods, freq, quad, grid).sdrs

    workers = min(thread_count(), len(freqs))
    if workers <= 1:
        per_freq = [task(f) for f in freqs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_freq = list(pool.map(task, freqs))
    values = {name: [row[name] for row in per_freq] for name in names}
    return SdrSeries(frequencies=freqs, values=values)
