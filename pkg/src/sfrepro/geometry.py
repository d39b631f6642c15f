"""Geometry primitives and medium parameters.

Positions and directions are plain float arrays of length 2 or 3 (meters /
dimensionless); the constructors here validate them. Stacks of positions are
(n, dim) arrays and every field routine accepts them directly.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .errors import ConfigError, DomainError

_UNIT_TOL = 1e-12


def position(coords) -> np.ndarray:
    """Validate a single position: finite real vector of length 2 or 3."""
    arr = np.asarray(coords, dtype=np.float64)
    if arr.ndim != 1 or arr.shape[0] not in (2, 3):
        raise DomainError(f"position must have 2 or 3 components, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DomainError("position components must be finite")
    return arr


def position_stack(coords) -> np.ndarray:
    """Validate an (n, dim) stack of positions sharing one dimension."""
    arr = np.asarray(coords, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2 or arr.shape[1] not in (2, 3):
        raise DomainError(f"expected (n, 2) or (n, 3) positions, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DomainError("position components must be finite")
    return arr


def direction(coords) -> np.ndarray:
    """Validate a unit vector (norm within 1e-12 of 1)."""
    arr = position(coords)
    norm = float(np.linalg.norm(arr))
    if abs(norm - 1.0) > _UNIT_TOL:
        raise DomainError(f"direction must be unit length, norm is {norm!r}")
    return arr


def unit_toward(src, dst) -> np.ndarray:
    """Unit vector pointing from `src` to `dst`."""
    a = position(src)
    b = position(dst)
    if a.shape != b.shape:
        raise DomainError("dimension mismatch")
    diff = b - a
    norm = float(np.linalg.norm(diff))
    if norm < 1e-12:
        raise DomainError("cannot take the direction between coincident points")
    return diff / norm


def angle_to_direction(angle: float) -> np.ndarray:
    """2D unit vector at `angle` radians from the +x axis."""
    return np.array([np.cos(angle), np.sin(angle)], dtype=np.float64)


@dataclass(frozen=True)
class Medium:
    """Propagation medium; only the sound speed matters in free field."""

    sound_speed: float = 343.0

    def __post_init__(self):
        if not (self.sound_speed > 0.0):
            raise ConfigError("sound_speed must be positive")


@dataclass(frozen=True)
class Wavenumber:
    """Angular frequency omega (rad/s) and wavenumber k = omega/c (rad/m)."""

    omega: float
    k: float

    def __post_init__(self):
        if not (self.omega > 0.0 and self.k > 0.0):
            raise DomainError("omega and k must be positive")

    @classmethod
    def from_frequency(cls, freq_hz: float, medium: Medium = Medium()) -> "Wavenumber":
        if not (freq_hz > 0.0):
            raise DomainError("frequency must be positive")
        omega = 2.0 * np.pi * freq_hz
        return cls(omega=omega, k=omega / medium.sound_speed)


class SourceKind(Enum):
    POINT_SOURCE_2D = "point2d"
    POINT_SOURCE_3D = "point3d"
    PLANE_WAVE = "plane"


@dataclass(frozen=True)
class SourceModel:
    """Elementary radiator type; plane waves carry a propagation direction."""

    kind: SourceKind
    propagation: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.kind is SourceKind.PLANE_WAVE:
            if self.propagation is None:
                raise ConfigError("plane-wave source needs a propagation direction")
            object.__setattr__(self, "propagation", direction(self.propagation))
        elif self.propagation is not None:
            raise ConfigError("point sources carry no propagation direction")

    @property
    def dimension(self) -> Optional[int]:
        if self.kind is SourceKind.POINT_SOURCE_2D:
            return 2
        if self.kind is SourceKind.POINT_SOURCE_3D:
            return 3
        return None if self.propagation is None else int(self.propagation.shape[0])


@dataclass(frozen=True)
class Region:
    """Axis-aligned rectangle (2D) or box (3D) given by center and edges."""

    center: np.ndarray
    edge_lengths: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "center", position(self.center))
        edges = np.asarray(self.edge_lengths, dtype=np.float64)
        if edges.shape != self.center.shape:
            raise ConfigError("region center and edge_lengths disagree in dimension")
        if not np.all(edges > 0.0):
            raise ConfigError("region edge lengths must be positive")
        object.__setattr__(self, "edge_lengths", edges)

    @property
    def dimension(self) -> int:
        return int(self.center.shape[0])

    @property
    def lower(self) -> np.ndarray:
        return self.center - 0.5 * self.edge_lengths

    @property
    def upper(self) -> np.ndarray:
        return self.center + 0.5 * self.edge_lengths

    @property
    def measure(self) -> float:
        """Area (2D) or volume (3D)."""
        return float(np.prod(self.edge_lengths))

    def contains(self, points, tol: float = 1e-9) -> np.ndarray:
        pts = position_stack(points)
        if pts.shape[1] != self.dimension:
            raise DomainError("dimension mismatch")
        lo = self.lower - tol
        hi = self.upper + tol
        return np.all((pts >= lo) & (pts <= hi), axis=1)
