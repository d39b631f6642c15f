"""Reproducing kernels for interior Helmholtz fields and ridge interpolation.

The kernels are directional plane-wave superpositions over the unit sphere
(3D) or unit circle (2D) with a von Mises-Fisher style weight e^{rho xi.rhat}
concentrating around a prior arrival direction rhat. They admit the closed
forms j0(.) / J0(.) of a complex square-root argument; rho = 0 recovers the
uniform (isotropic) kernel j0(k d) / J0(k d).
"""
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg

from .errors import ConfigError, DomainError, SfrError
from .geometry import Wavenumber, direction, position, position_stack
from .special import bessel_J0_complex, sph_bessel_j0

#: Condition-number ceiling for interpolating with lam = 0.
MAX_UNREGULARIZED_COND = 1e12


@dataclass(frozen=True)
class KernelSpec:
    """Kernel family selector.

    dimension: 2 or 3.
    family: "uniform" or "directional".
    rho: directional sharpness >= 0; 0 makes "directional" coincide with
        "uniform".
    prior_dir: prior arrival direction (unit vector pointing from the target
        region toward the source), required iff family is "directional".
    """

    dimension: int
    family: str
    rho: float = 0.0
    prior_dir: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.dimension not in (2, 3):
            raise ConfigError(f"kernel dimension must be 2 or 3, got {self.dimension}")
        if self.family not in ("uniform", "directional"):
            raise ConfigError(f"unknown kernel family {self.family!r}")
        if not (self.rho >= 0.0):
            raise ConfigError("rho must be nonnegative")
        if self.family == "directional":
            if self.prior_dir is None:
                raise ConfigError("directional kernel needs prior_dir")
            d = direction(self.prior_dir)
            if d.shape[0] != self.dimension:
                raise ConfigError("prior_dir dimension does not match kernel")
            object.__setattr__(self, "prior_dir", d)
        elif self.prior_dir is not None:
            raise ConfigError("uniform kernel takes no prior_dir")


def kernel_block(spec: KernelSpec, k: Wavenumber, a_pts, b_pts) -> np.ndarray:
    """Kernel evaluations between two stacks of points, shape (m, n)."""
    a = position_stack(a_pts)
    b = position_stack(b_pts)
    if a.shape[1] != spec.dimension or b.shape[1] != spec.dimension:
        raise DomainError("point dimension does not match kernel spec")
    diff = a[:, None, :] - b[None, :, :]
    if spec.family == "directional":
        w = 1j * spec.rho * spec.prior_dir - k.k * diff
        z = np.sqrt(np.sum(w * w, axis=2))
    else:
        z = k.k * np.sqrt(np.sum(diff * diff, axis=2))
    if spec.dimension == 3:
        return sph_bessel_j0(z)
    return bessel_J0_complex(z)


def kernel_eval(spec: KernelSpec, k: Wavenumber, r1, r2) -> complex:
    """Kernel value between two positions."""
    block = kernel_block(spec, k, position(r1)[None, :], position(r2)[None, :])
    return complex(block[0, 0])


@dataclass(frozen=True)
class GramMatrix:
    """Kernel matrix over one point set; Hermitian with real diagonal."""

    entries: np.ndarray
    kernel: KernelSpec
    points: np.ndarray


def gram_assemble(spec: KernelSpec, k: Wavenumber, points) -> GramMatrix:
    """Gram matrix of the kernel over `points`.

    The strict upper triangle is mirror-conjugated onto the lower one and the
    diagonal keeps only its real part, so the result is Hermitian exactly,
    not merely to roundoff.
    """
    pts = position_stack(points)
    if pts.shape[0] < 1:
        raise DomainError("need at least one point")
    full = kernel_block(spec, k, pts, pts)
    upper = np.triu(full, 1)
    entries = upper + upper.conj().T + np.diag(full.diagonal().real)
    return GramMatrix(entries=entries, kernel=spec, points=pts)


class RegularizedGram:
    """Factorization of K + lam*I shared by interpolation and weight assembly.

    Tries a Cholesky factorization first; if that fails the matrix is kept
    and solves go through a pivoted Hermitian-indefinite routine, with the
    condition estimate reported once as a warning.
    """

    def __init__(self, gram: GramMatrix, lam: float):
        if not (lam >= 0.0):
            raise DomainError("lam must be nonnegative")
        self.gram = gram
        self.lam = lam
        n = gram.entries.shape[0]
        if lam == 0.0:
            cond = np.linalg.cond(gram.entries)
            if not (cond < MAX_UNREGULARIZED_COND):
                raise DomainError(
                    f"Gram matrix too ill-conditioned for lam=0 (cond ~ {cond:.3e})"
                )
        self._a = gram.entries + lam * np.eye(n)
        try:
            self._chol = scipy.linalg.cho_factor(self._a, check_finite=False)
        except scipy.linalg.LinAlgError:
            self._chol = None
            warnings.warn(
                "regularized Gram matrix is not positive definite; using a "
                f"pivoted Hermitian solve (cond ~ {np.linalg.cond(self._a):.3e})",
                stacklevel=2,
            )

    def solve(self, rhs: np.ndarray) -> np.ndarray:
        """Solve (K + lam*I) x = rhs."""
        if self._chol is not None:
            return scipy.linalg.cho_solve(self._chol, rhs, check_finite=False)
        return scipy.linalg.solve(self._a, rhs, assume_a="her", check_finite=False)

    def solve_transposed(self, rhs: np.ndarray) -> np.ndarray:
        """Solve (K + lam*I)^T x = rhs.

        For Hermitian A the transpose is the conjugate, so A^T x = rhs is
        solved as conj(A solve conj(rhs)) with the same factorization.
        """
        return np.conj(self.solve(np.conj(rhs)))


@dataclass(frozen=True)
class Interpolant:
    """Kernel ridge interpolant u(r) = kappa(r)^T alpha."""

    alpha: np.ndarray
    kernel: KernelSpec
    points: np.ndarray
    lam: float
    k: Wavenumber


def fit_interpolant(spec: KernelSpec, k: Wavenumber, points, samples, lam: float) -> Interpolant:
    """Fit the ridge interpolant through `samples` at `points`.

    Solves (K + lam*I) alpha = s; one step of iterative refinement is applied
    if the relative residual exceeds 1e-12, and the result is rejected if it
    still exceeds 1e-10.
    """
    s = np.asarray(samples, dtype=np.complex128)
    gram = gram_assemble(spec, k, points)
    if s.shape != (gram.points.shape[0],):
        raise DomainError("sample vector length does not match point count")
    solver = RegularizedGram(gram, lam)
    alpha = solver.solve(s)
    a = gram.entries + lam * np.eye(gram.entries.shape[0])
    s_norm = float(np.linalg.norm(s))
    resid = s - a @ alpha
    if np.linalg.norm(resid) > 1e-12 * s_norm:
        alpha = alpha + solver.solve(resid)
        resid = s - a @ alpha
    if np.linalg.norm(resid) > 1e-10 * s_norm and s_norm > 0.0:
        raise SfrError("interpolant solve residual above 1e-10 of the data norm")
    return Interpolant(alpha=alpha, kernel=spec, points=gram.points, lam=lam, k=k)


def interp_eval(f: Interpolant, r):
    """Evaluate the interpolant at one position or an (m, dim) stack."""
    block = kernel_block(f.kernel, f.k, position_stack(r), f.points)
    out = block @ f.alpha
    if np.asarray(r).ndim == 1:
        return complex(out[0])
    return out


def weight_rows(spec: KernelSpec, k: Wavenumber, points, lam: float, at_points) -> np.ndarray:
    """Rows z(r)^T = kappa(r)^T (K + lam*I)^{-1} for a stack of positions.

    Returns shape (m, n_points); row i applied to a sample vector gives the
    interpolant's value at position i, for any sample vector.
    """
    gram = gram_assemble(spec, k, points)
    solver = RegularizedGram(gram, lam)
    kappa = kernel_block(spec, k, position_stack(at_points), gram.points)
    return solver.solve_transposed(kappa.T).T


def interp_weight_row(spec: KernelSpec, k: Wavenumber, points, lam: float, r) -> np.ndarray:
    """Interpolation weight vector z(r) for a single position."""
    return weight_rows(spec, k, points, lam, position(r)[None, :])[0]
