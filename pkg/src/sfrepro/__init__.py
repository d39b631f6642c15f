"""Sound field reproduction over loudspeaker arrays.

Computes per-frequency driving signals that reproduce a desired pressure
field inside a control region, by plain pressure matching or by weighted
pressure matching built on kernel interpolation of Helmholtz fields, and
evaluates the result on dense grids.
"""
from .backend import BACKEND_NAME
from .config import ExperimentConfig, load_config, preset_paper_experiment, save_config
from .errors import ConfigError, DomainError, SfrError
from .evaluation import (
    DesiredField,
    EvalGrid,
    FieldMap,
    MethodSpec,
    SdrSeries,
    error_map,
    frequency_sweep,
    make_eval_grid,
    sdr,
)
from .geometry import Medium, Region, SourceKind, SourceModel, Wavenumber
from .kernels import (
    GramMatrix,
    Interpolant,
    KernelSpec,
    fit_interpolant,
    gram_assemble,
    interp_eval,
    interp_weight_row,
    kernel_eval,
)
from .quadrature import QuadratureSpec
from .runner import RunManifest, run
from .solvers import (
    DriveVector,
    Loudspeaker,
    Scene,
    TransferMatrix,
    WeightMatrix,
    build_transfer_matrix,
    build_weight_shared,
    build_weights_general,
    solve_pm,
    solve_wpm_general,
    solve_wpm_shared,
    synthesize_field,
)
from .special import bessel_J0_complex, hankel2_0, sph_bessel_j0
from .wave import green_point_source, plane_wave

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "ConfigError",
    "DesiredField",
    "DomainError",
    "DriveVector",
    "EvalGrid",
    "ExperimentConfig",
    "FieldMap",
    "GramMatrix",
    "Interpolant",
    "KernelSpec",
    "Loudspeaker",
    "Medium",
    "MethodSpec",
    "QuadratureSpec",
    "Region",
    "RunManifest",
    "Scene",
    "SdrSeries",
    "SfrError",
    "SourceKind",
    "SourceModel",
    "TransferMatrix",
    "Wavenumber",
    "WeightMatrix",
    "bessel_J0_complex",
    "build_transfer_matrix",
    "build_weight_shared",
    "build_weights_general",
    "error_map",
    "fit_interpolant",
    "frequency_sweep",
    "gram_assemble",
    "green_point_source",
    "hankel2_0",
    "interp_eval",
    "interp_weight_row",
    "kernel_eval",
    "load_config",
    "make_eval_grid",
    "plane_wave",
    "preset_paper_experiment",
    "run",
    "save_config",
    "sdr",
    "solve_pm",
    "solve_wpm_general",
    "solve_wpm_shared",
    "sph_bessel_j0",
    "synthesize_field",
    "__version__",
]
