"""Declarative experiment configuration and the bundled reference preset.

Configs are JSON documents validated against `SCHEMA`; `ExperimentConfig`
mirrors the document and builds the numeric scene objects on demand, so a
parse -> serialize -> parse round trip is loss-free.
"""
import hashlib
import json
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np
from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from .errors import ConfigError
from .evaluation import DesiredField, MethodSpec
from .geometry import Medium, Region, SourceKind, SourceModel
from .quadrature import QuadratureSpec
from .solvers import Loudspeaker, Scene

_POINT = {
    "type": "array",
    "items": {"type": "number"},
    "minItems": 2,
    "maxItems": 3,
}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "sfrepro experiment configuration",
    "type": "object",
    "required": [
        "dimension",
        "medium",
        "speakers",
        "control_points",
        "region",
        "desired",
        "methods",
    ],
    "additionalProperties": False,
    "properties": {
        "dimension": {"enum": [2, 3]},
        "medium": {
            "type": "object",
            "properties": {
                "sound_speed": {"type": "number", "exclusiveMinimum": 0}
            },
            "required": ["sound_speed"],
            "additionalProperties": False,
        },
        "speakers": {
            "oneOf": [
                {
                    "type": "object",
                    "properties": {
                        "layout": {"const": "square_perimeter"},
                        "count": {"type": "integer", "minimum": 1},
                        "side": {"type": "number", "exclusiveMinimum": 0},
                        "anchor": {"enum": ["corner", "midpoint"]},
                    },
                    "required": ["layout", "count", "side"],
                    "additionalProperties": False,
                },
                {
                    "type": "object",
                    "properties": {
                        "layout": {"const": "explicit"},
                        "positions": {
                            "type": "array",
                            "items": _POINT,
                            "minItems": 1,
                        },
                    },
                    "required": ["layout", "positions"],
                    "additionalProperties": False,
                },
            ]
        },
        "control_points": {
            "oneOf": [
                {
                    "type": "object",
                    "properties": {
                        "layout": {"const": "square_grid"},
                        "count_per_axis": {"type": "integer", "minimum": 1},
                        "side": {"type": "number", "exclusiveMinimum": 0},
                        "placement": {"enum": ["edge", "cell"]},
                    },
                    "required": ["layout", "count_per_axis", "side"],
                    "additionalProperties": False,
                },
                {
                    "type": "object",
                    "properties": {
                        "layout": {"const": "explicit"},
                        "positions": {
                            "type": "array",
                            "items": _POINT,
                            "minItems": 1,
                        },
                    },
                    "required": ["layout", "positions"],
                    "additionalProperties": False,
                },
            ]
        },
        "region": {
            "type": "object",
            "properties": {"center": _POINT, "edge_lengths": _POINT},
            "required": ["center", "edge_lengths"],
            "additionalProperties": False,
        },
        "desired": {
            "oneOf": [
                {
                    "type": "object",
                    "properties": {
                        "kind": {"const": "plane_wave"},
                        "angle": {"type": "number"},
                    },
                    "required": ["kind", "angle"],
                    "additionalProperties": False,
                },
                {
                    "type": "object",
                    "properties": {
                        "kind": {"const": "plane_wave"},
                        "direction": _POINT,
                    },
                    "required": ["kind", "direction"],
                    "additionalProperties": False,
                },
                {
                    "type": "object",
                    "properties": {
                        "kind": {"const": "point_source"},
                        "position": _POINT,
                    },
                    "required": ["kind", "position"],
                    "additionalProperties": False,
                },
            ]
        },
        "methods": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "properties": {
                    "name": {"type": "string", "pattern": "^[A-Za-z0-9_-]+$"},
                    "solver": {"enum": ["pm", "wpm", "wpm_general"]},
                    "kernel": {
                        "type": "object",
                        "properties": {
                            "family": {"enum": ["uniform", "directional"]},
                            "rho": {"type": "number", "minimum": 0},
                        },
                        "required": ["family"],
                        "additionalProperties": False,
                    },
                    "lam": {"type": "number", "minimum": 0},
                    "eta": {"type": "number", "minimum": 0},
                },
                "required": ["name", "solver"],
                "additionalProperties": False,
            },
        },
        "quadrature": {
            "type": "object",
            "properties": {
                "rule": {"enum": ["gauss", "midpoint"]},
                "nodes_per_axis": {"type": "integer", "minimum": 2},
            },
            "additionalProperties": False,
        },
        "evaluation": {
            "type": "object",
            "properties": {
                "spacing": {"type": "number", "exclusiveMinimum": 0}
            },
            "additionalProperties": False,
        },
        "sweep": {
            "type": "object",
            "properties": {
                "start": {"type": "number", "exclusiveMinimum": 0},
                "stop": {"type": "number", "exclusiveMinimum": 0},
                "step": {"type": "number", "exclusiveMinimum": 0},
            },
            "required": ["start", "stop", "step"],
            "additionalProperties": False,
        },
        "field_frequencies": {
            "type": "array",
            "items": {"type": "number", "exclusiveMinimum": 0},
        },
        "output_dir": {"type": ["string", "null"]},
    },
}

_VALIDATOR = Draft202012Validator(SCHEMA)


def validate_config_dict(doc: dict) -> None:
    """Schema-check a raw config document; ConfigError names the bad field."""
    errors = list(_VALIDATOR.iter_errors(doc))
    if errors:
        err = best_match(errors)
        raise ConfigError(f"config invalid at {err.json_path}: {err.message}")


@dataclass(frozen=True)
class SpeakerLayout:
    """Loudspeaker placement: generated square perimeter or explicit list."""

    layout: str
    count: Optional[int] = None
    side: Optional[float] = None
    anchor: str = "corner"
    positions: Optional[Tuple[Tuple[float, ...], ...]] = None

    def build(self, dimension: int, center: np.ndarray) -> Tuple[Loudspeaker, ...]:
        kind = SourceKind.POINT_SOURCE_2D if dimension == 2 else SourceKind.POINT_SOURCE_3D
        model = SourceModel(kind=kind)
        if self.layout == "explicit":
            return tuple(Loudspeaker(position=np.asarray(p, dtype=float), model=model)
                         for p in self.positions)
        if dimension != 2:
            raise ConfigError("square_perimeter speaker layout is 2D only")
        pts = _square_perimeter(self.count, self.side, self.anchor) + center
        return tuple(Loudspeaker(position=p, model=model) for p in pts)


def _square_perimeter(count: int, side: float, anchor: str) -> np.ndarray:
    """`count` points at equal arc length around a centered square.

    anchor "corner" puts the first point on a corner; "midpoint" shifts all
    points by half the spacing, so corners fall between neighbors.
    """
    spacing = 4.0 * side / count
    offset = 0.5 * spacing if anchor == "midpoint" else 0.0
    half = 0.5 * side
    pts = np.empty((count, 2))
    for i in range(count):
        t = offset + i * spacing
        edge = int(t // side) % 4
        u = t - edge * side
        if edge == 0:
            pts[i] = (-half + u, -half)
        elif edge == 1:
            pts[i] = (half, -half + u)
        elif edge == 2:
            pts[i] = (half - u, half)
        else:
            pts[i] = (-half, half - u)
    return pts


@dataclass(frozen=True)
class ControlLayout:
    """Control-point placement: generated square grid or explicit list."""

    layout: str
    count_per_axis: Optional[int] = None
    side: Optional[float] = None
    placement: str = "edge"
    positions: Optional[Tuple[Tuple[float, ...], ...]] = None

    def build(self, dimension: int, center: np.ndarray) -> np.ndarray:
        if self.layout == "explicit":
            return np.asarray(self.positions, dtype=float)
        if dimension != 2:
            raise ConfigError("square_grid control layout is 2D only")
        n = self.count_per_axis
        half = 0.5 * self.side
        if self.placement == "edge":
            axis = np.linspace(-half, half, n) if n > 1 else np.zeros(1)
        else:
            step = self.side / n
            axis = -half + step * (np.arange(n) + 0.5)
        gx, gy = np.meshgrid(axis, axis, indexing="ij")
        return np.stack([gx.ravel(), gy.ravel()], axis=1) + center


@dataclass(frozen=True)
class DesiredSpec:
    """Declarative desired field; `build` resolves it to a DesiredField."""

    kind: str
    angle: Optional[float] = None
    direction: Optional[Tuple[float, ...]] = None
    position: Optional[Tuple[float, ...]] = None

    def build(self, dimension: int) -> DesiredField:
        if self.kind == "plane_wave":
            if self.angle is not None:
                if dimension != 2:
                    raise ConfigError("plane-wave angle form is 2D only")
                prop = np.array([math.cos(self.angle), math.sin(self.angle)])
            else:
                prop = np.asarray(self.direction, dtype=float)
            return DesiredField(kind="plane_wave", propagation=prop)
        return DesiredField(kind="point_source",
                            source_position=np.asarray(self.position, dtype=float))


@dataclass(frozen=True)
class SweepSpec:
    start: float
    stop: float
    step: float


@dataclass(frozen=True)
class ExperimentConfig:
    """Complete description of one reproduction experiment."""

    dimension: int
    medium: Medium
    speakers: SpeakerLayout
    control: ControlLayout
    region: Region
    desired: DesiredSpec
    methods: Tuple[MethodSpec, ...]
    quadrature: QuadratureSpec = QuadratureSpec()
    eval_spacing: float = 0.01
    sweep: SweepSpec = SweepSpec(100.0, 700.0, 10.0)
    field_frequencies: Tuple[float, ...] = (450.0,)
    output_dir: Optional[str] = None

    def __post_init__(self):
        names = [m.name for m in self.methods]
        if len(set(names)) != len(names):
            raise ConfigError("method names must be unique")

    def scene(self) -> Scene:
        center = self.region.center
        return Scene(
            dimension=self.dimension,
            medium=self.medium,
            loudspeakers=self.speakers.build(self.dimension, center),
            control_points=self.control.build(self.dimension, center),
            region=self.region,
        )

    def desired_field(self) -> DesiredField:
        return self.desired.build(self.dimension)

    @classmethod
    def from_dict(cls, doc: dict) -> "ExperimentConfig":
        validate_config_dict(doc)
        spk = doc["speakers"]
        if spk["layout"] == "square_perimeter":
            speakers = SpeakerLayout(
                layout="square_perimeter",
                count=spk["count"],
                side=float(spk["side"]),
                anchor=spk.get("anchor", "corner"),
            )
        else:
            speakers = SpeakerLayout(
                layout="explicit",
                positions=tuple(tuple(float(x) for x in p) for p in spk["positions"]),
            )
        ctl = doc["control_points"]
        if ctl["layout"] == "square_grid":
            control = ControlLayout(
                layout="square_grid",
                count_per_axis=ctl["count_per_axis"],
                side=float(ctl["side"]),
                placement=ctl.get("placement", "edge"),
            )
        else:
            control = ControlLayout(
                layout="explicit",
                positions=tuple(tuple(float(x) for x in p) for p in ctl["positions"]),
            )
        des = doc["desired"]
        desired = DesiredSpec(
            kind=des["kind"],
            angle=des.get("angle"),
            direction=tuple(des["direction"]) if "direction" in des else None,
            position=tuple(des["position"]) if "position" in des else None,
        )
        methods = tuple(
            MethodSpec(
                name=m["name"],
                solver=m["solver"],
                kernel_family=m.get("kernel", {}).get("family", "uniform"),
                rho=float(m.get("kernel", {}).get("rho", 0.0)),
                lam=float(m.get("lam", 1e-6)),
                eta=float(m.get("eta", 1e-6)),
            )
            for m in doc["methods"]
        )
        quad_doc = doc.get("quadrature", {})
        sweep_doc = doc.get("sweep", {"start": 100.0, "stop": 700.0, "step": 10.0})
        return cls(
            dimension=doc["dimension"],
            medium=Medium(sound_speed=float(doc["medium"]["sound_speed"])),
            speakers=speakers,
            control=control,
            region=Region(
                center=np.asarray(doc["region"]["center"], dtype=float),
                edge_lengths=np.asarray(doc["region"]["edge_lengths"], dtype=float),
            ),
            desired=desired,
            methods=methods,
            quadrature=QuadratureSpec(
                rule=quad_doc.get("rule", "gauss"),
                nodes_per_axis=quad_doc.get("nodes_per_axis", 40),
            ),
            eval_spacing=float(doc.get("evaluation", {}).get("spacing", 0.01)),
            sweep=SweepSpec(
                start=float(sweep_doc["start"]),
                stop=float(sweep_doc["stop"]),
                step=float(sweep_doc["step"]),
            ),
            field_frequencies=tuple(float(f) for f in doc.get("field_frequencies", [450.0])),
            output_dir=doc.get("output_dir"),
        )

    def to_dict(self) -> dict:
        if self.speakers.layout == "square_perimeter":
            spk: Dict = {
                "layout": "square_perimeter",
                "count": self.speakers.count,
                "side": self.speakers.side,
                "anchor": self.speakers.anchor,
            }
        else:
            spk = {
                "layout": "explicit",
                "positions": [list(p) for p in self.speakers.positions],
            }
        if self.control.layout == "square_grid":
            ctl: Dict = {
                "layout": "square_grid",
                "count_per_axis": self.control.count_per_axis,
                "side": self.control.side,
                "placement": self.control.placement,
            }
        else:
            ctl = {
                "layout": "explicit",
                "positions": [list(p) for p in self.control.positions],
            }
        des: Dict = {"kind": self.desired.kind}
        if self.desired.angle is not None:
            des["angle"] = self.desired.angle
        elif self.desired.direction is not None:
            des["direction"] = list(self.desired.direction)
        if self.desired.position is not None:
            des["position"] = list(self.desired.position)
        doc = {
            "dimension": self.dimension,
            "medium": {"sound_speed": self.medium.sound_speed},
            "speakers": spk,
            "control_points": ctl,
            "region": {
                "center": [float(x) for x in self.region.center],
                "edge_lengths": [float(x) for x in self.region.edge_lengths],
            },
            "desired": des,
            "methods": [
                {
                    "name": m.name,
                    "solver": m.solver,
                    "kernel": {"family": m.kernel_family, "rho": m.rho},
                    "lam": m.lam,
                    "eta": m.eta,
                }
                for m in self.methods
            ],
            "quadrature": {
                "rule": self.quadrature.rule,
                "nodes_per_axis": self.quadrature.nodes_per_axis,
            },
            "evaluation": {"spacing": self.eval_spacing},
            "sweep": {
                "start": self.sweep.start,
                "stop": self.sweep.stop,
                "step": self.sweep.step,
            },
            "field_frequencies": list(self.field_frequencies),
        }
        if self.output_dir is not None:
            doc["output_dir"] = self.output_dir
        return doc

    def config_hash(self) -> str:
        canon = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canon.encode()).hexdigest()


def load_config(path) -> ExperimentConfig:
    """Read and validate a JSON config file."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise ConfigError(f"{path}: top level must be a JSON object")
    try:
        return ExperimentConfig.from_dict(doc)
    except ConfigError as exc:
        raise ConfigError(f"{path}: {exc}") from exc


def save_config(cfg: ExperimentConfig, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(cfg.to_dict(), fh, indent=2, sort_keys=False)
        fh.write("\n")


def preset_paper_experiment() -> ExperimentConfig:
    """The packaged reference experiment.

    Twelve point sources spread evenly around a 2 m square drive a unit
    plane wave (propagating at pi/4 rad) across a 1 m square control region
    sampled by a 4 x 4 grid, in a 2D free field at c = 343 m/s. Methods:
    plain pressure matching, shared uniform-kernel weighting, and per-source
    directional weighting with rho = 5.
    """
    return ExperimentConfig(
        dimension=2,
        medium=Medium(sound_speed=343.0),
        speakers=SpeakerLayout(layout="square_perimeter", count=12, side=2.0,
                               anchor="midpoint"),
        control=ControlLayout(layout="square_grid", count_per_axis=4, side=1.0,
                              placement="edge"),
        region=Region(center=np.zeros(2), edge_lengths=np.ones(2)),
        desired=DesiredSpec(kind="plane_wave", angle=math.pi / 4.0),
        methods=(
            MethodSpec(name="pm", solver="pm"),
            MethodSpec(name="wpm", solver="wpm", kernel_family="uniform"),
            MethodSpec(name="wpm_dir", solver="wpm_general",
                       kernel_family="directional", rho=5.0),
        ),
        quadrature=QuadratureSpec(rule="gauss", nodes_per_axis=40),
        eval_spacing=0.01,
        sweep=SweepSpec(start=100.0, stop=700.0, step=10.0),
        field_frequencies=(450.0,),
    )
