"""Scenario files: one JSON document drives a whole run.

Schema (version "v1"):

    {
      "schema": "v1",
      "name": "kepler",
      "bodies": [
        {"id": "A", "mass": 1.0, "position": [x, y, z],
         "velocity": [x, y, z], "properties": {"charge": 0.0}},
        { ... exactly two ... }
      ],
      "laws": [{"preset": "gravity", "params": {"g": 1.0}}],
      "softening": 0.0,
      "integrator": {"method": "rk4", "step": 0.01, "t_end": 10.0},
      "frames": {"count": 50, "translation": 5.0, "boost": 2.0,
                 "time_offset": 1.0, "reflections": true},
      "velocity_addition": {"g": "lorentz", "c": 1.0, "samples": 200,
                            "max_speed": 0.95, "baseline": 1.0},
      "audits": ["momentum", "energy"],
      "tolerances": {"momentum": 1e-9},
      "audit_params": {"boost-covariance": {"count": 10}}
    }

Everything after "bodies" is optional. "frames" may instead be a list of
explicit transforms ({"rotation": 3x3, "translation": [..], "boost": [..],
"time_offset": s}). Validation reports the offending field by path before
any computation runs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .core import Body, Vec3
from .forces import ForceLaw, make_preset, soften
from .frames import FrameTransform
from .velocity_addition import GFUNCTIONS, GFunction

__all__ = [
    "ScenarioError",
    "IntegratorConfig",
    "FrameSweepConfig",
    "AdditionConfig",
    "Scenario",
    "parse_scenario",
    "load_scenario",
]


class ScenarioError(ValueError):
    """Invalid scenario document; the message names the field."""


@dataclass(frozen=True)
class IntegratorConfig:
    method: str
    step: float
    t_end: float

    def meta(self) -> dict:
        return {"method": self.method, "step": self.step, "t_end": self.t_end}


@dataclass(frozen=True)
class FrameSweepConfig:
    """Objectivity sweep: explicit transforms, or scales for random ones."""

    count: int = 50
    translation: float = 1.0
    boost: float = 1.0
    time_offset: float = 1.0
    reflections: bool = True
    explicit: tuple[FrameTransform, ...] = ()


@dataclass(frozen=True)
class AdditionConfig:
    g_name: str = "lorentz"
    c: float = 1.0
    samples: int = 200
    max_speed: float = 0.9
    baseline: float = 1.0

    def gfunction(self) -> GFunction:
        factory = GFUNCTIONS[self.g_name]
        return factory() if self.g_name == "classical" else factory(self.c)


@dataclass(frozen=True)
class Scenario:
    name: str
    bodies: tuple[Body, Body]
    laws: tuple[ForceLaw, ...]
    audits: tuple[str, ...] = ()
    integrator: IntegratorConfig | None = None
    frames: FrameSweepConfig = field(default_factory=FrameSweepConfig)
    addition: AdditionConfig | None = None
    tolerances: dict[str, float] = field(default_factory=dict)
    audit_params: dict[str, dict] = field(default_factory=dict)


def _fail(path: str, message: str) -> ScenarioError:
    return ScenarioError(f"{path}: {message}")


def _mapping(doc: Any, path: str) -> dict:
    if not isinstance(doc, dict):
        raise _fail(path, f"expected an object, got {type(doc).__name__}")
    return doc


def _number(value: Any, path: str, *, positive: bool = False, nonnegative: bool = False) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise _fail(path, f"expected a number, got {value!r}")
    out = float(value)
    if not math.isfinite(out):
        raise _fail(path, "must be finite")
    if positive and not out > 0.0:
        raise _fail(path, f"must be positive, got {out}")
    if nonnegative and out < 0.0:
        raise _fail(path, f"must be nonnegative, got {out}")
    return out


def _vector(value: Any, path: str) -> Vec3:
    if not isinstance(value, (list, tuple)) or len(value) != 3:
        raise _fail(path, f"expected a 3-component list, got {value!r}")
    return Vec3(*(_number(v, f"{path}[{i}]") for i, v in enumerate(value)))


def _body(doc: Any, path: str) -> Body:
    doc = _mapping(doc, path)
    for key in ("id", "mass", "position", "velocity"):
        if key not in doc:
            raise _fail(f"{path}.{key}", "missing required field")
    if not isinstance(doc["id"], str) or not doc["id"]:
        raise _fail(f"{path}.id", "must be a nonempty string")
    props_doc = doc.get("properties", {})
    props_doc = _mapping(props_doc, f"{path}.properties")
    properties = {
        str(k): _number(v, f"{path}.properties.{k}") for k, v in props_doc.items()
    }
    return Body(
        id=doc["id"],
        mass=_number(doc["mass"], f"{path}.mass", positive=True),
        position=_vector(doc["position"], f"{path}.position"),
        velocity=_vector(doc["velocity"], f"{path}.velocity"),
        properties=properties,
    )


def _law(doc: Any, path: str, softening: float) -> ForceLaw:
    doc = _mapping(doc, path)
    preset = doc.get("preset")
    if not isinstance(preset, str):
        raise _fail(f"{path}.preset", "missing or not a string")
    params = _mapping(doc.get("params", {}), f"{path}.params")
    for key, value in params.items():
        _number(value, f"{path}.params.{key}")
    try:
        law = make_preset(preset, **{str(k): float(v) for k, v in params.items()})
    except ValueError as exc:
        raise _fail(path, str(exc)) from None
    if softening > 0.0 and law.singular:
        law = soften(law, softening)
    return law


def _frames(doc: Any, path: str) -> FrameSweepConfig:
    if isinstance(doc, list):
        explicit = []
        for i, item in enumerate(doc):
            item = _mapping(item, f"{path}[{i}]")
            rotation = item.get("rotation")
            if rotation is None:
                rot = ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))
            else:
                if not isinstance(rotation, list) or len(rotation) != 3:
                    raise _fail(f"{path}[{i}].rotation", "expected a 3x3 matrix")
                rot = tuple(
                    tuple(
                        _number(x, f"{path}[{i}].rotation[{r}][{c}]")
                        for c, x in enumerate(row)
                    )
                    for r, row in enumerate(rotation)
                )
            try:
                transform = FrameTransform(
                    rotation=rot,  # type: ignore[arg-type]
                    translation=_vector(item.get("translation", [0, 0, 0]), f"{path}[{i}].translation"),
                    boost=_vector(item.get("boost", [0, 0, 0]), f"{path}[{i}].boost"),
                    time_offset=_number(item.get("time_offset", 0.0), f"{path}[{i}].time_offset"),
                )
            except ValueError as exc:
                raise _fail(f"{path}[{i}]", str(exc)) from None
            explicit.append(transform)
        return FrameSweepConfig(count=len(explicit), explicit=tuple(explicit))
    doc = _mapping(doc, path)
    count = doc.get("count", 50)
    if isinstance(count, bool) or not isinstance(count, int) or count < 1:
        raise _fail(f"{path}.count", f"expected a positive integer, got {count!r}")
    return FrameSweepConfig(
        count=count,
        translation=_number(doc.get("translation", 1.0), f"{path}.translation", nonnegative=True),
        boost=_number(doc.get("boost", 1.0), f"{path}.boost", nonnegative=True),
        time_offset=_number(doc.get("time_offset", 1.0), f"{path}.time_offset", nonnegative=True),
        reflections=bool(doc.get("reflections", True)),
    )


def parse_scenario(doc: Any, default_name: str = "scenario") -> Scenario:
    doc = _mapping(doc, "scenario")
    schema = doc.get("schema")
    if schema != "v1":
        raise _fail("schema", f'expected "v1", got {schema!r}')

    name = doc.get("name", default_name)
    if not isinstance(name, str) or not name:
        raise _fail("name", "must be a nonempty string")

    bodies_doc = doc.get("bodies")
    if not isinstance(bodies_doc, list) or len(bodies_doc) != 2:
        raise _fail("bodies", "exactly two bodies are required")
    bodies = tuple(_body(b, f"bodies[{i}]") for i, b in enumerate(bodies_doc))
    if bodies[0].id == bodies[1].id:
        raise _fail("bodies", "body ids must differ")

    softening = _number(doc.get("softening", 0.0), "softening", nonnegative=True)

    laws_doc = doc.get("laws", [])
    if not isinstance(laws_doc, list):
        raise _fail("laws", "expected a list")
    laws = tuple(_law(l, f"laws[{i}]", softening) for i, l in enumerate(laws_doc))

    integrator = None
    if "integrator" in doc:
        idoc = _mapping(doc["integrator"], "integrator")
        method = idoc.get("method", "rk4")
        if method not in ("rk4", "verlet"):
            raise _fail("integrator.method", f'expected "rk4" or "verlet", got {method!r}')
        integrator = IntegratorConfig(
            method=method,
            step=_number(idoc.get("step"), "integrator.step", positive=True),
            t_end=_number(idoc.get("t_end"), "integrator.t_end", positive=True),
        )

    frames = _frames(doc["frames"], "frames") if "frames" in doc else FrameSweepConfig()

    addition = None
    if "velocity_addition" in doc:
        adoc = _mapping(doc["velocity_addition"], "velocity_addition")
        g_name = adoc.get("g", "lorentz")
        if g_name not in GFUNCTIONS:
            known = ", ".join(sorted(GFUNCTIONS))
            raise _fail("velocity_addition.g", f"unknown profile {g_name!r} (known: {known})")
        samples = adoc.get("samples", 200)
        if isinstance(samples, bool) or not isinstance(samples, int) or samples < 1:
            raise _fail("velocity_addition.samples", "expected a positive integer")
        max_speed = _number(adoc.get("max_speed", 0.9), "velocity_addition.max_speed", positive=True)
        if max_speed >= 1.0:
            raise _fail("velocity_addition.max_speed", "must be a fraction of c below 1")
        addition = AdditionConfig(
            g_name=g_name,
            c=_number(adoc.get("c", 1.0), "velocity_addition.c", positive=True),
            samples=samples,
            max_speed=max_speed,
            baseline=_number(adoc.get("baseline", 1.0), "velocity_addition.baseline", positive=True),
        )

    audits_doc = doc.get("audits", [])
    if not isinstance(audits_doc, list) or not all(isinstance(a, str) for a in audits_doc):
        raise _fail("audits", "expected a list of audit names")

    tol_doc = _mapping(doc.get("tolerances", {}), "tolerances")
    tolerances = {
        str(k): _number(v, f"tolerances.{k}", positive=True) for k, v in tol_doc.items()
    }

    params_doc = _mapping(doc.get("audit_params", {}), "audit_params")
    audit_params = {str(k): _mapping(v, f"audit_params.{k}") for k, v in params_doc.items()}

    return Scenario(
        name=name,
        bodies=bodies,  # type: ignore[arg-type]
        laws=laws,
        audits=tuple(audits_doc),
        integrator=integrator,
        frames=frames,
        addition=addition,
        tolerances=tolerances,
        audit_params=audit_params,
    )


def load_scenario(path: str | Path) -> Scenario:
    """Parse and validate a scenario file.

    Raises:
        ScenarioError: unreadable file, malformed JSON (with line/column),
            or a schema violation (with the field path).
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario file {path}: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: invalid JSON: {exc}") from None
    return parse_scenario(doc, default_name=path.stem)
