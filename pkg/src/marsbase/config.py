"""Strict JSON run configuration with dotted-path parameter overrides.

A config file is one JSON object. Run keys (``scenarios``, ``registry``,
``format``, ``sweep``) sit at the top level next to model sections such as
``mass_driver`` or ``catalog``. Model values may be nested or written as
dotted paths; both resolve to the same field::

    {"mass_driver": {"launcher_efficiency": 1.0},
     "catalog.road.dims.width": 10,
     "sweep": {"parameter": "crew.headcount", "start": 0, "stop": 100, "steps": 11}}
"""

from __future__ import annotations

import dataclasses
import enum
import json
import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping, Sequence

import numpy as np

from .catalog import GEOMETRY_DIMS, OPTIONAL_DIMS, BaseInventory, StructureSpec
from .errors import ConfigError, DomainError
from .operations import FoodItem
from .scenarios import SCENARIOS, ModelParams

CONFIG_ENV_VAR = "MARSBASE_CONFIG"
FORMATS = ("table", "json", "csv", "plot")
RUN_KEYS = ("scenarios", "registry", "format", "sweep")
INTEGER_FIELDS = {"quantity", "robot_count"}
OPTIONAL_FLOAT_FIELDS = {("plant", "area"), ("plant", "efficiency")}


@dataclass(frozen=True)
class SweepSpec:
    parameter: str
    values: tuple[float, ...]
    scenario: str | None = None

    @property
    def steps(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class RunConfig:
    params: ModelParams = field(default_factory=ModelParams)
    scenarios: tuple[str, ...] = ("human-printed",)
    registry: bool = False
    format: str = "table"
    sweep: SweepSpec | None = None
    overrides: tuple[tuple[str, Any], ...] = ()


def _no_duplicates(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise ConfigError(f"duplicate key: {key!r}")
        out[key] = value
    return out


def parse_json(text: str, source: str = "<config>") -> Any:
    try:
        return json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    except RecursionError:
        raise ConfigError(f"{source}: nesting too deep") from None


def flatten(data: Mapping[str, Any], prefix: str = "") -> dict[str, Any]:
    """Collapse nested objects into ``{"a.b.c": leaf}``."""
    out: dict[str, Any] = {}
    for key, value in data.items():
        if not isinstance(key, str) or not key or key.startswith(".") or key.endswith(".") or ".." in key:
            raise ConfigError(f"invalid key: {prefix + str(key)!r}")
        path = f"{prefix}{key}"
        if isinstance(value, Mapping):
            if not value:
                raise ConfigError(f"empty object at {path!r}")
            nested = flatten(value, path + ".")
        else:
            nested = {path: value}
        for p, v in nested.items():
            if p in out:
                raise ConfigError(f"duplicate key: {p!r}")
            out[p] = v
    return out


def _number(path: str, value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ConfigError(f"{path}: expected a finite number, got {value!r}")
    return float(value)


def _coerce(path: str, name: str, current: Any, value: Any, owner: str) -> Any:
    if (owner, name) in OPTIONAL_FLOAT_FIELDS:
        return None if value is None else _number(path, value)
    if isinstance(current, enum.Enum):
        try:
            return type(current)(value)
        except (ValueError, TypeError):
            choices = [m.value for m in type(current)]
            raise ConfigError(f"{path}: expected one of {choices}, got {value!r}") from None
    if isinstance(current, bool):
        if not isinstance(value, bool):
            raise ConfigError(f"{path}: expected true or false, got {value!r}")
        return value
    if name in INTEGER_FIELDS:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(f"{path}: expected an integer, got {value!r}")
        return value
    if isinstance(current, (int, float)):
        return _number(path, value)
    if isinstance(current, str):
        if not isinstance(value, str):
            raise ConfigError(f"{path}: expected a string, got {value!r}")
        return value
    if name == "food_basket":
        if not isinstance(value, list) or not value:
            raise ConfigError(f"{path}: expected a list of [name, MJ/kg, kg] rows")
        rows = []
        for row in value:
            if not (isinstance(row, list) and len(row) == 3 and isinstance(row[0], str)):
                raise ConfigError(f"{path}: each row must be [name, MJ/kg, kg], got {row!r}")
            rows.append(FoodItem(row[0], _number(path, row[1]), _number(path, row[2])))
        return tuple(rows)
    raise ConfigError(f"{path}: field cannot be set directly")


def _set(obj: Any, parts: Sequence[str], value: Any, path: str, owner: str = "") -> Any:
    if isinstance(obj, BaseInventory):
        try:
            spec = obj.get(parts[0])
        except KeyError:
            raise ConfigError(f"unknown key: {path!r}") from None
        if len(parts) == 1:
            raise ConfigError(f"{path}: a structure row cannot be replaced wholesale")
        return obj.replace_structure(_set(spec, parts[1:], value, path, parts[0]))
    if not dataclasses.is_dataclass(obj):
        raise ConfigError(f"unknown key: {path!r}")
    names = {f.name for f in dataclasses.fields(obj) if f.init}
    name = parts[0]
    if name not in names or (isinstance(obj, StructureSpec) and name in ("key", "geometry")):
        raise ConfigError(f"unknown key: {path!r}")
    current = getattr(obj, name)
    if isinstance(obj, StructureSpec) and name == "dims":
        allowed = set(GEOMETRY_DIMS[obj.geometry]) | set(OPTIONAL_DIMS.get(obj.geometry, ()))
        if len(parts) != 2 or parts[1] not in allowed:
            raise ConfigError(f"unknown key: {path!r}")
        new = {**current, parts[1]: _number(path, value)}
    elif len(parts) == 1:
        if dataclasses.is_dataclass(current) or isinstance(current, BaseInventory):
            raise ConfigError(f"{path}: expected an object of fields, not a value")
        new = _coerce(path, name, current, value, owner)
    else:
        new = _set(current, parts[1:], value, path, name)
    try:
        return dataclasses.replace(obj, **{name: new})
    except DomainError as exc:
        raise ConfigError(f"out-of-range value for {path}: {exc}") from None


def apply_override(params: ModelParams, path: str, value: Any) -> ModelParams:
    """Return ``params`` with the field at dotted ``path`` set to ``value``."""
    if not isinstance(path, str) or not path:
        raise ConfigError(f"invalid key: {path!r}")
    return _set(params, path.split("."), value, path)


def _parse_sweep(raw: Any) -> SweepSpec:
    if not isinstance(raw, Mapping):
        raise ConfigError("sweep: expected an object")
    allowed = {"parameter", "start", "stop", "steps", "values", "scenario"}
    unknown = sorted(set(raw) - allowed)
    if unknown:
        raise ConfigError(f"unknown key: 'sweep.{unknown[0]}'")
    parameter = raw.get("parameter")
    if not isinstance(parameter, str) or not parameter:
        raise ConfigError("sweep.parameter: expected a dotted path")
    scenario = raw.get("scenario")
    if scenario is not None and scenario not in SCENARIOS:
        raise ConfigError(f"sweep.scenario: unknown scenario {scenario!r}")
    if "values" in raw:
        if any(k in raw for k in ("start", "stop", "steps")):
            raise ConfigError("sweep: give either values or start/stop/steps, not both")
        values = raw["values"]
        if not isinstance(values, list) or len(values) < 2:
            raise ConfigError("sweep.values: expected a list of at least 2 numbers")
        samples = tuple(_number("sweep.values", v) for v in values)
    else:
        missing = [k for k in ("start", "stop", "steps") if k not in raw]
        if missing:
            raise ConfigError(f"sweep: missing {missing[0]!r}")
        start = _number("sweep.start", raw["start"])
        stop = _number("sweep.stop", raw["stop"])
        steps = raw["steps"]
        if isinstance(steps, bool) or not isinstance(steps, int) or steps < 2:
            raise ConfigError(f"sweep.steps: expected an integer >= 2, got {steps!r}")
        if steps > 100_000:
            raise ConfigError("sweep.steps: at most 100000 samples")
        samples = tuple(float(v) for v in np.linspace(start, stop, steps))
    # Every sample must be a valid value for the swept field.
    _require_numeric_path(parameter)
    for value in samples:
        apply_override(ModelParams(), parameter, value)
    return SweepSpec(parameter, samples, scenario)


def _require_numeric_path(path: str) -> None:
    node: Any = ModelParams()
    parts = path.split(".")
    for i, part in enumerate(parts):
        if isinstance(node, BaseInventory):
            try:
                node = node.get(part)
            except KeyError:
                raise ConfigError(f"sweep.parameter: unknown key: {path!r}") from None
            continue
        if isinstance(node, Mapping):
            if part not in node or i != len(parts) - 1:
                raise ConfigError(f"sweep.parameter: unknown key: {path!r}")
            return
        if not dataclasses.is_dataclass(node) or part not in {f.name for f in dataclasses.fields(node)}:
            raise ConfigError(f"sweep.parameter: unknown key: {path!r}")
        node = getattr(node, part)
    if dataclasses.is_dataclass(node) or isinstance(node, BaseInventory):
        raise ConfigError(f"sweep.parameter: {path!r} is a section, not a value")
    if isinstance(node, (bool, enum.Enum, str, tuple)):
        raise ConfigError(f"sweep.parameter: {path!r} is not numeric")


def resolve_config(data: Any, sets: Sequence[tuple[str, Any]] = ()) -> RunConfig:
    """Build a :class:`RunConfig` from parsed JSON plus ``--set`` overrides."""
    if data is None:
        data = {}
    if not isinstance(data, Mapping):
        raise ConfigError("config must be a JSON object")
    run: dict[str, Any] = {}
    model: dict[str, Any] = {}
    for key, value in data.items():
        if key in RUN_KEYS:
            run[key] = value
    rest = {k: v for k, v in data.items() if k not in RUN_KEYS}
    try:
        model.update(flatten(rest))
    except RecursionError:
        raise ConfigError("config nesting too deep") from None
    for path, value in sets:
        head = path.split(".")[0]
        if path in RUN_KEYS:
            run[path] = value
        elif head == "sweep":
            sweep = dict(run.get("sweep") or {})
            sweep[path[len("sweep."):]] = value
            run["sweep"] = sweep
        else:
            model.update(flatten({path: value}) if isinstance(value, Mapping) else {path: value})

    params = ModelParams()
    applied = []
    for path, value in model.items():
        params = apply_override(params, path, value)
        applied.append((path, value))

    scenarios = run.get("scenarios", ["human-printed"])
    if isinstance(scenarios, str):
        scenarios = [scenarios]
    if not isinstance(scenarios, list) or not scenarios or not all(isinstance(s, str) for s in scenarios):
        raise ConfigError("scenarios: expected a non-empty list of scenario names")
    for s in scenarios:
        if s not in SCENARIOS:
            raise ConfigError(f"scenarios: unknown scenario {s!r}; choose from {sorted(SCENARIOS)}")
    registry = run.get("registry", False)
    if not isinstance(registry, bool):
        raise ConfigError(f"registry: expected true or false, got {registry!r}")
    fmt = run.get("format", "table")
    if fmt not in FORMATS:
        raise ConfigError(f"format: expected one of {list(FORMATS)}, got {fmt!r}")
    sweep = _parse_sweep(run["sweep"]) if run.get("sweep") is not None else None
    return RunConfig(params, tuple(scenarios), registry, fmt, sweep, tuple(applied))


def parse_set(item: str) -> tuple[str, Any]:
    """Split ``path=value``; the value is read as JSON, falling back to a string."""
    if item.count("=") < 1:
        raise ConfigError(f"invalid override {item!r}; expected path=value")
    path, _, raw = item.partition("=")
    path = path.strip()
    if not path or not raw:
        raise ConfigError(f"invalid override {item!r}; expected path=value")
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return path, value


def load_config(file: str | os.PathLike | None = None, sets: Sequence[str] = ()) -> RunConfig:
    """Read a config file (or the defaults) and apply ``path=value`` overrides.

    An empty file yields the published baseline. Raises :class:`ConfigError`
    for parse errors, unknown keys and out-of-range values, and ``OSError``
    when the file cannot be read.
    """
    data: Any = {}
    if file is not None:
        text = Path(file).read_text(encoding="utf-8")
        data = parse_json(text, str(file)) if text.strip() else {}
    return resolve_config(data, [parse_set(s) for s in sets])


def loads_config(text: str, sets: Sequence[str] = ()) -> RunConfig:
    data = parse_json(text) if text.strip() else {}
    return resolve_config(data, [parse_set(s) for s in sets])


def default_config_path() -> str | None:
    return os.environ.get(CONFIG_ENV_VAR) or None
