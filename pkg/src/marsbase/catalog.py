"""Environment constants, material records and the base structure catalog.

Volumes returned here are the construction-material volume of a single unit
of a structure, before its quantity multiplier.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field, replace
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import ConfigError, DomainError

EARTH_INSOLATION = 1350.0  # W/m², ceiling for surface insolation


def _require_positive(owner: str, **values: float) -> None:
    for name, value in values.items():
        if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
            raise DomainError(f"{owner}.{name} must be finite and > 0, got {value!r}")


def _require_nonnegative(owner: str, **values: float) -> None:
    for name, value in values.items():
        if not (isinstance(value, (int, float)) and math.isfinite(value) and value >= 0):
            raise DomainError(f"{owner}.{name} must be finite and >= 0, got {value!r}")


@dataclass(frozen=True)
class Environment:
    gravity: float = 3.71  # m/s²
    insolation: float = 540.0  # W/m²
    sunlight_hours_per_sol: float = 7.0
    sol_length: float = 24.6  # h
    atmosphere_density_at_driver: float = 0.02  # kg/m³

    def __post_init__(self) -> None:
        _require_positive(
            "environment",
            gravity=self.gravity,
            insolation=self.insolation,
            sunlight_hours_per_sol=self.sunlight_hours_per_sol,
            sol_length=self.sol_length,
            atmosphere_density_at_driver=self.atmosphere_density_at_driver,
        )
        if self.insolation > EARTH_INSOLATION:
            raise DomainError(
                f"environment.insolation {self.insolation} exceeds {EARTH_INSOLATION} W/m²"
            )
        if self.sunlight_hours_per_sol > self.sol_length:
            raise DomainError("environment.sunlight_hours_per_sol exceeds sol_length")

    @property
    def sunlight_seconds(self) -> float:
        return self.sunlight_hours_per_sol * 3600.0


@dataclass(frozen=True)
class Material:
    """Thermophysical record used by the heating and melting energy terms.

    ``heat_capacity`` is in kJ/(kg K), ``delta_T`` is the temperature rise the
    process needs (K) and ``latent_heat`` (kJ/kg) is the melt or embodied heat.
    """

    name: str
    density: float  # kg/m³
    heat_capacity: float
    delta_T: float
    latent_heat: float

    def __post_init__(self) -> None:
        _require_positive(self.name, density=self.density, heat_capacity=self.heat_capacity)
        _require_nonnegative(self.name, delta_T=self.delta_T, latent_heat=self.latent_heat)

    @property
    def specific_energy(self) -> float:
        """Energy to heat and melt one kilogram, kJ/kg."""
        return self.heat_capacity * self.delta_T + self.latent_heat

    @property
    def volumetric_energy(self) -> float:
        """Energy to heat and melt one cubic metre, kJ/m³."""
        return self.density * self.specific_energy


QUARTZ_SAND = Material("quartz_sand", density=1500.0, heat_capacity=0.830, delta_T=1973.0, latent_heat=156.0)
# Embodied heat of steel reduced from local iron oxides, taken as 25.23 MJ/kg.
STEEL = Material("steel", density=7750.0, heat_capacity=0.510, delta_T=1640.0, latent_heat=25230.0)
WATER = Material("water", density=1000.0, heat_capacity=4.186, delta_T=86.0, latent_heat=2257.0)
HYDRATE = Material("mgcl2_hexahydrate", density=1569.0, heat_capacity=0.756, delta_T=86.0, latent_heat=138.0)


class Geometry(str, enum.Enum):
    SLAB = "slab"
    DOME_SHELL = "dome_shell"
    TANK = "tank"
    PAD_WITH_WALLS = "pad_with_walls"
    TOWER = "tower"
    MASS_DRIVER_TUBE = "mass_driver_tube"
    WALKWAY_TUBE = "walkway_tube"


# Dimensions each geometry's volume formula consumes.
GEOMETRY_DIMS: dict[Geometry, tuple[str, ...]] = {
    Geometry.SLAB: ("length", "width", "depth"),
    Geometry.DOME_SHELL: ("outer_radius", "inner_radius", "depth"),
    Geometry.TANK: ("radius", "thickness", "height"),
    Geometry.PAD_WITH_WALLS: ("length", "width", "depth", "wall_height"),
    Geometry.TOWER: ("height", "base_length", "top_length"),
    Geometry.MASS_DRIVER_TUBE: (
        "inner_radius", "length", "thickness", "post_height", "post_width", "post_spacing",
    ),
    Geometry.WALKWAY_TUBE: ("length", "outer_radius", "inner_radius"),
}

# Dimensions that are recorded with a structure but enter no formula.
OPTIONAL_DIMS: dict[Geometry, tuple[str, ...]] = {
    Geometry.MASS_DRIVER_TUBE: ("slope_deg",),
}


@dataclass(frozen=True)
class StructureSpec:
    """One catalog row: geometry, dimensions in metres and material ratios.

    ``steel_ratio`` is the volumetric steel fraction for printed construction;
    ``block_fraction`` is the fraction of the printed volume that is melted when
    the structure is instead built as a steel frame with sand blocks.
    """

    key: str
    name: str
    quantity: int
    geometry: Geometry
    dims: Mapping[str, float]
    steel_ratio: float
    block_fraction: float = 0.15
    human_only: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "geometry", Geometry(self.geometry))
        object.__setattr__(self, "dims", MappingProxyType(dict(self.dims)))
        if isinstance(self.quantity, bool) or not isinstance(self.quantity, int) or self.quantity < 1:
            raise DomainError(f"{self.key}.quantity must be an integer >= 1, got {self.quantity!r}")
        if not (isinstance(self.steel_ratio, (int, float)) and 0.0 <= self.steel_ratio <= 1.0):
            raise DomainError(f"{self.key}.steel_ratio must lie in [0, 1], got {self.steel_ratio!r}")
        if not (isinstance(self.block_fraction, (int, float)) and 0.0 < self.block_fraction <= 1.0):
            raise DomainError(f"{self.key}.block_fraction must lie in (0, 1], got {self.block_fraction!r}")
        required = GEOMETRY_DIMS[self.geometry]
        allowed = set(required) | set(OPTIONAL_DIMS.get(self.geometry, ()))
        missing = [d for d in required if d not in self.dims]
        unknown = sorted(set(self.dims) - allowed)
        if missing:
            raise DomainError(f"{self.key}: missing dimensions {missing} for {self.geometry.value}")
        if unknown:
            raise DomainError(f"{self.key}: unknown dimensions {unknown} for {self.geometry.value}")
        for name, value in self.dims.items():
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value) or value < 0:
                raise DomainError(f"{self.key}.dims.{name} must be finite and >= 0, got {value!r}")
        if self.geometry in (Geometry.DOME_SHELL, Geometry.WALKWAY_TUBE):
            if self.dims["inner_radius"] > self.dims["outer_radius"]:
                raise DomainError(f"{self.key}: inner_radius exceeds outer_radius")
        if self.geometry is Geometry.MASS_DRIVER_TUBE and self.dims["post_spacing"] <= 0:
            raise DomainError(f"{self.key}.dims.post_spacing must be > 0")

    def with_dims(self, **dims: float) -> "StructureSpec":
        return replace(self, dims={**self.dims, **dims})


def structure_volume(spec: StructureSpec) -> float:
    """Construction-material volume (m³) of one unit of ``spec``."""
    d = spec.dims
    g = spec.geometry
    if g is Geometry.SLAB:
        return d["length"] * d["width"] * d["depth"]
    if g is Geometry.DOME_SHELL:
        ro, ri = d["outer_radius"], d["inner_radius"]
        return (2.0 / 3.0) * math.pi * (ro**3 - ri**3) + math.pi * d["depth"] * ro**2
    if g is Geometry.TANK:
        r, t, h = d["radius"], d["thickness"], d["height"]
        return 2.0 * math.pi * r**2 * t + 2.0 * math.pi * r * h * t
    if g is Geometry.PAD_WITH_WALLS:
        # Blast walls on three sides only: two long walls, one short wall.
        L, W, D, H = d["length"], d["width"], d["depth"], d["wall_height"]
        return L * W * D + 2.0 * L * H * D + W * H * D
    if g is Geometry.TOWER:
        H, L1, L2 = d["height"], d["base_length"], d["top_length"]
        return H * L2**2 + H * (L1 - L2) * L2
    if g is Geometry.MASS_DRIVER_TUBE:
        # A pair of annular tubes plus support posts every post_spacing metres.
        R, T, L = d["inner_radius"], d["thickness"], d["length"]
        tubes = 2.0 * math.pi * L * ((R + T) ** 2 - R**2)
        posts = (L / d["post_spacing"]) * 2.0 * d["post_height"] * d["post_width"] ** 2
        return tubes + posts
    if g is Geometry.WALKWAY_TUBE:
        return math.pi * (d["outer_radius"] ** 2 - d["inner_radius"] ** 2) * d["length"]
    raise DomainError(f"unsupported geometry {g!r}")


def unused_dimensions(spec: StructureSpec) -> dict[str, float]:
    """Dimensions carried by ``spec`` that no volume formula reads."""
    used = set(GEOMETRY_DIMS[spec.geometry])
    return {k: v for k, v in spec.dims.items() if k not in used}


@dataclass(frozen=True)
class BaseInventory:
    structures: tuple[StructureSpec, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "structures", tuple(self.structures))
        keys = [s.key for s in self.structures]
        names = [s.name for s in self.structures]
        if len(set(keys)) != len(keys) or len(set(names)) != len(names):
            raise DomainError("structure keys and names must be unique")

    def __iter__(self):
        return iter(self.structures)

    def __len__(self) -> int:
        return len(self.structures)

    def get(self, key: str) -> StructureSpec:
        for s in self.structures:
            if s.key == key:
                return s
        raise KeyError(key)

    def select(self, include_human_only: bool) -> "BaseInventory":
        if include_human_only:
            return self
        return BaseInventory(tuple(s for s in self.structures if not s.human_only))

    def replace_structure(self, spec: StructureSpec) -> "BaseInventory":
        self.get(spec.key)
        return BaseInventory(tuple(spec if s.key == spec.key else s for s in self.structures))

    def total_volume(self) -> float:
        total = 0.0
        for s in self.structures:
            total += s.quantity * structure_volume(s)
        return total


def default_inventory() -> BaseInventory:
    """The fourteen-row Mars mining base, human-only rows flagged."""
    S = StructureSpec
    G = Geometry
    return BaseInventory((
        S("road", "Road Network", 1, G.SLAB,
          {"length": 12000.0, "width": 8.0, "depth": 0.2}, 0.05, block_fraction=0.05),
        S("refinery", "H2O Extract Refinery", 1, G.DOME_SHELL,
          {"outer_radius": 50.0, "inner_radius": 49.6, "depth": 0.3}, 0.1),
        S("service", "Comms, Command, Control, Service and Repair, Power Ctrl", 6, G.DOME_SHELL,
          {"outer_radius": 25.0, "inner_radius": 24.6, "depth": 0.3}, 0.1),
        S("control_tower", "Control Tower", 1, G.TOWER,
          {"height": 150.0, "base_length": 25.0, "top_length": 5.0}, 0.1),
        S("warehouse", "Warehouses", 6, G.DOME_SHELL,
          {"outer_radius": 25.0, "inner_radius": 24.8, "depth": 0.3}, 0.1),
        S("fuel_storage", "Fuel Storage", 6, G.TANK,
          {"radius": 25.0, "thickness": 0.1, "height": 2.0}, 0.05),
        S("small_pad", "Small Landing Pad", 3, G.PAD_WITH_WALLS,
          {"length": 100.0, "width": 50.0, "depth": 0.2, "wall_height": 0.5}, 0.05),
        S("large_pad", "Large Landing Pad", 3, G.PAD_WITH_WALLS,
          {"length": 100.0, "width": 100.0, "depth": 0.2, "wall_height": 0.5}, 0.05),
        S("power_pad", "Power Generation Pad", 1, G.SLAB,
          {"length": 1000.0, "width": 1000.0, "depth": 0.1}, 0.05, block_fraction=0.05),
        S("mass_driver", "Mass Driver", 1, G.MASS_DRIVER_TUBE,
          {"inner_radius": 3.0, "length": 10000.0, "thickness": 0.5, "post_height": 5.0,
           "post_width": 1.0, "post_spacing": 20.0, "slope_deg": 5.0}, 0.05),
        S("o2_extractor", "O2 from CO2 Atm. Extract", 6, G.TANK,
          {"radius": 50.0, "thickness": 0.2, "height": 3.0}, 0.2, human_only=True),
        S("services_centre", "Human Services Centres", 2, G.DOME_SHELL,
          {"outer_radius": 50.0, "inner_radius": 49.6, "depth": 0.3}, 0.1, human_only=True),
        S("habitat", "Human Habitat", 100, G.DOME_SHELL,
          {"outer_radius": 6.0, "inner_radius": 5.9, "depth": 0.1}, 0.2, human_only=True),
        S("walkway", "Human Walkways (Service Tubes)", 1, G.WALKWAY_TUBE,
          {"length": 10000.0, "outer_radius": 1.1, "inner_radius": 1.0}, 0.1, human_only=True),
    ))


_ROW_FIELDS = {"name", "quantity", "steel_ratio", "block_fraction", "human_only", "dims"}


def apply_catalog_overrides(inventory: BaseInventory, overrides: Mapping[str, object]) -> BaseInventory:
    """Return ``inventory`` with row fields replaced per ``{key: {field: value}}``.

    ``dims`` is merged dimension by dimension. Unknown rows or fields raise
    :class:`ConfigError`; values that break an invariant raise :class:`DomainError`.
    """
    if not isinstance(overrides, Mapping):
        raise ConfigError("catalog overrides must be an object keyed by structure key")
    result = inventory
    for key, row in overrides.items():
        try:
            spec = result.get(key)
        except KeyError:
            raise ConfigError(f"unknown structure key: {key!r}") from None
        if not isinstance(row, Mapping):
            raise ConfigError(f"catalog.{key} must be an object")
        unknown = sorted(set(row) - _ROW_FIELDS)
        if unknown:
            raise ConfigError(f"unknown field catalog.{key}.{unknown[0]}")
        changes = dict(row)
        if "dims" in changes:
            dims = changes["dims"]
            if not isinstance(dims, Mapping):
                raise ConfigError(f"catalog.{key}.dims must be an object")
            allowed = set(GEOMETRY_DIMS[spec.geometry]) | set(OPTIONAL_DIMS.get(spec.geometry, ()))
            bad = sorted(set(dims) - allowed)
            if bad:
                raise ConfigError(f"unknown field catalog.{key}.dims.{bad[0]}")
            changes["dims"] = {**spec.dims, **dims}
        result = result.replace_structure(replace(spec, **changes))
    return result


def load_catalog_overrides(path: str | Path, inventory: BaseInventory | None = None) -> BaseInventory:
    """Read a JSON file of row overrides and apply it to ``inventory``."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text) if text.strip() else {}
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return apply_catalog_overrides(inventory or default_inventory(), data)


def structure_keys(inventory: Iterable[StructureSpec]) -> list[str]:
    return [s.key for s in inventory]
