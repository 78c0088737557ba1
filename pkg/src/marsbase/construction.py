"""Construction energy for the two building methods, and build time."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .catalog import (
    QUARTZ_SAND,
    STEEL,
    BaseInventory,
    Environment,
    Material,
    StructureSpec,
    structure_volume,
)
from .errors import DomainError
from .power import PowerPlant, daily_harvest

KJ_PER_MJ = 1000.0


class ConstructionMethod(str, enum.Enum):
    # Sintered silica shells with steel rebar.
    PRINTED_REINFORCED = "printed_reinforced"
    # Steel support frame filled with sand blocks.
    FRAME_AND_BLOCK = "frame_and_block"


@dataclass(frozen=True)
class ConstructionEnergyReport:
    """Per-structure unit energies (MJ) and the quantity-weighted total."""

    method: ConstructionMethod
    per_structure: dict[str, float]
    quantities: dict[str, int]
    total: float = field(init=False)

    def __post_init__(self) -> None:
        total = 0.0
        for key, energy in self.per_structure.items():
            total += self.quantities[key] * energy
        object.__setattr__(self, "total", total)

    def structure_totals(self) -> dict[str, float]:
        return {k: self.quantities[k] * e for k, e in self.per_structure.items()}

    def shares(self) -> dict[str, float]:
        totals = self.structure_totals()
        if self.total == 0:
            return {k: 0.0 for k in totals}
        return {k: v / self.total for k, v in totals.items()}


def sinter_energy(material: Material, volume: float, transport_distance: float = 0.0,
                  gravity: float = 3.71) -> float:
    """Heat, melt and optionally lift-transport ``volume`` m³ of ``material`` (MJ)."""
    if not (math.isfinite(volume) and volume >= 0):
        raise DomainError(f"volume must be finite and >= 0, got {volume!r}")
    if not (math.isfinite(transport_distance) and transport_distance >= 0):
        raise DomainError(f"transport distance must be finite and >= 0, got {transport_distance!r}")
    # g*d is J/kg; the thermal terms are kJ/kg.
    per_kg = material.specific_energy + gravity * transport_distance / 1000.0
    return material.density * volume * per_kg / KJ_PER_MJ


def printed_reinforced_energy(spec: StructureSpec, sand: Material = QUARTZ_SAND,
                              steel: Material = STEEL) -> float:
    """Unit energy (MJ) of a sintered structure with steel fraction ``spec.steel_ratio``."""
    volume = structure_volume(spec)
    s = spec.steel_ratio
    sand_part = sand.density * (1.0 - s) * volume * sand.specific_energy
    steel_part = s * volume * steel.density * steel.specific_energy
    return (sand_part + steel_part) / KJ_PER_MJ


def frame_and_block_energy(spec: StructureSpec, sand: Material = QUARTZ_SAND,
                           steel: Material = STEEL) -> float:
    """Unit energy (MJ) of a steel frame plus sand blocks, melted fraction ``block_fraction``."""
    mu = spec.block_fraction
    if not (0.0 < mu <= 1.0):
        raise DomainError(f"block fraction must lie in (0, 1], got {mu!r}")
    volume = structure_volume(spec)
    steel_part = steel.density * volume * mu * steel.specific_energy
    sand_part = sand.density * volume * mu * sand.specific_energy
    return (steel_part + sand_part) / KJ_PER_MJ


_METHOD_ENERGY = {
    ConstructionMethod.PRINTED_REINFORCED: printed_reinforced_energy,
    ConstructionMethod.FRAME_AND_BLOCK: frame_and_block_energy,
}


def structure_energy(spec: StructureSpec, method: ConstructionMethod | str,
                     sand: Material = QUARTZ_SAND, steel: Material = STEEL) -> float:
    return _METHOD_ENERGY[ConstructionMethod(method)](spec, sand, steel)


def base_construction_energy(inventory: BaseInventory, method: ConstructionMethod | str,
                             include_human_only: bool, sand: Material = QUARTZ_SAND,
                             steel: Material = STEEL) -> ConstructionEnergyReport:
    """Construction energy of every selected structure, in catalog order."""
    method = ConstructionMethod(method)
    selected = inventory.select(include_human_only)
    per_structure = {s.key: structure_energy(s, method, sand, steel) for s in selected}
    quantities = {s.key: s.quantity for s in selected}
    return ConstructionEnergyReport(method, per_structure, quantities)


def build_time(construction_total: float, plant: PowerPlant, env: Environment) -> float:
    """Sols needed to harvest ``construction_total`` MJ with ``plant``."""
    harvest = daily_harvest(plant, env)
    if harvest <= 0:
        raise DomainError("plant harvests no energy; build time is unbounded")
    return construction_total / harvest
