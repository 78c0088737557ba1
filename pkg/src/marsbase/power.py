"""Solar-thermal and photovoltaic plant sizing."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .catalog import Environment
from .errors import DomainError

MJ = 1.0e6


class PlantKind(str, enum.Enum):
    SOLAR_THERMAL = "solar_thermal"
    PHOTOVOLTAIC = "photovoltaic"


class SizingProfile(str, enum.Enum):
    # "paper" sizes solar-thermal plants with no conversion loss; "engineering"
    # applies the collector efficiency to both kinds.
    PAPER = "paper"
    ENGINEERING = "engineering"


DEFAULT_EFFICIENCY = {
    PlantKind.SOLAR_THERMAL: 0.99,  # carbon-nanotube absorbers
    PlantKind.PHOTOVOLTAIC: 0.45,
}


@dataclass(frozen=True)
class PowerPlant:
    kind: PlantKind
    area: float  # m²
    efficiency: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", PlantKind(self.kind))
        if not (math.isfinite(self.area) and self.area >= 0):
            raise DomainError(f"plant area must be finite and >= 0, got {self.area!r}")
        if not (0.0 < self.efficiency <= 1.0):
            raise DomainError(f"plant efficiency must lie in (0, 1], got {self.efficiency!r}")


def sizing_efficiency(kind: PlantKind | str, profile: SizingProfile | str = SizingProfile.PAPER,
                      efficiency: float | None = None) -> float:
    """Conversion factor used when sizing a plant of ``kind``.

    An explicit ``efficiency`` overrides the kind default. Under the ``paper``
    profile a solar-thermal plant is sized with factor 1.
    """
    kind = PlantKind(kind)
    profile = SizingProfile(profile)
    if kind is PlantKind.SOLAR_THERMAL and profile is SizingProfile.PAPER:
        return 1.0
    value = DEFAULT_EFFICIENCY[kind] if efficiency is None else efficiency
    if not (0.0 < value <= 1.0):
        raise DomainError(f"efficiency must lie in (0, 1], got {value!r}")
    return value


def required_area(energy_per_sol: float, kind: PlantKind | str, env: Environment,
                  profile: SizingProfile | str = SizingProfile.PAPER,
                  efficiency: float | None = None) -> float:
    """Collector area (m²) that harvests ``energy_per_sol`` MJ in one sol."""
    if not (math.isfinite(energy_per_sol) and energy_per_sol >= 0):
        raise DomainError(f"energy per sol must be finite and >= 0, got {energy_per_sol!r}")
    factor = sizing_efficiency(kind, profile, efficiency)
    return energy_per_sol * MJ / (env.sunlight_seconds * env.insolation * factor)


def size_plant(energy_per_sol: float, kind: PlantKind | str, env: Environment,
               profile: SizingProfile | str = SizingProfile.PAPER,
               efficiency: float | None = None) -> PowerPlant:
    factor = sizing_efficiency(kind, profile, efficiency)
    area = required_area(energy_per_sol, kind, env, profile, efficiency)
    return PowerPlant(PlantKind(kind), area, factor)


def daily_harvest(plant: PowerPlant, env: Environment) -> float:
    """Energy (MJ) collected by ``plant`` over the sunlit part of one sol."""
    return plant.area * env.insolation * env.sunlight_seconds * plant.efficiency / MJ
