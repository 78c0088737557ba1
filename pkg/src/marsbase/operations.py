"""Per-sol operating energy: water extraction, haulage, excavation, export, crew."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .catalog import Environment
from .errors import DomainError

KJ_PER_MJ = 1000.0
J_PER_MJ = 1.0e6
MJ_PER_KWH = 3.6


def _check(owner: str, positive=(), nonnegative=(), **values: float) -> None:
    for name, value in values.items():
        if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
            raise DomainError(f"{owner}.{name} must be a finite number, got {value!r}")
        if name in positive and value <= 0:
            raise DomainError(f"{owner}.{name} must be > 0, got {value!r}")
        if name in nonnegative and value < 0:
            raise DomainError(f"{owner}.{name} must be >= 0, got {value!r}")


class ExtractionMode(str, enum.Enum):
    # Latent heat of the water inside the temperature-rise bracket, as printed.
    AS_WRITTEN = "as_written"
    # Latent heat applied once per kilogram of water.
    LATENT_ONCE = "latent_once"


class ExcavationMode(str, enum.Enum):
    AS_WRITTEN = "as_written"
    ROUND_TRIP = "round_trip"


@dataclass(frozen=True)
class ExtractionParams:
    """Baking hydrated regolith to release water. Fractions are mass percent."""

    water_mass_per_sol: float = 100_000.0  # kg
    water_fraction: float = 5.0
    hydrate_fraction: float = 9.4
    residue_fraction: float = 4.42
    sand_fraction: float = 90.6
    dehydration_heat: float = 138.0  # kJ/kg hydrate
    hydrate_heat_capacity: float = 0.756  # kJ/(kg K)
    sand_heat_capacity: float = 0.830
    bake_T: float = 111.0  # °C
    ambient_T: float = 25.0
    water_heat_capacity: float = 4.186
    water_latent_heat: float = 2257.0  # kJ/kg
    mode: ExtractionMode = ExtractionMode.LATENT_ONCE

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", ExtractionMode(self.mode))
        _check("extraction", positive=(
            "water_fraction", "hydrate_fraction", "residue_fraction", "sand_fraction",
            "hydrate_heat_capacity", "sand_heat_capacity", "water_heat_capacity"),
            nonnegative=("water_mass_per_sol", "dehydration_heat", "water_latent_heat"),
            water_mass_per_sol=self.water_mass_per_sol, water_fraction=self.water_fraction,
            hydrate_fraction=self.hydrate_fraction, residue_fraction=self.residue_fraction,
            sand_fraction=self.sand_fraction, dehydration_heat=self.dehydration_heat,
            hydrate_heat_capacity=self.hydrate_heat_capacity,
            sand_heat_capacity=self.sand_heat_capacity, bake_T=self.bake_T,
            ambient_T=self.ambient_T, water_heat_capacity=self.water_heat_capacity,
            water_latent_heat=self.water_latent_heat)
        # The residue is what is left of the hydrate once its water is driven off.
        if abs(self.water_fraction + self.residue_fraction - self.hydrate_fraction) > 0.05:
            raise DomainError("extraction: water_fraction + residue_fraction must equal hydrate_fraction (±0.05)")
        if abs(self.hydrate_fraction + self.sand_fraction - 100.0) > 0.05:
            raise DomainError("extraction: hydrate_fraction + sand_fraction must equal 100 (±0.05)")
        if self.bake_T <= self.ambient_T:
            raise DomainError("extraction: bake_T must exceed ambient_T")


def water_extraction_energy(p: ExtractionParams) -> float:
    """Energy (MJ/sol) to bake ``p.water_mass_per_sol`` kg of water out of regolith."""
    m = p.water_mass_per_sol
    dT = p.bake_T - p.ambient_T
    dehydration = m * p.dehydration_heat * (p.hydrate_fraction / p.water_fraction)
    # Water carried twice: heated with the charge and cooled back on condensing.
    sensible = m * (2.0 * p.water_heat_capacity
                    + p.hydrate_heat_capacity * (p.residue_fraction / p.water_fraction)
                    + p.sand_heat_capacity * (p.sand_fraction / p.water_fraction))
    latent = m * p.water_latent_heat
    if p.mode is ExtractionMode.AS_WRITTEN:
        kj = dehydration + dT * (sensible + latent)
    else:
        kj = dehydration + dT * sensible + latent
    return kj / KJ_PER_MJ


@dataclass(frozen=True)
class HaulParams:
    """Ground transport by wheeled vehicle.

    ``mass_multiplier`` converts the delivered water mass to the mass actually
    moved: 20 for raw regolith at 5 % water, 1 for processed water.
    """

    payload: float = 100_000.0  # kg of water
    distance: float = 2000.0  # m
    friction_coeff: float = 0.05
    movement_ratio: float = 1.2
    mass_multiplier: float = 20.0

    def __post_init__(self) -> None:
        _check("haul", positive=("friction_coeff", "movement_ratio", "mass_multiplier"),
               nonnegative=("payload", "distance"),
               payload=self.payload, distance=self.distance, friction_coeff=self.friction_coeff,
               movement_ratio=self.movement_ratio, mass_multiplier=self.mass_multiplier)
        if self.friction_coeff > 1:
            raise DomainError("haul.friction_coeff must be <= 1")


RAW_REGOLITH_HAUL = HaulParams()
PROCESSED_WATER_HAUL = HaulParams(distance=1000.0, friction_coeff=0.01, movement_ratio=1.0,
                                  mass_multiplier=1.0)


def haul_energy(p: HaulParams, env: Environment) -> float:
    """Rolling-friction work (MJ) to move the payload ``p.distance`` metres."""
    return (p.mass_multiplier * p.payload * env.gravity * p.friction_coeff
            * p.distance * p.movement_ratio / J_PER_MJ)


@dataclass(frozen=True)
class ExcavationParams:
    dig_force: float = 3000.0  # N
    robot_footprint: float = 0.42  # m²
    regolith_density: float = 1500.0  # kg/m³
    friction_coeff: float = 0.1
    movement_ratio: float = 1.2
    roundtrip_factor: float = 2.0
    regolith_per_water: float = 20.0  # kg regolith per kg water
    mode: ExcavationMode = ExcavationMode.ROUND_TRIP

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", ExcavationMode(self.mode))
        _check("excavation", positive=(
            "dig_force", "robot_footprint", "regolith_density", "friction_coeff",
            "movement_ratio", "roundtrip_factor", "regolith_per_water"),
            dig_force=self.dig_force, robot_footprint=self.robot_footprint,
            regolith_density=self.regolith_density, friction_coeff=self.friction_coeff,
            movement_ratio=self.movement_ratio, roundtrip_factor=self.roundtrip_factor,
            regolith_per_water=self.regolith_per_water)


def excavation_energy(p: ExcavationParams, m: float, env: Environment) -> float:
    """Digging energy (MJ/sol) to mine the regolith holding ``m`` kg of water.

    In round-trip mode the vehicle sweeps the pit floor: the regolith volume
    divided by the robot footprint gives a traverse length, walked out and back.
    The as-written mode keeps the printed bracket ``k / ((m/rho) * A)``.
    """
    _check("excavation", nonnegative=("m",), m=m)
    if m == 0:
        return 0.0
    force = p.movement_ratio * p.dig_force + p.regolith_per_water * m * env.gravity * p.friction_coeff
    if p.mode is ExcavationMode.ROUND_TRIP:
        traverse = p.roundtrip_factor * (p.regolith_per_water * m / p.regolith_density) / p.robot_footprint
    else:
        traverse = p.regolith_per_water / ((m / p.regolith_density) * p.robot_footprint)
    return force * traverse / J_PER_MJ


@dataclass(frozen=True)
class MassDriverParams:
    payload_mass: float = 100_000.0  # kg
    container_mass: float = 10_000.0  # kg
    target_speed: float = 5000.0  # m/s
    drag_distance: float = 40_000.0  # m
    drag_coeff: float = 0.01
    frontal_area: float = 7.06  # m²
    air_density: float = 0.02  # kg/m³
    # Not a source value: chosen so the launch energy meets the reported total.
    launcher_efficiency: float = 0.55

    def __post_init__(self) -> None:
        _check("mass_driver", positive=("target_speed",),
               nonnegative=("payload_mass", "container_mass", "drag_distance", "drag_coeff",
                            "frontal_area", "air_density"),
               payload_mass=self.payload_mass, container_mass=self.container_mass,
               target_speed=self.target_speed, drag_distance=self.drag_distance,
               drag_coeff=self.drag_coeff, frontal_area=self.frontal_area,
               air_density=self.air_density, launcher_efficiency=self.launcher_efficiency)
        if not (0.0 < self.launcher_efficiency <= 1.0):
            raise DomainError(f"mass_driver.launcher_efficiency must lie in (0, 1], got {self.launcher_efficiency!r}")

    @property
    def total_mass(self) -> float:
        return self.payload_mass + self.container_mass


def drag_adjusted_velocity(p: MassDriverParams) -> float:
    """Muzzle speed (m/s) whose kinetic energy also pays for atmospheric drag."""
    if p.total_mass <= 0:
        raise DomainError("mass driver total mass must be > 0")
    v2 = p.target_speed**2
    drag = p.air_density * p.drag_coeff * p.frontal_area * v2 * p.drag_distance
    return math.sqrt(v2 + drag / p.total_mass)


def mass_driver_energy(p: MassDriverParams) -> float:
    """Electrical energy (MJ) per launch, kinetic energy over launcher efficiency."""
    if p.total_mass == 0:
        return 0.0
    v_star = drag_adjusted_velocity(p)
    return 0.5 * p.total_mass * v_star**2 / p.launcher_efficiency / J_PER_MJ


@dataclass(frozen=True)
class FoodItem:
    name: str
    production_energy: float  # MJ per kg produced
    mass_per_person: float  # kg per person per sol


DEFAULT_FOOD_BASKET = (
    FoodItem("corn", 1.1, 0.306),
    FoodItem("milk", 2.2, 0.18),
    FoodItem("fruits_vegetables", 4.4, 0.864),
    FoodItem("eggs", 8.36, 0.09),
    FoodItem("chicken", 8.8, 0.09),
    FoodItem("cheese", 17.6, 0.09),
    FoodItem("goat", 30.8, 0.09),
    FoodItem("beef", 70.4, 0.09),
)


@dataclass(frozen=True)
class CrewProfile:
    headcount: float = 100
    o2_moles_per_person: float = 98.2  # mol/sol
    o2_energy: float = 566.0  # kJ/mol
    electricity_per_person: float = 15.0  # kWh/sol
    water_per_person: float = 300.0  # L/sol
    # Ledger value for a crew of 100; scaled linearly with headcount.
    water_energy_total: float = 10_800.0  # MJ/sol
    food_basket: tuple[FoodItem, ...] = field(default=DEFAULT_FOOD_BASKET)
    food_waste_multiplier: float = 2.0

    def __post_init__(self) -> None:
        basket = tuple(f if isinstance(f, FoodItem) else FoodItem(*f) for f in self.food_basket)
        object.__setattr__(self, "food_basket", basket)
        _check("crew", nonnegative=("headcount", "o2_moles_per_person", "o2_energy",
                                    "electricity_per_person", "water_per_person",
                                    "water_energy_total"),
               positive=("food_waste_multiplier",),
               headcount=self.headcount, o2_moles_per_person=self.o2_moles_per_person,
               o2_energy=self.o2_energy, electricity_per_person=self.electricity_per_person,
               water_per_person=self.water_per_person, water_energy_total=self.water_energy_total,
               food_waste_multiplier=self.food_waste_multiplier)
        for item in basket:
            _check(f"crew.food.{item.name}", nonnegative=("production_energy", "mass_per_person"),
                   production_energy=item.production_energy, mass_per_person=item.mass_per_person)
        mass = math.fsum(item.mass_per_person for item in basket)
        if abs(mass - 1.8) > 1e-9:
            raise DomainError(f"crew food basket must total 1.8 kg per person, got {mass}")

    def food_per_person(self) -> float:
        """Production energy (MJ) of one person's daily basket, before waste."""
        total = 0.0
        for item in self.food_basket:
            total += item.production_energy * item.mass_per_person
        return total


CREW_CATEGORIES = ("oxygen", "electricity", "water", "food")


def crew_energy(c: CrewProfile) -> dict[str, float]:
    """Life-support energy per sol (MJ) by category, plus ``total``."""
    h = c.headcount
    out = {
        "oxygen": h * c.o2_moles_per_person * c.o2_energy / KJ_PER_MJ,
        "electricity": h * c.electricity_per_person * MJ_PER_KWH,
        "water": (h / 100.0) * c.water_energy_total,
        "food": h * c.food_waste_multiplier * c.food_per_person(),
    }
    total = 0.0
    for key in CREW_CATEGORIES:
        total += out[key]
    out["total"] = total
    return out
