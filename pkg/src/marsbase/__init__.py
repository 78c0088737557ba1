"""Energy and sizing model for a water-exporting Mars mining base."""

from .catalog import (
    HYDRATE,
    QUARTZ_SAND,
    STEEL,
    WATER,
    BaseInventory,
    Environment,
    Geometry,
    Material,
    StructureSpec,
    default_inventory,
    structure_volume,
)
from .config import RunConfig, apply_override, load_config
from .construction import (
    ConstructionMethod,
    base_construction_energy,
    build_time,
    frame_and_block_energy,
    printed_reinforced_energy,
    sinter_energy,
)
from .errors import ConfigError, DomainError, MarsBaseError
from .operations import (
    CrewProfile,
    ExcavationMode,
    ExcavationParams,
    ExtractionMode,
    ExtractionParams,
    HaulParams,
    MassDriverParams,
    crew_energy,
    drag_adjusted_velocity,
    excavation_energy,
    haul_energy,
    mass_driver_energy,
    water_extraction_energy,
)
from .power import PlantKind, PowerPlant, SizingProfile, daily_harvest, required_area
from .report import emit_report
from .scenarios import (
    SCENARIOS,
    EnergyBreakdown,
    ModelParams,
    Scenario,
    construction_comparison,
    operations_breakdown,
    reconcile,
)
from .sweep import run_sweep

__version__ = "0.1.0"
