"""One-at-a-time sensitivity sweeps over a single dotted-path parameter."""

from __future__ import annotations

from dataclasses import dataclass

from .config import RunConfig, apply_override
from .errors import ConfigError
from .power import PlantKind, required_area
from .scenarios import EnergyBreakdown, ModelParams, get_scenario, operations_breakdown


@dataclass(frozen=True)
class SweepSample:
    value: float
    breakdown: EnergyBreakdown
    deltas: dict[str, float]  # category → MJ relative to the baseline
    solar_thermal_area: float  # m²
    pv_area: float  # m²

    @property
    def total(self) -> float:
        return self.breakdown.total


@dataclass(frozen=True)
class SweepResult:
    parameter: str
    scenario: str
    registry: bool
    baseline: EnergyBreakdown
    samples: tuple[SweepSample, ...]


def _evaluate(params: ModelParams, scenario: str, registry: bool) -> tuple[EnergyBreakdown, float, float]:
    breakdown = operations_breakdown(get_scenario(scenario), params, registry=registry)
    plant = params.plant
    env = params.environment
    thermal = required_area(breakdown.total, PlantKind.SOLAR_THERMAL, env, plant.sizing_profile)
    pv = required_area(breakdown.total, PlantKind.PHOTOVOLTAIC, env, plant.sizing_profile)
    return breakdown, thermal, pv


def run_sweep(cfg: RunConfig) -> SweepResult:
    """Evaluate the operations breakdown once per sweep value, in order.

    The baseline is ``cfg.params`` untouched; deltas are taken against it
    category by category.
    """
    if cfg.sweep is None:
        raise ConfigError("no sweep configured; add a 'sweep' section or --set sweep.parameter=...")
    spec = cfg.sweep
    scenario = spec.scenario or cfg.scenarios[0]
    baseline, _, _ = _evaluate(cfg.params, scenario, cfg.registry)
    samples = []
    for value in spec.values:
        params = apply_override(cfg.params, spec.parameter, value)
        breakdown, thermal, pv = _evaluate(params, scenario, cfg.registry)
        deltas = {k: breakdown.categories[k] - baseline.categories[k] for k in baseline.categories}
        deltas["total"] = breakdown.total - baseline.total
        samples.append(SweepSample(value, breakdown, deltas, thermal, pv))
    return SweepResult(spec.parameter, scenario, cfg.registry, baseline, tuple(samples))
