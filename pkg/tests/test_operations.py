import math
from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

# Physical magnitudes; subnormal floats lose exactness under doubling.
magnitude = st.one_of(st.just(0.0), st.floats(min_value=1e-6, max_value=1e9))

from marsbase import (
    CrewProfile,
    DomainError,
    Environment,
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
from marsbase.operations import PROCESSED_WATER_HAUL, RAW_REGOLITH_HAUL, FoodItem

ENV = Environment()


def extraction_oracle(m, latent_inside):
    """Term-by-term evaluation of the baking energy (kJ → MJ)."""
    dehydration = 138.0 * m * 9.4 / 5.0
    water_sensible = 2 * 4.186 * m
    residue_sensible = 0.756 * (4.42 / 5.0) * m
    sand_sensible = 0.830 * (90.6 / 5.0) * m
    latent = 2257.0 * m
    dT = 111.0 - 25.0
    if latent_inside:
        return (dehydration + dT * (water_sensible + latent + residue_sensible + sand_sensible)) / 1000
    return (dehydration + dT * (water_sensible + residue_sensible + sand_sensible) + latent) / 1000


def test_extraction_zero_mass():
    assert water_extraction_energy(ExtractionParams(water_mass_per_sol=0.0)) == 0.0


def test_extraction_latent_once_golden():
    value = water_extraction_energy(ExtractionParams())
    assert value == pytest.approx(extraction_oracle(1e5, False), rel=1e-12)
    assert value == pytest.approx(458731.1744, rel=1e-12)
    assert abs(value - 4.37e5) / 4.37e5 < 0.10


def test_extraction_as_written_golden():
    value = water_extraction_energy(ExtractionParams(mode=ExtractionMode.AS_WRITTEN))
    assert value == pytest.approx(extraction_oracle(1e5, True), rel=1e-12)
    assert value == pytest.approx(19643231.1744, rel=1e-12)


@pytest.mark.parametrize("changes", [
    {"water_mass_per_sol": -1.0},
    {"bake_T": 20.0},
    {"hydrate_fraction": 12.0},
    {"residue_fraction": 1.0},
    {"mode": "boil"},
])
def test_extraction_invalid(changes):
    with pytest.raises((DomainError, ValueError)):
        ExtractionParams(**changes)


@given(magnitude, st.sampled_from(list(ExtractionMode)))
def test_extraction_linear(m, mode):
    one = water_extraction_energy(ExtractionParams(water_mass_per_sol=m, mode=mode))
    two = water_extraction_energy(ExtractionParams(water_mass_per_sol=2 * m, mode=mode))
    assert two == 2 * one


def test_haul_zero_distance():
    assert haul_energy(replace(RAW_REGOLITH_HAUL, distance=0.0), ENV) == 0.0


def test_haul_raw_regolith():
    # 20 * 1e5 kg * 3.71 * 0.05 * 2000 m * 1.2
    assert haul_energy(RAW_REGOLITH_HAUL, ENV) == pytest.approx(890.4, rel=1e-12)


def test_haul_processed_water():
    assert haul_energy(PROCESSED_WATER_HAUL, ENV) == pytest.approx(3.71, rel=1e-12)


def test_haul_rejects_bad_inputs():
    with pytest.raises(DomainError):
        HaulParams(distance=-1.0)
    with pytest.raises(DomainError):
        HaulParams(friction_coeff=1.5)


@given(magnitude)
def test_haul_linear(m):
    assert haul_energy(HaulParams(payload=2 * m), ENV) == 2 * haul_energy(HaulParams(payload=m), ENV)


@given(st.floats(min_value=0.0, max_value=1e7), st.floats(min_value=0.0, max_value=1e5))
def test_processed_haul_below_raw_haul(m, d):
    raw = haul_energy(HaulParams(payload=m, distance=d), ENV)
    water = haul_energy(HaulParams(payload=m, distance=d, friction_coeff=0.01, movement_ratio=1.0,
                                   mass_multiplier=1.0), ENV)
    assert water <= raw


def test_excavation_zero_mass():
    assert excavation_energy(ExcavationParams(), 0.0, ENV) == 0.0


def test_excavation_round_trip_golden():
    force = 1.2 * 3000 + 20 * 1e5 * 3.71 * 0.1
    traverse = 2 * (20 * 1e5 / 1500) / 0.42
    value = excavation_energy(ExcavationParams(), 1e5, ENV)
    assert value == pytest.approx(force * traverse / 1e6, rel=1e-12)
    assert value == pytest.approx(4733.96825396825, rel=1e-12)
    assert abs(value - 4594) / 4594 < 0.05


def test_excavation_as_written_golden():
    value = excavation_energy(ExcavationParams(mode=ExcavationMode.AS_WRITTEN), 1e5, ENV)
    assert value == pytest.approx(0.532571428571429, rel=1e-12)


def test_excavation_rejects_zero_footprint():
    with pytest.raises(DomainError):
        ExcavationParams(robot_footprint=0.0)


@given(st.floats(min_value=1.0, max_value=1e8))
def test_excavation_scales_with_mass_and_force(m):
    # Traverse length and the mass-dependent push both grow with m, so doubling
    # the water mass together with the dig force quadruples the energy.
    p = ExcavationParams()
    base = excavation_energy(p, m, ENV)
    doubled = excavation_energy(replace(p, dig_force=2 * p.dig_force), 2 * m, ENV)
    assert doubled == pytest.approx(4 * base, rel=1e-14)


def test_drag_velocity_no_air():
    assert drag_adjusted_velocity(MassDriverParams(air_density=0.0)) == 5000.0


def test_drag_velocity_golden():
    k = 0.02 * 0.01 * 7.06 * 5000**2 * 40000 / 110000
    assert drag_adjusted_velocity(MassDriverParams()) == pytest.approx(math.sqrt(5000**2 + k), rel=1e-14)
    assert drag_adjusted_velocity(MassDriverParams()) == pytest.approx(5001.28347163369, abs=1e-9)


def test_drag_velocity_rejects_massless():
    with pytest.raises(DomainError):
        drag_adjusted_velocity(MassDriverParams(payload_mass=0.0, container_mass=0.0))


def test_mass_driver_massless_zero():
    assert mass_driver_energy(MassDriverParams(payload_mass=0.0, container_mass=0.0)) == 0.0


def test_mass_driver_golden():
    assert mass_driver_energy(MassDriverParams(launcher_efficiency=1.0)) == pytest.approx(1375706.0, rel=1e-12)
    assert mass_driver_energy(MassDriverParams()) == pytest.approx(2501283.63636364, rel=1e-12)


@pytest.mark.parametrize("kappa", [0.0, -0.1, 1.01])
def test_mass_driver_rejects_bad_efficiency(kappa):
    with pytest.raises(DomainError):
        MassDriverParams(launcher_efficiency=kappa)


@given(st.floats(min_value=1e-3, max_value=1.0), st.floats(min_value=1e-3, max_value=1.0))
def test_mass_driver_decreasing_in_efficiency(a, b):
    lo, hi = sorted((a, b))
    if lo == hi:
        return
    assert mass_driver_energy(MassDriverParams(launcher_efficiency=hi)) < \
        mass_driver_energy(MassDriverParams(launcher_efficiency=lo))


@given(st.floats(min_value=0.0, max_value=0.1), st.floats(min_value=0.0, max_value=1e5),
       st.floats(min_value=0.0, max_value=1.0))
def test_drag_velocity_at_least_target(rho, d, cd):
    p = MassDriverParams(air_density=rho, drag_distance=d, drag_coeff=cd)
    v = drag_adjusted_velocity(p)
    assert v >= p.target_speed
    if rho * cd * d == 0:
        assert v == p.target_speed


@given(st.floats(min_value=1.0, max_value=1e7), st.floats(min_value=1.0, max_value=1e6))
def test_mass_driver_linear_when_drag_scales(m, M):
    # Drag energy is independent of mass, so it has to scale with the container.
    p = MassDriverParams(payload_mass=m, container_mass=M)
    q = replace(p, payload_mass=2 * m, container_mass=2 * M, frontal_area=2 * p.frontal_area)
    assert mass_driver_energy(q) == 2 * mass_driver_energy(p)


def test_crew_zero_headcount():
    out = crew_energy(CrewProfile(headcount=0))
    assert all(v == 0.0 for v in out.values())


def test_crew_table_values():
    out = crew_energy(CrewProfile())
    assert out["oxygen"] == pytest.approx(5559.0, abs=1.0)
    assert out["electricity"] == pytest.approx(5400.0, rel=1e-15)
    assert out["water"] == 10800.0
    assert out["food"] == pytest.approx(3354.0, abs=1.0)
    assert out["total"] == out["oxygen"] + out["electricity"] + out["water"] + out["food"]
    assert out["total"] == pytest.approx(25113.0, abs=1.0)


def test_beef_row():
    beef = CrewProfile(headcount=1, food_basket=(FoodItem("beef", 70.4, 0.09), FoodItem("rest", 0.0, 1.71)))
    assert crew_energy(beef)["food"] == pytest.approx(12.672, rel=1e-12)
    no_waste = replace(beef, food_waste_multiplier=1.0)
    assert crew_energy(no_waste)["food"] == pytest.approx(6.336, rel=1e-12)


def test_crew_rejects_bad_inputs():
    with pytest.raises(DomainError):
        CrewProfile(headcount=-1)
    with pytest.raises(DomainError):
        CrewProfile(food_basket=(FoodItem("corn", 1.1, 1.0),))


@given(magnitude)
def test_crew_linear_in_headcount(h):
    one = crew_energy(CrewProfile(headcount=h))
    two = crew_energy(CrewProfile(headcount=2 * h))
    for key in one:
        assert two[key] == 2 * one[key]
