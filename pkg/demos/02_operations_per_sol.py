# Daily operating energy: mining, launching, and keeping a crew alive.
from dataclasses import replace

from marsbase import CrewProfile, MassDriverParams, crew_energy, mass_driver_energy, operations_breakdown
from marsbase.scenarios import ModelParams, get_scenario, mining_components

print(mining_components(ModelParams()))

# The launcher dominates everything else.
p = MassDriverParams()
print("kinetic only", mass_driver_energy(replace(p, launcher_efficiency=1.0)))
print("at 55%      ", mass_driver_energy(p))

c = crew_energy(CrewProfile())
print({k: round(v, 2) for k, v in c.items()})

# Formula values vs the published ones
for registry in (False, True):
    b = operations_breakdown(get_scenario("human-printed"), registry=registry)
    print("registry" if registry else "formula ", f"{b.total:.4g}", {k: round(v, 4) for k, v in b.fractions().items()})

# Dropping the crew just renormalizes the rest
print(operations_breakdown(get_scenario("robotic-printed"), registry=True).fractions())
