# How big a plant, and how long to build the base with it.
from marsbase import PlantKind, SizingProfile, required_area
from marsbase.catalog import Environment
from marsbase.scenarios import construction_comparison, registry_operations_total

env = Environment()
E = registry_operations_total()
print("energy per sol", E)

for kind in PlantKind:
    for profile in SizingProfile:
        print(kind.value, profile.value, round(required_area(E, kind, env, profile) / 1e6, 4), "km2")

grid = construction_comparison()
print("plant", grid.plant)
for name, t in grid.build_times.items():
    print(f"{name:16s} {grid.totals[name]:.4g} MJ  {t:8.0f} sols")

# Crewed frame vs robotic printed
print("ratio", grid.ratio("human-frame", "robotic-printed"))
