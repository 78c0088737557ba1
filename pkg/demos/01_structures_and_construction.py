# Structure volumes and what they cost to build.
# Run from anywhere after `pip install -e .`
from marsbase import ConstructionMethod, base_construction_energy, default_inventory, structure_volume
from marsbase.catalog import QUARTZ_SAND, STEEL

inv = default_inventory()

# Sintering a cubic metre of sand vs melting a cubic metre of steel
print("sand  MJ/m3", QUARTZ_SAND.volumetric_energy / 1e3)
print("steel MJ/m3", STEEL.volumetric_energy / 1e3)

for s in inv:
    tag = " (crewed base only)" if s.human_only else ""
    print(f"{s.key:16s} x{s.quantity:<3d} {structure_volume(s):12.1f} m3{tag}")

# Two structure sets and two methods
for method in ConstructionMethod:
    for crewed in (False, True):
        r = base_construction_energy(inv, method, include_human_only=crewed)
        print(method.value, "crewed" if crewed else "robotic", f"{r.total:.4g} MJ")

# The mass driver takes over half; see which share each structure takes
r = base_construction_energy(inv, ConstructionMethod.FRAME_AND_BLOCK, include_human_only=True)
top = sorted(r.shares().items(), key=lambda kv: -kv[1])[:4]
print(top)
