import math
from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

from marsbase import ConfigError, DomainError, Geometry, StructureSpec, default_inventory, structure_volume
from marsbase.catalog import (
    GEOMETRY_DIMS,
    BaseInventory,
    Environment,
    apply_catalog_overrides,
    load_catalog_overrides,
    unused_dimensions,
)

# Evaluated with exact rationals in sympy, then rounded to 15 digits.
CAS_VOLUMES = {
    "road": 19200.0,
    "refinery": 8589.24835620105,
    "fuel_storage": 424.115008234622,
    "mass_driver": 209203.522483337,
    "small_pad": 1025.0,
    "walkway": 6597.34457253857,
}


@pytest.mark.parametrize("key,expected", sorted(CAS_VOLUMES.items()))
def test_default_volumes_match_cas(key, expected):
    spec = default_inventory().get(key)
    assert structure_volume(spec) == pytest.approx(expected, rel=1e-12)


def test_degenerate_dome_is_empty():
    spec = StructureSpec("d", "d", 1, Geometry.DOME_SHELL,
                         {"outer_radius": 5.0, "inner_radius": 5.0, "depth": 0.0}, 0.1)
    assert structure_volume(spec) == 0.0


def test_default_inventory_rows():
    inv = default_inventory()
    assert len(inv) == 14
    human = [s.key for s in inv if s.human_only]
    assert human == ["o2_extractor", "services_centre", "habitat", "walkway"]
    assert inv.get("road").block_fraction == 0.05
    assert inv.get("power_pad").block_fraction == 0.05
    assert inv.get("refinery").block_fraction == 0.15


def test_slope_is_stored_but_unused():
    md = default_inventory().get("mass_driver")
    assert unused_dimensions(md) == {"slope_deg": 5.0}
    assert structure_volume(md) == structure_volume(md.with_dims(slope_deg=45.0))


@pytest.mark.parametrize("dims", [
    {"outer_radius": 4.0, "inner_radius": 5.0, "depth": 0.1},
    {"outer_radius": -1.0, "inner_radius": 0.0, "depth": 0.1},
    {"outer_radius": math.inf, "inner_radius": 0.0, "depth": 0.1},
    {"outer_radius": math.nan, "inner_radius": 0.0, "depth": 0.1},
    {"outer_radius": 4.0, "depth": 0.1},
])
def test_invalid_dome_rejected(dims):
    with pytest.raises(DomainError):
        StructureSpec("d", "d", 1, Geometry.DOME_SHELL, dims, 0.1)


@pytest.mark.parametrize("field,value", [("quantity", 0), ("steel_ratio", 1.5), ("block_fraction", 0.0)])
def test_invalid_row_fields(field, value):
    with pytest.raises(DomainError):
        replace(default_inventory().get("road"), **{field: value})


def test_environment_invariants():
    with pytest.raises(DomainError):
        Environment(insolation=1400.0)
    with pytest.raises(DomainError):
        Environment(gravity=0.0)


def test_inventory_names_unique():
    road = default_inventory().get("road")
    with pytest.raises(DomainError):
        BaseInventory((road, road))


def test_total_volume_is_additive():
    inv = default_inventory()
    expected = 0.0
    for s in inv:
        expected += s.quantity * structure_volume(s)
    assert inv.total_volume() == expected


def test_catalog_overrides(tmp_path):
    path = tmp_path / "catalog.json"
    path.write_text('{"road": {"steel_ratio": 0.1, "dims": {"width": 10}}}')
    inv = load_catalog_overrides(path)
    assert inv.get("road").steel_ratio == 0.1
    assert structure_volume(inv.get("road")) == pytest.approx(12000 * 10 * 0.2)
    with pytest.raises(ConfigError, match="colour"):
        apply_catalog_overrides(inv, {"road": {"colour": "grey"}})
    with pytest.raises(ConfigError, match="bridge"):
        apply_catalog_overrides(inv, {"bridge": {"quantity": 2}})
    with pytest.raises(ConfigError, match="dims.radius"):
        apply_catalog_overrides(inv, {"road": {"dims": {"radius": 2}}})


def test_bad_catalog_json_reports_position(tmp_path):
    path = tmp_path / "catalog.json"
    path.write_text('{\n  "road": {"quantity": }\n}')
    with pytest.raises(ConfigError, match="line 2 column"):
        load_catalog_overrides(path)


# Geometry extents that grow the volume, and those that shrink it.
INCREASING = {
    Geometry.SLAB: ("length", "width", "depth"),
    Geometry.DOME_SHELL: ("outer_radius", "depth"),
    Geometry.TANK: ("radius", "thickness", "height"),
    Geometry.PAD_WITH_WALLS: ("length", "width", "depth", "wall_height"),
    Geometry.TOWER: ("height", "base_length", "top_length"),
    Geometry.MASS_DRIVER_TUBE: ("inner_radius", "length", "thickness", "post_height", "post_width"),
    Geometry.WALKWAY_TUBE: ("length", "outer_radius"),
}
DECREASING = {
    Geometry.DOME_SHELL: ("inner_radius",),
    Geometry.WALKWAY_TUBE: ("inner_radius",),
    Geometry.MASS_DRIVER_TUBE: ("post_spacing",),
}

dim = st.floats(min_value=0.0, max_value=1e4, allow_nan=False)


@st.composite
def specs(draw):
    geometry = draw(st.sampled_from(list(Geometry)))
    dims = {name: draw(dim) for name in GEOMETRY_DIMS[geometry]}
    if "inner_radius" in dims and "outer_radius" in dims:
        dims["inner_radius"], dims["outer_radius"] = sorted((dims["inner_radius"], dims["outer_radius"]))
    if geometry is Geometry.TOWER:
        dims["top_length"], dims["base_length"] = sorted((dims["top_length"], dims["base_length"]))
    if geometry is Geometry.MASS_DRIVER_TUBE:
        dims["post_spacing"] = draw(st.floats(min_value=0.1, max_value=1e3))
    return StructureSpec("x", "x", 1, geometry, dims, 0.1)


@given(specs())
def test_volume_nonnegative(spec):
    assert structure_volume(spec) >= 0.0


@given(specs(), st.floats(min_value=1.0, max_value=3.0), st.data())
def test_volume_monotone(spec, factor, data):
    base = structure_volume(spec)
    up = INCREASING[spec.geometry]
    name = data.draw(st.sampled_from(up + DECREASING.get(spec.geometry, ())))
    value = spec.dims[name] * factor
    if name == "inner_radius" and spec.geometry in (Geometry.DOME_SHELL, Geometry.WALKWAY_TUBE):
        value = min(value, spec.dims["outer_radius"])
    if spec.geometry is Geometry.TOWER and name == "top_length":
        value = min(value, spec.dims["base_length"])
    moved = structure_volume(spec.with_dims(**{name: value}))
    slack = 1e-9 * max(base, 1.0)
    if name in up:
        assert moved >= base - slack
    else:
        assert moved <= base + slack


@pytest.mark.parametrize("geometry", list(Geometry))
def test_volume_zero_for_zero_dims(geometry):
    dims = {name: 0.0 for name in GEOMETRY_DIMS[geometry]}
    if geometry is Geometry.MASS_DRIVER_TUBE:
        dims["post_spacing"] = 20.0
    assert structure_volume(StructureSpec("z", "z", 1, geometry, dims, 0.0)) == 0.0


@given(st.floats(min_value=1.0, max_value=1e3), st.floats(min_value=1e-6, max_value=0.01))
def test_thin_dome_limit(radius, rel_thickness):
    thickness = rel_thickness * radius
    spec = StructureSpec("d", "d", 1, Geometry.DOME_SHELL,
                         {"outer_radius": radius, "inner_radius": radius - thickness, "depth": 0.0}, 0.1)
    thin = 2.0 * math.pi * radius**2 * thickness
    assert structure_volume(spec) == pytest.approx(thin, rel=0.01)
