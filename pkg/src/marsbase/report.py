"""Report assembly and serialization.

A report is a plain JSON-compatible dict::

    {"command": str,
     "tables": [{"name": str, "columns": [...], "rows": [[...], ...]}],
     "breakdowns": [{"figure": str, "label": str, "categories": {...},
                     "fractions": {...}, "total": float}],
     "notes": [str, ...]}

``emit_report`` renders it as aligned text, JSON, CSV or plot-data CSV. Output
depends only on the report contents, so identical inputs give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json

from .config import FORMATS, RunConfig
from .construction import ConstructionMethod, build_time
from .errors import ConfigError
from .power import PlantKind, SizingProfile, daily_harvest, required_area
from .scenarios import (
    EnergyBreakdown,
    ModelParams,
    Operator,
    PAPER_REGISTRY,
    construction_breakdown,
    construction_comparison,
    crew_breakdown,
    get_scenario,
    mining_components,
    operations_breakdown,
    reconcile,
    scenario_construction,
    shared_plant,
    structure_volumes,
)
from .sweep import SweepResult


def _table(name: str, columns: list[str], rows: list[list]) -> dict:
    return {"name": name, "columns": list(columns), "rows": [list(r) for r in rows]}


def _breakdown(figure: str, b: EnergyBreakdown) -> dict:
    return {"figure": figure, **b.to_dict()}


def _breakdown_table(name: str, b: EnergyBreakdown) -> dict:
    rows = [[k, v, b.fraction(k)] for k, v in b.categories.items()]
    rows.append(["total", b.total, 1.0 if b.total else 0.0])
    return _table(name, ["category", "energy_MJ", "fraction"], rows)


def _sizing_rows(energy: float, params: ModelParams) -> list[list]:
    env = params.environment
    rows = []
    for kind in PlantKind:
        for profile in SizingProfile:
            area = required_area(energy, kind, env, profile)
            rows.append([kind.value, profile.value, area, area / 1e6])
    return rows


def evaluate_report(cfg: RunConfig, scenario_name: str | None = None) -> dict:
    """Operations, construction, plant size and build time for one scenario."""
    params = cfg.params
    scenario = get_scenario(scenario_name or cfg.scenarios[0])
    ops = operations_breakdown(scenario, params, registry=cfg.registry)
    tables = [_breakdown_table("operations per sol", ops)]
    breakdowns = [_breakdown("operations", ops)]

    mining = mining_components(params)
    tables.append(_table("mining and processing (formula)", ["component", "energy_MJ"],
                         [[k, v] for k, v in mining.items()]))
    if scenario.operator is Operator.HUMAN_CREW:
        crew = crew_breakdown(params)
        tables.append(_breakdown_table("crew life support", crew))
        breakdowns.append(_breakdown("crew", crew))

    report = scenario_construction(scenario, params)
    volumes = structure_volumes(params.catalog)
    shares = report.shares()
    rows = []
    for key, unit in report.per_structure.items():
        q = report.quantities[key]
        rows.append([key, q, volumes[key], unit, q * unit, shares[key]])
    rows.append(["total", "", "", "", report.total, 1.0 if report.total else 0.0])
    tables.append(_table(f"construction ({report.method.value})",
                         ["structure", "quantity", "unit_volume_m3", "unit_energy_MJ", "energy_MJ", "share"],
                         rows))
    breakdowns.append(_breakdown("construction", construction_breakdown(report, scenario.name)))

    tables.append(_table("plant sizing for operations", ["kind", "profile", "area_m2", "area_km2"],
                         _sizing_rows(ops.total, params)))
    plant = shared_plant(params)
    harvest = daily_harvest(plant, params.environment)
    tables.append(_table("build time", ["plant_kind", "plant_area_m2", "harvest_MJ_per_sol", "build_time_sols"],
                         [[plant.kind.value, plant.area, harvest,
                           build_time(report.total, plant, params.environment)]]))
    return {
        "command": "evaluate",
        "scenario": scenario.name,
        "registry": cfg.registry,
        "tables": tables,
        "breakdowns": breakdowns,
        "notes": [f"override {p} = {json.dumps(v)}" for p, v in cfg.overrides],
    }


def grid_report(cfg: RunConfig) -> dict:
    """Construction energy and build time for all four scenarios, with ratios."""
    params = cfg.params
    grid = construction_comparison(params)
    rows = []
    for name, total in grid.totals.items():
        s = get_scenario(name)
        structure_set = "human" if s.includes_human_only else "robotic"
        rows.append([name, s.construction_method.value, structure_set, total, grid.build_times[name]])
    tables = [
        _table("construction grid", ["scenario", "method", "structure_set", "energy_MJ", "build_time_sols"], rows),
        _table("pairwise ratios", ["numerator", "denominator", "energy_ratio", "build_time_ratio"],
               [list(r) for r in grid.pairwise()]),
        _table("shared plant", ["kind", "area_m2", "efficiency", "harvest_MJ_per_sol"],
               [[grid.plant.kind.value, grid.plant.area, grid.plant.efficiency,
                 daily_harvest(grid.plant, params.environment)]]),
    ]
    ordering = []
    for method in ConstructionMethod:
        robotic = [n for n, r in grid.reports.items()
                   if r.method is method and not get_scenario(n).includes_human_only][0]
        human = [n for n, r in grid.reports.items()
                 if r.method is method and get_scenario(n).includes_human_only][0]
        ordering.append([method.value, grid.totals[human] > grid.totals[robotic]])
    tables.append(_table("human structure set exceeds robotic set", ["method", "holds"], ordering))
    breakdowns = [
        _breakdown("construction", construction_breakdown(grid.reports[n], n)) for n in grid.reports
    ]
    return {
        "command": "grid",
        "tables": tables,
        "breakdowns": breakdowns,
        "notes": ["the published five-fold energy and build-time claims have no numeric labels; "
                  "compare the ratios above with the reconcile output"],
    }


def reconcile_report(cfg: RunConfig) -> dict:
    rec = reconcile(cfg.params)
    rows = [[e.quantity, e.computed, e.unit, e.paper_reported, e.relative_deviation,
             e.disposition.value, e.tolerance, e.note] for e in rec.entries]
    registry_rows = [[v.key, v.value, v.unit, v.description] for v in PAPER_REGISTRY.values()]
    return {
        "command": "reconcile",
        "tables": [
            _table("reconciliation",
                   ["quantity", "computed", "unit", "paper_reported", "relative_deviation",
                    "disposition", "tolerance", "note"], rows),
            _table("published value registry", ["key", "value", "unit", "description"], registry_rows),
        ],
        "breakdowns": [],
        "notes": list(rec.notes),
    }


def size_plant_report(cfg: RunConfig, energy: float | None = None) -> dict:
    params = cfg.params
    notes = []
    if energy is None:
        scenario = get_scenario(cfg.scenarios[0])
        ops = operations_breakdown(scenario, params, registry=cfg.registry)
        energy = ops.total
        notes.append(f"energy per sol from {ops.label}")
    tables = [_table("plant sizing", ["kind", "profile", "area_m2", "area_km2"], _sizing_rows(energy, params)),
              _table("energy", ["energy_MJ_per_sol"], [[energy]])]
    return {"command": "size-plant", "tables": tables, "breakdowns": [], "notes": notes}


def sweep_report(result: SweepResult) -> dict:
    cats = list(result.baseline.categories)
    columns = ["value", "total_MJ", "delta_total_MJ"] + [f"delta_{c}_MJ" for c in cats] + [
        "solar_thermal_area_m2", "pv_area_m2"]
    rows = []
    for s in result.samples:
        rows.append([s.value, s.total, s.deltas["total"]] + [s.deltas[c] for c in cats]
                    + [s.solar_thermal_area, s.pv_area])
    breakdowns = [_breakdown(f"sweep {result.parameter}={s.value!r}", s.breakdown) for s in result.samples]
    return {
        "command": "sweep",
        "parameter": result.parameter,
        "scenario": result.scenario,
        "registry": result.registry,
        "tables": [_breakdown_table("baseline", result.baseline), _table("sweep", columns, rows)],
        "breakdowns": breakdowns,
        "notes": [],
    }


def _cell(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.7g}"
    return str(value)


def _render_table(table: dict) -> str:
    header = table["columns"]
    body = [[_cell(v) for v in row] for row in table["rows"]]
    widths = [len(h) for h in header]
    for row in body:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [table["name"], "  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip(),
             "  ".join("-" * w for w in widths)]
    for row in body:
        lines.append("  ".join(c.rjust(w) if _numeric(c) else c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _numeric(text: str) -> bool:
    try:
        float(text)
    except ValueError:
        return False
    return True


def _csv_value(value):
    return repr(value) if isinstance(value, float) else value


def emit_report(report: dict, fmt: str = "table") -> bytes:
    """Serialize ``report`` as ``table``, ``json``, ``csv`` or ``plot`` bytes."""
    if fmt not in FORMATS:
        raise ConfigError(f"unknown format {fmt!r}; expected one of {list(FORMATS)}")
    if fmt == "json":
        return (json.dumps(report, indent=2, ensure_ascii=False, allow_nan=False) + "\n").encode("utf-8")
    if fmt == "table":
        parts = [_render_table(t) for t in report.get("tables", [])]
        notes = report.get("notes", [])
        if notes:
            parts.append("notes\n" + "\n".join(f"- {n}" for n in notes))
        return ("\n\n".join(parts) + "\n").encode("utf-8")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if fmt == "csv":
        for i, table in enumerate(report.get("tables", [])):
            if i:
                buf.write("\n")
            writer.writerow(["table"] + table["columns"])
            for row in table["rows"]:
                writer.writerow([table["name"]] + [_csv_value(v) for v in row])
    else:
        writer.writerow(["figure", "label", "category", "energy_MJ", "fraction"])
        for b in report.get("breakdowns", []):
            for cat, value in b["categories"].items():
                writer.writerow([b["figure"], b["label"], cat, repr(value), repr(b["fractions"][cat])])
    return buf.getvalue().encode("utf-8")
