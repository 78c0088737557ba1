# Where the computed numbers and the published ones part ways,
# then a one-parameter sweep over the launcher efficiency.
from marsbase import emit_report, reconcile
from marsbase.config import loads_config
from marsbase.sweep import run_sweep
from marsbase.report import sweep_report

for e in reconcile().entries:
    dev = "" if e.relative_deviation is None else f"{e.relative_deviation:+.3f}"
    print(f"{e.quantity:52s} {e.disposition.value:18s} {dev}")

cfg = loads_config('{"sweep": {"parameter": "mass_driver.launcher_efficiency", '
                   '"start": 0.4, "stop": 1.0, "steps": 4}}')
print(emit_report(sweep_report(run_sweep(cfg)), "table").decode())
