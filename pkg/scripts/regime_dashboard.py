"""Run the four-regime sweep and write the six dashboard charts plus CSV.

    python scripts/regime_dashboard.py results/
"""

import sys
from pathlib import Path

from coordcomp.cli import SVG_METRICS
from coordcomp.experiments import run_sweep
from coordcomp.model import ModelParams
from coordcomp.output import render_sweep_svg, sweep_records, write_csv

out = Path(sys.argv[1] if len(sys.argv) > 1 else "results")
rows = run_sweep(ModelParams())
write_csv(sweep_records(rows), "sweep", out / "sweep.csv")
for metric in SVG_METRICS:
    render_sweep_svg(rows, metric, out / f"sweep_{metric}.svg")

print(f"{'regime':<20} {'gini_econ 0->10':>16} {'gini_mgr 0->10':>16} {'gap 0->10':>12} {'unemp 0->10':>12}")
for i in range(0, len(rows), 51):
    a, b = rows[i], rows[i + 50]
    m0, m1 = a.metrics, b.metrics
    print(f"{a.regime:<20} {m0.gini_economy:7.3f} -> {m1.gini_economy:5.3f} "
          f"{m0.gini_managers:7.3f} -> {m1.gini_managers:5.3f} {m0.gap:5.2f} -> {m1.gap:5.2f} "
          f"{m0.unemployment:5.3f} -> {m1.unemployment:5.3f}")
print(f"wrote {out}/sweep.csv and {len(SVG_METRICS)} charts")
