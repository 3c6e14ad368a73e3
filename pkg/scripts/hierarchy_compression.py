"""Homogeneous-firm view: span, layers and manager demand as agent capital grows.

    python scripts/hierarchy_compression.py --workers 400 --c0 0.3 --gamma 1
"""

import argparse

from coordcomp.model import coordination_cost, hierarchy_layers, manager_demand, span

ap = argparse.ArgumentParser()
ap.add_argument("--workers", type=int, default=400)
ap.add_argument("--c0", type=float, default=0.3)
ap.add_argument("--gamma", type=float, default=1.0)
args = ap.parse_args()

print(f"{'K_A':>5} {'cost':>8} {'span':>8} {'layers':>6} {'managers':>9}")
for k in range(0, 11):
    c = coordination_cost(args.c0, args.gamma, float(k), 1.0, 0.0)
    S = span(c)
    if S <= 1:
        print(f"{k:5d} {c:8.4f} {S:8.3f} {'-':>6} {'-':>9}")
        continue
    print(f"{k:5d} {c:8.4f} {S:8.3f} {hierarchy_layers(args.workers, S):6d} "
          f"{manager_demand(args.workers, S):9.2f}")
