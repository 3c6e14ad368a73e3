"""Print the labor-share robustness grid next to the published values.

    python scripts/reproduce_table.py [--mode random]
"""

import argparse

from coordcomp.experiments import CHECK_LABELS, REGIMES, run_robustness
from coordcomp.model import ModelParams

PUBLISHED = {
    0.50: {"mgr_gini": (0.110, 0.213, 0.295, 0.315), "gap": (10.0, 20.0, 10.0, 12.5)},
    0.65: {"mgr_gini": (0.143, 0.267, 0.378, 0.401), "gap": (5.4, 10.8, 5.4, 6.7)},
    0.80: {"mgr_gini": (0.175, 0.316, 0.454, 0.479), "gap": (2.5, 5.0, 2.5, 3.1)},
}
EMPLOYED = (200, 400, 200, 250)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--mode", default="pam", choices=("pam", "random"))
    args = ap.parse_args()

    rep = run_robustness(ModelParams(), tuple(PUBLISHED), mode=args.mode)
    print(f"{'alpha':>5} {'regime':<4} {'mgr_gini':>9} {'(pub)':>7} {'gap':>6} {'(pub)':>6} {'emp':>4} {'(pub)':>5}")
    for a, pub in PUBLISHED.items():
        for k, r in enumerate(REGIMES):
            row = rep.row(a, r.name)
            print(f"{a:5.2f} {r.short:<4} {row.mgr_gini:9.3f} {pub['mgr_gini'][k]:7.3f} "
                  f"{row.gap:6.1f} {pub['gap'][k]:6.1f} {row.employed:4d} {EMPLOYED[k]:5d}")
    print()
    for a, checks in rep.checks.items():
        failed = [lbl for lbl, ok in zip(CHECK_LABELS, checks) if not ok]
        print(f"alpha={a:.2f}: {sum(checks)}/5" + (f"  failed: {'; '.join(failed)}" if failed else ""))
    print(f"total {rep.passed}/{rep.total}")


if __name__ == "__main__":
    main()
