"""Command-line entry point.

    coordcomp sweep --out results --svg
    coordcomp heatmap --config run.cfg --heatmap_ka 5
    coordcomp robustness --mode random
    coordcomp props

Exit codes: 0 success, 1 configuration error, 2 runtime error, 3 a
proposition check failed.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .config import EXPERIMENTS, KEYS, ConfigError, RunConfig, parse_config
from .experiments import (
    CHECK_LABELS,
    ExperimentError,
    check_propositions,
    grid,
    run_heatmap,
    run_robustness,
    run_sweep,
)
from .output import (
    heatmap_records,
    render_sweep_svg,
    robustness_records,
    sweep_records,
    write_csv,
)

EXIT_OK, EXIT_CONFIG, EXIT_RUNTIME, EXIT_PROPS = 0, 1, 2, 3
SVG_METRICS = ("output_index", "gini_economy", "gini_managers", "gap", "top10_share", "unemployment")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message, source="command line")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="coordcomp", description="Coordination-compression simulator.", allow_abbrev=False)
    p.add_argument("experiment", nargs="?", choices=EXPERIMENTS,
                   help="experiment to run (default: the config's 'experiment' key)")
    p.add_argument("--config", type=Path, help="key = value file")
    p.add_argument("-v", "--verbose", action="store_true")
    for key in KEYS:
        names = [f"--{key}"]
        if "_" in key:
            names.append(f"--{key.replace('_', '-')}")
        if key == "svg":
            p.add_argument(*names, dest=key, action="store_const", const="true", default=None)
        else:
            p.add_argument(*names, dest=key, default=None, metavar="VALUE")
    return p


def load_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    text = ""
    if args.config is not None:
        try:
            text = args.config.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise ConfigError(f"cannot read {args.config}: {exc}") from None
    overrides = {k: getattr(args, k) for k in KEYS}
    if args.experiment:
        overrides["experiment"] = args.experiment
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    return parse_config(text, overrides)


def run(cfg: RunConfig) -> int:
    params = cfg.params
    out = Path(cfg.out)
    if cfg.experiment == "sweep":
        rows = run_sweep(params, ka_grid=grid(cfg.ka_min, cfg.ka_max, cfg.ka_step), mode=cfg.mode)
        path = write_csv(sweep_records(rows), "sweep", out / "sweep.csv")
        print(f"wrote {len(rows)} rows to {path}")
        if cfg.svg:
            for metric in SVG_METRICS:
                render_sweep_svg(rows, metric, out / f"sweep_{metric}.svg")
            print(f"wrote {len(SVG_METRICS)} charts to {out}")
    elif cfg.experiment == "heatmap":
        rows = run_heatmap(
            params,
            grid(cfg.heatmap_beta_min, cfg.heatmap_beta_max, cfg.heatmap_beta_step),
            grid(cfg.heatmap_delta_min, cfg.heatmap_delta_max, cfg.heatmap_delta_step),
            K_A=cfg.heatmap_ka,
            mode=cfg.mode,
        )
        path = write_csv(heatmap_records(rows), "heatmap", out / "heatmap.csv")
        print(f"wrote {len(rows)} cells to {path}")
    elif cfg.experiment == "robustness":
        report = run_robustness(params, mode=cfg.mode)
        path = write_csv(robustness_records(report), "robustness", out / "robustness.csv")
        for alpha, checks in report.checks.items():
            for label, ok in zip(CHECK_LABELS, checks):
                print(f"alpha={alpha:.2f}  {'PASS' if ok else 'FAIL'}  {label}")
        print(f"{report.passed}/{report.total} qualitative checks pass; table in {path}")
    else:
        report = check_propositions(params, grid(cfg.ka_min, cfg.ka_max, cfg.ka_step), mode=cfg.mode)
        for r in report.results:
            print(f"{r.name}  {r.status:<24} worst violation {r.worst_violation:.3g}")
        return EXIT_OK if report.all_passed else EXIT_PROPS
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cfg = load_config(argv)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        return run(cfg)
    except (ExperimentError, OSError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
