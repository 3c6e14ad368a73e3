"""Agent capital, coordination compression and the regime fork: a deterministic
two-layer firm simulator."""

from .economy import EconomySnapshot, simulate
from .experiments import (
    REGIMES,
    RegimeSpec,
    check_propositions,
    run_heatmap,
    run_robustness,
    run_sweep,
)
from .metrics import MetricRow, gini, lorenz, snapshot_metrics, top_share
from .model import DomainError, ModelParams, Team

__all__ = [
    "DomainError",
    "EconomySnapshot",
    "MetricRow",
    "ModelParams",
    "REGIMES",
    "RegimeSpec",
    "Team",
    "check_propositions",
    "gini",
    "lorenz",
    "run_heatmap",
    "run_robustness",
    "run_sweep",
    "simulate",
    "snapshot_metrics",
    "top_share",
]
