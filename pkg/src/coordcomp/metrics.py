"""Inequality statistics over income vectors."""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from typing import Sequence

import numpy as np

from .economy import EconomySnapshot


class UndefinedDistributionError(ValueError):
    """Incomes are empty, negative, or all zero."""


def _incomes(x: Sequence[float]) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise UndefinedDistributionError("need a nonempty 1-d income vector")
    if not np.all(np.isfinite(arr)) or np.any(arr < 0):
        raise UndefinedDistributionError("incomes must be finite and nonnegative")
    if not np.any(arr > 0):
        raise UndefinedDistributionError("Gini is undefined when every income is zero")
    return arr


def gini(incomes: Sequence[float]) -> float:
    """Mean absolute difference over twice the mean, ``sum|xi - xj| / (2 n^2 mean)``.

    Uses the exact pairwise sum (no small-sample correction).
    """
    x = _incomes(incomes)
    n = x.size
    return float(np.abs(x[:, None] - x[None, :]).sum() / (2.0 * n * n * x.mean()))


def lorenz(incomes: Sequence[float]) -> list[tuple[float, float]]:
    """Lorenz curve points from (0, 0) to (1, 1), poorest first."""
    x = np.sort(_incomes(incomes))
    n = x.size
    cum = np.concatenate([[0.0], np.cumsum(x)])
    cum /= cum[-1]
    return [(i / n, float(cum[i])) for i in range(n + 1)]


def top_share(incomes: Sequence[float], fraction: float = 0.1) -> float:
    """Income share of the top ``ceil(fraction * n)`` earners."""
    if not 0 < fraction < 1:
        raise ValueError(f"fraction must lie in (0, 1), got {fraction}")
    x = np.sort(_incomes(incomes))[::-1]
    k = math.ceil(round(fraction * x.size, 9))
    return float(x[:k].sum() / x.sum())


@dataclass(frozen=True)
class MetricRow:
    output: float
    output_index: float
    gini_economy: float
    gini_managers: float
    gap: float
    top10_share: float
    unemployment: float
    employed: int

    @classmethod
    def field_names(cls) -> list[str]:
        return [f.name for f in fields(cls)]


def snapshot_metrics(snapshot: EconomySnapshot, baseline_output: float) -> MetricRow:
    if not baseline_output > 0:
        raise ValueError(f"baseline output must be > 0, got {baseline_output}")
    everyone = snapshot.incomes()
    return MetricRow(
        output=snapshot.total_output,
        output_index=snapshot.total_output / baseline_output,
        gini_economy=gini(everyone),
        gini_managers=gini(snapshot.manager_wages),
        gap=snapshot.wage_gap,
        top10_share=top_share(everyone, 0.1),
        unemployment=1.0 - snapshot.employed / snapshot.params.n_workers,
        employed=snapshot.employed,
    )
