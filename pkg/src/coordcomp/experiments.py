"""Regime sweeps, the (beta, delta) heatmap, the labor-share robustness grid,
and the five-proposition property suite."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Iterable, Optional, Sequence


from .economy import (
    Mode,
    manager_costs,
    manager_skills,
    reprice_output,
    simulate,
)
from .metrics import MetricRow, gini, lorenz, snapshot_metrics
from .model import (
    DomainError,
    ModelParams,
    effective_labor,
    manager_demand,
    span,
    task_frontier,
    team_output,
)


class ExperimentError(RuntimeError):
    """A grid point failed; the message names the regime / grid coordinates."""


@dataclass(frozen=True)
class RegimeSpec:
    name: str
    beta: float
    delta: float

    @property
    def short(self) -> str:
        return "".join(c for c in self.name if c.isupper())


GENTLE_COMPRESSION = RegimeSpec("GentleCompression", 0.2, 0.0)
RISING_TIDE = RegimeSpec("RisingTide", 0.2, 0.3)
WINNER_TAKES_ALL = RegimeSpec("WinnerTakesAll", 3.0, 0.0)
CREATIVE_DESTRUCTION = RegimeSpec("CreativeDestruction", 3.0, 0.3)
REGIMES: tuple[RegimeSpec, ...] = (
    GENTLE_COMPRESSION,
    RISING_TIDE,
    WINNER_TAKES_ALL,
    CREATIVE_DESTRUCTION,
)


def regime_by_name(name: str) -> RegimeSpec:
    for r in REGIMES:
        if name in (r.name, r.short):
            return r
    raise KeyError(f"unknown regime {name!r}")


def grid(start: float, stop: float, step: float) -> list[float]:
    """Inclusive arithmetic grid, each point rounded to 10 decimals."""
    if step <= 0:
        raise ValueError(f"step must be > 0, got {step}")
    n = int(math.floor((stop - start) / step + 1e-9))
    return [round(start + i * step, 10) for i in range(n + 1)]


def default_ka_grid() -> list[float]:
    return grid(0.0, 10.0, 0.2)


@dataclass(frozen=True)
class SweepRow:
    regime: str
    K_A: float
    metrics: MetricRow


@dataclass(frozen=True)
class HeatmapRow:
    beta: float
    delta: float
    gini_managers: float
    output: float


def _snapshot(params: ModelParams, regime: RegimeSpec, K_A: float, mode: Mode):
    try:
        return simulate(params, K_A, beta=regime.beta, delta=regime.delta, mode=mode)
    except (DomainError, ArithmeticError, ValueError) as exc:
        raise ExperimentError(f"regime {regime.name} at K_A={K_A}: {exc}") from exc


def run_sweep(
    params: ModelParams,
    regimes: Sequence[RegimeSpec] = REGIMES,
    ka_grid: Optional[Sequence[float]] = None,
    mode: Mode = "pam",
) -> list[SweepRow]:
    """One metric row per (regime, K_A), regimes outer, K_A ascending inner."""
    ka_grid = default_ka_grid() if ka_grid is None else list(ka_grid)
    if not ka_grid or not regimes:
        raise ValueError("need a nonempty K_A grid and at least one regime")
    if any(b <= a for a, b in zip(ka_grid, ka_grid[1:])):
        raise ValueError("K_A grid must be strictly ascending")
    rows = []
    for regime in regimes:
        base = _snapshot(params, regime, 0.0, mode).total_output
        for k in ka_grid:
            snap = _snapshot(params, regime, k, mode)
            try:
                m = snapshot_metrics(snap, base)
            except ValueError as exc:
                raise ExperimentError(f"regime {regime.name} at K_A={k}: {exc}") from exc
            rows.append(SweepRow(regime.name, k, m))
    return rows


def run_heatmap(
    params: ModelParams,
    betas: Optional[Sequence[float]] = None,
    deltas: Optional[Sequence[float]] = None,
    K_A: float = 5.0,
    mode: Mode = "pam",
) -> list[HeatmapRow]:
    """Manager Gini and output over the (beta, delta) plane; beta outer, delta inner."""
    betas = grid(0.0, 4.0, 0.1) if betas is None else list(betas)
    deltas = grid(0.0, 0.5, 0.02) if deltas is None else list(deltas)
    if not betas or not deltas:
        raise ValueError("heatmap grids must be nonempty")
    rows = []
    for b in betas:
        for d in deltas:
            snap = _snapshot(params, RegimeSpec(f"beta={b},delta={d}", b, d), K_A, mode)
            rows.append(HeatmapRow(b, d, gini(snap.manager_wages), snap.total_output))
    return rows


# -- robustness --------------------------------------------------------------

CHECK_LABELS = (
    "output rises in all regimes",
    "manager Gini higher under high beta",
    "economy Gini falls in all regimes",
    "manager-worker gap rises in all regimes",
    "employment weakly higher under high delta",
)


@dataclass(frozen=True)
class RobustnessRow:
    alpha: float
    regime: str
    mgr_gini: float
    gap: float
    employed: int


@dataclass
class RobustnessReport:
    rows: list[RobustnessRow]
    checks: dict[float, tuple[bool, bool, bool, bool, bool]]

    @property
    def passed(self) -> int:
        return sum(sum(c) for c in self.checks.values())

    @property
    def total(self) -> int:
        return 5 * len(self.checks)

    def row(self, alpha: float, regime: str) -> RobustnessRow:
        for r in self.rows:
            if r.alpha == alpha and regime in (r.regime, regime_by_name(r.regime).short):
                return r
        raise KeyError((alpha, regime))


def run_robustness(
    params: ModelParams,
    alphas: Iterable[float] = (0.50, 0.65, 0.80),
    K_A: float = 10.0,
    mode: Mode = "pam",
) -> RobustnessReport:
    rows: list[RobustnessRow] = []
    checks = {}
    for a in alphas:
        if not 0 < a < 1:
            raise ValueError(f"alpha must lie in (0, 1), got {a}")
        p = replace(params, alpha=a)
        start: dict[str, MetricRow] = {}
        end: dict[str, MetricRow] = {}
        for r in REGIMES:
            s0 = _snapshot(p, r, 0.0, mode)
            s1 = _snapshot(p, r, K_A, mode)
            start[r.name] = snapshot_metrics(s0, s0.total_output)
            end[r.name] = snapshot_metrics(s1, s0.total_output)
            rows.append(RobustnessRow(a, r.name, end[r.name].gini_managers, end[r.name].gap, s1.employed))
        gc, rt, wta, cd = (r.name for r in REGIMES)
        names = [r.name for r in REGIMES]
        checks[a] = (
            all(end[n].output > start[n].output for n in names),
            end[wta].gini_managers > end[gc].gini_managers and end[cd].gini_managers > end[rt].gini_managers,
            all(end[n].gini_economy < start[n].gini_economy for n in names),
            all(end[n].gap > start[n].gap for n in names),
            end[rt].employed >= end[gc].employed and end[cd].employed >= end[wta].employed,
        )
    return RobustnessReport(rows, checks)


# -- proposition suite -------------------------------------------------------

@dataclass
class PropositionResult:
    name: str
    status: str  # "pass", "fail" or "vacuous (...)"
    worst_violation: float = 0.0
    evidence: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status != "fail"


@dataclass
class PropositionReport:
    results: list[PropositionResult]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> PropositionResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


def _rise_violation(seq: Sequence[float], strict: bool = True) -> float:
    """Largest amount by which a sequence fails to (strictly) increase; 0 if it does."""
    worst = 0.0
    for a, b in zip(seq, seq[1:]):
        d = b - a
        if d < 0 or (strict and d == 0):
            worst = max(worst, -d if d < 0 else math.ulp(a))
    return worst


def _status(worst: float) -> str:
    return "pass" if worst == 0.0 else "fail"


def oracle_manager_wages(params: ModelParams, K_A: float) -> list[float]:
    """Manager wages with unit-skill workers and real-valued proportional headcounts.

    No rounding or worker heterogeneity enters, so wages scale exactly as span**alpha.
    """
    costs = manager_costs(params, K_A)
    spans = [span(c) for c in costs]
    D = math.fsum(spans)
    E = min(D, task_frontier(params.T0, params.delta, K_A), float(params.n_workers))
    wages = []
    for c, s in zip(costs, spans):
        n = E * s / D
        y = team_output(params.A, params.alpha, effective_labor(n, n, c))
        wages.append((1.0 - params.alpha) * y)
    return wages


def _p1(params: ModelParams, ka: Sequence[float], mode: Mode) -> PropositionResult:
    if params.gamma == 0:
        return PropositionResult("P1", "vacuous (gamma=0)")
    worst, ev = 0.0, {}
    for r in REGIMES:
        p = replace(params, beta=r.beta, delta=r.delta)
        for frozen_at in (0.0, 5.0):
            teams = simulate(p, frozen_at, mode=mode).teams
            ys = [reprice_output(teams, p, k) for k in ka]
            v = _rise_violation(ys)
            ev[(r.short, frozen_at)] = (ys[0], ys[-1])
            worst = max(worst, v)
    return PropositionResult("P1", _status(worst), worst, ev)


def _p2(params: ModelParams, ka: Sequence[float]) -> PropositionResult:
    if params.gamma == 0:
        return PropositionResult("P2", "vacuous (gamma=0)")
    worst, ev = 0.0, {}
    skills = manager_skills(params)
    for r in REGIMES:
        p = replace(params, beta=r.beta)
        per_k = [[span(c) for c in manager_costs(p, k)] for k in ka]
        for i in range(len(skills)):
            worst = max(worst, _rise_violation([row[i] for row in per_k]))
        if r.beta > 0 and len(skills) > 1:
            top = max(range(len(skills)), key=skills.__getitem__)
            bottom = min(range(len(skills)), key=skills.__getitem__)
            gaps = [row[top] - row[bottom] for row in per_k]
            worst = max(worst, _rise_violation(gaps))
            ev[r.short] = {"skill_gap_first": gaps[0], "skill_gap_last": gaps[-1]}
    return PropositionResult("P2", _status(worst), worst, ev)


def _p3(params: ModelParams, ka: Sequence[float]) -> PropositionResult:
    if params.gamma == 0:
        return PropositionResult("P3", "vacuous (gamma=0)")
    if params.c0 >= 1:
        return PropositionResult("P3", "vacuous (c0>=1, S(0)<=1)")
    N = params.n_workers
    demand = [manager_demand(N, (1.0 + params.gamma * k) / params.c0) for k in ka]
    worst = _rise_violation([-m for m in demand])
    ev = {"M_first": demand[0], "M_last": demand[-1]}
    for r in REGIMES:
        p = replace(params, beta=r.beta)
        D = [math.fsum(span(c) for c in manager_costs(p, k)) for k in ka]
        worst = max(worst, _rise_violation(D))
        ev[r.short] = (D[0], D[-1])
    return PropositionResult("P3", _status(worst), worst, ev)


def _p4(params: ModelParams, ka: Sequence[float], mode: Mode) -> PropositionResult:
    worst_ratio = 0.0
    worst_gini = 0.0
    worst_lorenz = 0.0
    pam_dip = 0.0
    ev = {}
    skills = manager_skills(params)
    for r in (x for x in REGIMES if x.beta > 0):
        p = replace(params, beta=r.beta, delta=r.delta)
        ginis = []
        for k in ka:
            w = oracle_manager_wages(p, k)
            ginis.append(gini(w))
            for i, j in combinations(range(len(w)), 2):
                closed = (
                    (1 + p.gamma * k * skills[i] ** p.beta) / (1 + p.gamma * k * skills[j] ** p.beta)
                ) ** p.alpha
                worst_ratio = max(worst_ratio, abs(w[i] / w[j] - closed) / closed)
        worst_gini = max(worst_gini, _rise_violation(ginis, strict=False))
        if p.gamma > 0:
            low = dict(lorenz(oracle_manager_wages(p, 3.0)))
            high = dict(lorenz(oracle_manager_wages(p, 6.0)))
            worst_lorenz = max(worst_lorenz, max(high[x] - low[x] for x in low))
        pam = [gini(simulate(p, k, mode=mode).manager_wages) for k in ka]
        pam_dip = max(pam_dip, _rise_violation(pam, strict=False))
        ev[r.short] = {"oracle_gini": (ginis[0], ginis[-1]), "pam_gini": (pam[0], pam[-1])}
    ev.update(
        wage_ratio_rel_error=worst_ratio,
        lorenz_excess=worst_lorenz,
        pam_gini_largest_dip=pam_dip,
    )
    worst = max(worst_ratio if worst_ratio > 1e-9 else 0.0, worst_gini, max(worst_lorenz, 0.0))
    if params.gamma == 0 and worst == 0.0:
        return PropositionResult("P4", "vacuous (gamma=0)", 0.0, ev)
    return PropositionResult("P4", _status(worst), worst, ev)


def _p5(params: ModelParams, ka: Sequence[float], mode: Mode) -> PropositionResult:
    worst, ev = 0.0, {}
    for r in REGIMES:
        p = replace(params, beta=r.beta, delta=r.delta)
        T = [task_frontier(p.T0, p.delta, k) for k in ka]
        if p.delta > 0:
            worst = max(worst, _rise_violation(T))
        elif any(t != p.T0 for t in T):
            worst = max(worst, max(abs(t - p.T0) for t in T))
        E = [simulate(p, k, mode=mode).employed for k in ka]
        u = [1.0 - e / p.n_workers for e in E]
        worst = max(worst, _rise_violation(E, strict=False), _rise_violation([-x for x in u], strict=False))
        if p.delta == 0:
            worst = max(worst, max(0, max(E) - math.floor(p.T0)))
        ev[r.short] = {"frontier": "increasing" if p.delta > 0 else "constant", "employed": (E[0], E[-1])}
    return PropositionResult("P5", _status(worst), worst, ev)


def check_propositions(
    params: ModelParams,
    ka_grid: Optional[Sequence[float]] = None,
    mode: Mode = "pam",
) -> PropositionReport:
    """Evaluate P1-P5 on the K_A grid. Failures are recorded, never raised."""
    ka = default_ka_grid() if ka_grid is None else list(ka_grid)
    return PropositionReport([
        _p1(params, ka, mode),
        _p2(params, ka),
        _p3(params, ka),
        _p4(params, ka, mode),
        _p5(params, ka, mode),
    ])
