"""One economy at a given agent-capital level.

Pipeline: manager spans -> employment cap -> largest-remainder headcounts ->
worker assignment (PAM or seeded random) -> team output -> wage vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Literal, Optional, Sequence

from .model import (
    DomainError,
    ModelParams,
    Team,
    coordination_cost,
    span,
    task_frontier,
)
from .population import make_managers, make_workers
from .rng import SplitMix64

Mode = Literal["pam", "random"]

# relative guard so 200 * (1 + 0.3 * 0.6000000000000001) style products floor correctly
_FLOOR_GUARD = 1e-9


def round_half_up(x: float) -> int:
    return math.floor(x + 0.5)


def employment(spans: Sequence[float], T: float, N: int) -> int:
    """Employed headcount: min(total capacity rounded half-up, floor(frontier), pool)."""
    if any(s <= 0 for s in spans):
        raise DomainError("spans must be > 0")
    if T <= 0:
        raise DomainError(f"task frontier must be > 0, got {T}")
    capacity = round_half_up(math.fsum(spans))
    ceiling = math.floor(T * (1.0 + _FLOOR_GUARD))
    return max(0, min(capacity, ceiling, int(N)))


def allocate_largest_remainder(
    spans: Sequence[float], E: int, skills: Optional[Sequence[float]] = None
) -> list[int]:
    """Integer headcounts proportional to spans that sum to exactly E.

    Equal fractional remainders go to the higher-skill manager first, then the
    lower index.
    """
    if E < 0:
        raise DomainError(f"employment must be >= 0, got {E}")
    if any(s <= 0 for s in spans):
        raise DomainError("spans must be > 0")
    total = math.fsum(spans)
    quotas = [E * s / total for s in spans]
    counts = [math.floor(q) for q in quotas]
    leftover = E - sum(counts)
    if skills is None:
        skills = [0.0] * len(spans)
    # remainders rounded so numerically equal quotas tie exactly
    order = sorted(
        range(len(spans)),
        key=lambda i: (-round(quotas[i] - counts[i], 12), -skills[i], i),
    )
    for i in order[:leftover]:
        counts[i] += 1
    return counts


def assign_workers(
    counts: Sequence[int],
    worker_skills: Sequence[float],
    mode: Mode = "pam",
    seed: int = 2026,
    priority: Optional[Sequence[float]] = None,
) -> list[tuple[float, ...]]:
    """Fill each manager's headcount from the worker pool.

    ``pam`` hands contiguous blocks of the best remaining workers to managers
    in descending ``priority`` (effective agent capital), ties by index.
    ``random`` shuffles the pool with a seeded SplitMix64 and deals blocks in
    manager index order. Returns worker skills per manager, in manager order.
    """
    if sum(counts) > len(worker_skills):
        raise DomainError(f"{sum(counts)} slots exceed a pool of {len(worker_skills)} workers")
    if priority is None:
        priority = [0.0] * len(counts)
    if mode == "pam":
        pool = sorted(worker_skills, reverse=True)
        managers = sorted(range(len(counts)), key=lambda i: (-priority[i], i))
    elif mode == "random":
        pool = list(_shuffled(tuple(worker_skills), seed))
        managers = list(range(len(counts)))
    else:
        raise ValueError(f"unknown assignment mode {mode!r}")
    teams: list[tuple[float, ...]] = [()] * len(counts)
    pos = 0
    for i in managers:
        block = pool[pos:pos + counts[i]]
        pos += counts[i]
        # members stored ascending so wage vectors are order-stable
        teams[i] = tuple(sorted(block))
    return teams


@lru_cache(maxsize=64)
def _shuffled(pool: tuple[float, ...], seed: int) -> tuple[float, ...]:
    out = list(pool)
    SplitMix64(seed).shuffle(out)
    return tuple(out)


@dataclass(frozen=True)
class EconomySnapshot:
    K_A: float
    params: ModelParams
    teams: tuple[Team, ...]
    spans: tuple[float, ...]
    frontier: float
    manager_wages: tuple[float, ...]
    worker_wages: tuple[float, ...]
    unemployed_count: int
    total_output: float
    employed: int

    def incomes(self) -> list[float]:
        """Every individual's income: managers, employed workers, then zeros."""
        return [*self.manager_wages, *self.worker_wages, *([0.0] * self.unemployed_count)]

    @property
    def capacity(self) -> float:
        """Total supervisory capacity, the sum of spans."""
        return math.fsum(self.spans)

    @property
    def wage_gap(self) -> float:
        """Mean manager wage over mean employed-worker wage (NaN with no employment)."""
        if not self.worker_wages:
            return math.nan
        m = math.fsum(self.manager_wages) / len(self.manager_wages)
        w = math.fsum(self.worker_wages) / len(self.worker_wages)
        return m / w


def manager_skills(params: ModelParams) -> tuple[float, ...]:
    if params.n_managers == 1 or params.manager_skill_min == params.manager_skill_max:
        return (params.manager_skill_max,) * params.n_managers
    return make_managers(params.n_managers, params.manager_skill_min, params.manager_skill_max).values


def manager_costs(params: ModelParams, K_A: float) -> list[float]:
    return [coordination_cost(params.c0, params.gamma, K_A, s, params.beta) for s in manager_skills(params)]


def simulate(
    params: ModelParams,
    K_A: float,
    beta: Optional[float] = None,
    delta: Optional[float] = None,
    mode: Mode = "pam",
) -> EconomySnapshot:
    """Full snapshot at agent capital ``K_A``; ``beta``/``delta`` override the params."""
    if beta is not None or delta is not None:
        params = replace(
            params,
            beta=params.beta if beta is None else beta,
            delta=params.delta if delta is None else delta,
        )
    if not math.isfinite(K_A) or K_A < 0:
        raise DomainError(f"K_A must be finite and >= 0, got {K_A}")

    skills = manager_skills(params)
    workers = make_workers(params.n_workers, *params.worker_skill_dist)
    costs = manager_costs(params, K_A)
    spans = [span(c) for c in costs]
    T = task_frontier(params.T0, params.delta, K_A)
    E = employment(spans, T, params.n_workers)
    counts = allocate_largest_remainder(spans, E, skills)
    keff = [K_A * (1.0 if params.beta == 0 else s**params.beta) for s in skills]
    members = assign_workers(counts, workers.values, mode, params.seed, keff)

    teams = tuple(
        Team(s, m, c, A=params.A, alpha=params.alpha) for s, m, c in zip(skills, members, costs)
    )
    mwages: list[float] = []
    wwages: list[float] = []
    for t in teams:
        mw, ww = t.wages()
        mwages.append(mw)
        wwages.extend(ww)
    return EconomySnapshot(
        K_A=K_A,
        params=params,
        teams=teams,
        spans=tuple(spans),
        frontier=T,
        manager_wages=tuple(mwages),
        worker_wages=tuple(wwages),
        unemployed_count=params.n_workers - E,
        total_output=math.fsum(t.output for t in teams),
        employed=E,
    )


def reprice_output(teams: Sequence[Team], params: ModelParams, K_A: float) -> float:
    """Total output of fixed teams re-evaluated under the costs at ``K_A``."""
    return math.fsum(
        t.with_cost(coordination_cost(params.c0, params.gamma, K_A, t.manager_skill, params.beta)).output
        for t in teams
    )
